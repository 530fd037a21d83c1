//! The Morita-equivalence moves: (S) remove a regular source, (R) reduce at
//! a vertex with one out-edge and one emitter, (O) outsplit at a non-sink,
//! (I) insplit at a non-source, (C) the Cuntz splice, (P) eclosure of a
//! cyclic component, plus the inverses of (S) and (R).
//!
//! Every move validates its hypotheses first and then builds a fresh
//! digraph; inputs are never mutated. New vertices and edges get
//! deterministic names (`v^1`, `e^2`, `u1@v`, `e·f`, `bar(e)@w`, ...) with
//! collision checks, so outputs serialize identically run over run. Moves
//! (C) and (P) append their new vertices last; the skew-type matrices of the
//! spliced digraph then carry the original matrix as a leading block with
//! zero fill, which is what makes the skew spectra checkable entrywise.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::digraph::{fresh_id, Digraph};

/// Discriminates the move families for diagnostics and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    S,
    SInverse,
    R,
    RInverse,
    O,
    I,
    C,
    CSet,
    P,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::S => "S",
            MoveKind::SInverse => "S⁻¹",
            MoveKind::R => "R",
            MoveKind::RInverse => "R⁻¹",
            MoveKind::O => "O",
            MoveKind::I => "I",
            MoveKind::C => "C",
            MoveKind::CSet => "C(set)",
            MoveKind::P => "P",
        };
        f.write_str(s)
    }
}

/// One concrete move instance: the kind plus its site parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveApplication {
    /// Remove the regular source `source` and all edges it emits.
    S { source: String },
    /// Adjoin a new source `new_vertex` with one edge per target (a
    /// multiset: repeated targets give parallel edges).
    SInverse {
        new_vertex: String,
        targets: Vec<String>,
    },
    /// Collapse `vertex`, which emits exactly one edge and receives only
    /// from a single other vertex.
    R { vertex: String },
    /// Replace the listed parallel edges (all sharing one source and one
    /// range) by a detour through a new vertex.
    RInverse {
        new_vertex: String,
        edges: Vec<String>,
    },
    /// Outsplit at `vertex` along an ordered partition of its out-edges.
    O {
        vertex: String,
        partition: Vec<Vec<String>>,
    },
    /// Insplit at `vertex` along an ordered partition of its in-edges.
    I {
        vertex: String,
        partition: Vec<Vec<String>>,
    },
    /// Cuntz splice at `vertex`. With `force`, the two-return-paths
    /// hypothesis is skipped: the construction is defined at any vertex,
    /// the hypothesis is only needed for Morita equivalence.
    C { vertex: String, force: bool },
    /// Cuntz splice at each vertex of a set, in vertex order.
    CSet { vertices: Vec<String>, force: bool },
    /// Eclosure at `vertex`.
    P { vertex: String },
}

impl MoveApplication {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveApplication::S { .. } => MoveKind::S,
            MoveApplication::SInverse { .. } => MoveKind::SInverse,
            MoveApplication::R { .. } => MoveKind::R,
            MoveApplication::RInverse { .. } => MoveKind::RInverse,
            MoveApplication::O { .. } => MoveKind::O,
            MoveApplication::I { .. } => MoveKind::I,
            MoveApplication::C { .. } => MoveKind::C,
            MoveApplication::CSet { .. } => MoveKind::CSet,
            MoveApplication::P { .. } => MoveKind::P,
        }
    }
}

/// Which hypothesis of a move failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationClause {
    NotASource,
    NotRegular,
    OutDegreeNotOne,
    NoUniqueEmitter,
    EmitterIsSelf,
    IsASink,
    IsASource,
    FewerThanTwoReturnPaths,
    NoLoop,
    ExtraReturnPath,
    LoopHasNoExit,
    TargetNotRegular,
    TargetFewerThanTwoReturnPaths,
}

/// A move whose hypotheses do not hold at the requested site.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("move ({kind}) precondition failed: {detail}")]
pub struct PreconditionViolation {
    pub kind: MoveKind,
    pub clause: ViolationClause,
    pub detail: String,
}

/// Errors from move application. Unknown identifiers and malformed
/// parameters are reported separately from hypothesis violations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("identifier `{0}` already names a vertex")]
    IdentifierClash(String),
    #[error("target multiset must be nonempty")]
    EmptyTargets,
    #[error("edge set must be nonempty")]
    EmptyEdgeSet,
    #[error("edges do not share a single source and range: {0}")]
    EdgesNotParallel(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Violation(#[from] PreconditionViolation),
}

fn violation(kind: MoveKind, clause: ViolationClause, detail: impl Into<String>) -> MoveError {
    MoveError::Violation(PreconditionViolation {
        kind,
        clause,
        detail: detail.into(),
    })
}

fn require_vertex(d: &Digraph, id: &str) -> Result<usize, MoveError> {
    d.vertex_position(id)
        .ok_or_else(|| MoveError::UnknownVertex(id.into()))
}

/// Validates an ordered partition against the edge set `domain` (edge
/// indices): blocks nonempty, disjoint, covering, and drawn from `domain`.
/// Returns the block index of each domain edge keyed by edge index.
fn validate_partition(
    d: &Digraph,
    partition: &[Vec<String>],
    domain: &[usize],
    what: &str,
) -> Result<Vec<(usize, usize)>, MoveError> {
    if partition.is_empty() {
        return Err(MoveError::InvalidPartition(
            "partition must have at least one block".into(),
        ));
    }
    let mut assignment: Vec<(usize, usize)> = Vec::new();
    for (block_idx, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(MoveError::InvalidPartition(format!(
                "block {} is empty",
                block_idx + 1
            )));
        }
        for id in block {
            let edge = d
                .edge_position(id)
                .ok_or_else(|| MoveError::UnknownEdge(id.clone()))?;
            if !domain.contains(&edge) {
                return Err(MoveError::InvalidPartition(format!(
                    "edge `{id}` is not in {what}"
                )));
            }
            if assignment.iter().any(|&(e, _)| e == edge) {
                return Err(MoveError::InvalidPartition(format!(
                    "edge `{id}` appears in two blocks"
                )));
            }
            assignment.push((edge, block_idx));
        }
    }
    if assignment.len() != domain.len() {
        return Err(MoveError::InvalidPartition(format!(
            "blocks cover {} of {} edges in {what}",
            assignment.len(),
            domain.len()
        )));
    }
    Ok(assignment)
}

/// Checks the hypotheses of a move without applying it.
pub fn check_precondition(d: &Digraph, m: &MoveApplication) -> Result<(), MoveError> {
    match m {
        MoveApplication::S { source } => {
            let quad = d
                .degrees(source)
                .map_err(|_| MoveError::UnknownVertex(source.clone()))?;
            if quad.d_out == 0 {
                return Err(violation(
                    MoveKind::S,
                    ViolationClause::NotRegular,
                    format!("`{source}` emits no edges"),
                ));
            }
            if quad.d_in != 0 {
                return Err(violation(
                    MoveKind::S,
                    ViolationClause::NotASource,
                    format!("`{source}` receives {} edges", quad.d_in),
                ));
            }
            Ok(())
        }
        MoveApplication::SInverse {
            new_vertex,
            targets,
        } => {
            if d.has_vertex(new_vertex) {
                return Err(MoveError::IdentifierClash(new_vertex.clone()));
            }
            if targets.is_empty() {
                return Err(MoveError::EmptyTargets);
            }
            for t in targets {
                require_vertex(d, t)?;
            }
            Ok(())
        }
        MoveApplication::R { vertex } => {
            let v = require_vertex(d, vertex)?;
            let out = d.out_edge_indices(v);
            if out.is_empty() {
                return Err(violation(
                    MoveKind::R,
                    ViolationClause::NotRegular,
                    format!("`{vertex}` emits no edges"),
                ));
            }
            if out.len() != 1 {
                return Err(violation(
                    MoveKind::R,
                    ViolationClause::OutDegreeNotOne,
                    format!("`{vertex}` emits {} edges", out.len()),
                ));
            }
            let emitters: BTreeSet<usize> = d
                .in_edge_indices(v)
                .into_iter()
                .map(|e| d.endpoints(e).0)
                .collect();
            if emitters.len() != 1 {
                return Err(violation(
                    MoveKind::R,
                    ViolationClause::NoUniqueEmitter,
                    format!("`{vertex}` receives from {} vertices", emitters.len()),
                ));
            }
            if emitters.contains(&v) {
                // A lone loop at the vertex: collapsing would leave the
                // merged edge dangling, so this site is rejected.
                return Err(violation(
                    MoveKind::R,
                    ViolationClause::EmitterIsSelf,
                    format!("`{vertex}` receives only from itself"),
                ));
            }
            Ok(())
        }
        MoveApplication::RInverse { new_vertex, edges } => {
            if d.has_vertex(new_vertex) {
                return Err(MoveError::IdentifierClash(new_vertex.clone()));
            }
            if edges.is_empty() {
                return Err(MoveError::EmptyEdgeSet);
            }
            let mut endpoints = None;
            for id in edges {
                let e = d
                    .edge_position(id)
                    .ok_or_else(|| MoveError::UnknownEdge(id.clone()))?;
                let pair = d.endpoints(e);
                match endpoints {
                    None => endpoints = Some(pair),
                    Some(p) if p == pair => {}
                    Some(_) => {
                        return Err(MoveError::EdgesNotParallel(format!(
                            "edge `{id}` has different endpoints"
                        )))
                    }
                }
            }
            Ok(())
        }
        MoveApplication::O { vertex, partition } => {
            let v = require_vertex(d, vertex)?;
            let out = d.out_edge_indices(v);
            if out.is_empty() {
                return Err(violation(
                    MoveKind::O,
                    ViolationClause::IsASink,
                    format!("`{vertex}` is a sink"),
                ));
            }
            validate_partition(d, partition, &out, "the out-edge set")?;
            Ok(())
        }
        MoveApplication::I { vertex, partition } => {
            let v = require_vertex(d, vertex)?;
            let into = d.in_edge_indices(v);
            if into.is_empty() {
                return Err(violation(
                    MoveKind::I,
                    ViolationClause::IsASource,
                    format!("`{vertex}` is a source"),
                ));
            }
            validate_partition(d, partition, &into, "the in-edge set")?;
            Ok(())
        }
        MoveApplication::C { vertex, force } => check_cuntz_site(d, vertex, *force),
        MoveApplication::CSet { vertices, force } => {
            for v in vertices {
                check_cuntz_site(d, v, *force)?;
            }
            Ok(())
        }
        MoveApplication::P { vertex } => {
            let v = require_vertex(d, vertex)?;
            let has_loop = d
                .out_edge_indices(v)
                .iter()
                .any(|&e| d.endpoints(e) == (v, v));
            if !has_loop {
                return Err(violation(
                    MoveKind::P,
                    ViolationClause::NoLoop,
                    format!("`{vertex}` supports no loop"),
                ));
            }
            let paths = d
                .return_path_count_capped(vertex, 2)
                .expect("vertex exists");
            if paths != 1 {
                return Err(violation(
                    MoveKind::P,
                    ViolationClause::ExtraReturnPath,
                    format!("`{vertex}` supports a return path other than its loop"),
                ));
            }
            if !d.loop_has_exit(vertex).expect("loop exists") {
                return Err(violation(
                    MoveKind::P,
                    ViolationClause::LoopHasNoExit,
                    format!("the loop at `{vertex}` has no exit"),
                ));
            }
            for w in eclosure_targets(d, v) {
                let w_id = &d.vertex_ids()[w];
                let quad = d.degrees(w_id).expect("vertex exists");
                if quad.d_out == 0 {
                    return Err(violation(
                        MoveKind::P,
                        ViolationClause::TargetNotRegular,
                        format!("target `{w_id}` is not regular"),
                    ));
                }
                if d.return_path_count_capped(w_id, 2).expect("vertex exists") < 2 {
                    return Err(violation(
                        MoveKind::P,
                        ViolationClause::TargetFewerThanTwoReturnPaths,
                        format!("target `{w_id}` supports fewer than two return paths"),
                    ));
                }
            }
            Ok(())
        }
    }
}

fn check_cuntz_site(d: &Digraph, vertex: &str, force: bool) -> Result<(), MoveError> {
    let quad = d
        .degrees(vertex)
        .map_err(|_| MoveError::UnknownVertex(vertex.into()))?;
    if quad.d_out == 0 {
        return Err(violation(
            MoveKind::C,
            ViolationClause::NotRegular,
            format!("`{vertex}` emits no edges"),
        ));
    }
    if !force && d.return_path_count_capped(vertex, 2).expect("vertex exists") < 2 {
        return Err(violation(
            MoveKind::C,
            ViolationClause::FewerThanTwoReturnPaths,
            format!("`{vertex}` supports fewer than two return paths"),
        ));
    }
    Ok(())
}

/// The set `S` of eclosure: vertices other than `v` receiving an edge from
/// `v`, in vertex order.
fn eclosure_targets(d: &Digraph, v: usize) -> Vec<usize> {
    let mut targets: Vec<usize> = d
        .out_edge_indices(v)
        .into_iter()
        .map(|e| d.endpoints(e).1)
        .filter(|&w| w != v)
        .collect();
    targets.sort_unstable();
    targets.dedup();
    targets
}

/// Applies a move after checking its hypotheses.
pub fn apply_move(d: &Digraph, m: &MoveApplication) -> Result<Digraph, MoveError> {
    check_precondition(d, m)?;
    let result = match m {
        MoveApplication::S { source } => {
            let v = d.vertex_position(source).expect("checked");
            let vertices: Vec<String> = d
                .vertex_ids()
                .iter()
                .filter(|id| id.as_str() != source)
                .cloned()
                .collect();
            let edges = d
                .edge_triples()
                .filter(|(_, s, _)| *s != source)
                .map(|(e, s, r)| (e.to_owned(), s.to_owned(), r.to_owned()))
                .collect::<Vec<_>>();
            let _ = v;
            Digraph::new(vertices, edges)
        }
        MoveApplication::SInverse {
            new_vertex,
            targets,
        } => {
            let mut vertices: Vec<String> = d.vertex_ids().to_vec();
            vertices.push(new_vertex.clone());
            let mut edges: Vec<(String, String, String)> = d
                .edge_triples()
                .map(|(e, s, r)| (e.to_owned(), s.to_owned(), r.to_owned()))
                .collect();
            for (k, target) in targets.iter().enumerate() {
                let taken = |id: &str| d.has_edge(id) || edges.iter().any(|(e, _, _)| e == id);
                let id = fresh_id(format!("{new_vertex}.{}", k + 1), &taken);
                edges.push((id, new_vertex.clone(), target.clone()));
            }
            Digraph::new(vertices, edges)
        }
        MoveApplication::R { vertex } => {
            let v = d.vertex_position(vertex).expect("checked");
            let f = d.out_edge_indices(v)[0];
            let (_, f_range) = d.endpoints(f);
            let f_id: String = d.edge_ids().nth(f).expect("edge exists").to_owned();
            let incoming = d.in_edge_indices(v);
            let u = d.endpoints(incoming[0]).0;
            let vertices: Vec<String> = d
                .vertex_ids()
                .iter()
                .filter(|id| id.as_str() != vertex)
                .cloned()
                .collect();
            let mut edges: Vec<(String, String, String)> = d
                .edge_triples()
                .enumerate()
                .filter(|(i, _)| *i != f && !incoming.contains(i))
                .map(|(_, (e, s, r))| (e.to_owned(), s.to_owned(), r.to_owned()))
                .collect();
            for &e in &incoming {
                let e_id: String = d.edge_ids().nth(e).expect("edge exists").to_owned();
                let taken = |id: &str| edges.iter().any(|(x, _, _)| x == id);
                let id = fresh_id(format!("{e_id}·{f_id}"), &taken);
                edges.push((
                    id,
                    d.vertex_ids()[u].clone(),
                    d.vertex_ids()[f_range].clone(),
                ));
            }
            let _ = v;
            Digraph::new(vertices, edges)
        }
        MoveApplication::RInverse { new_vertex, edges } => {
            let positions: Vec<usize> = edges
                .iter()
                .map(|id| d.edge_position(id).expect("checked"))
                .collect();
            let (u, w) = d.endpoints(positions[0]);
            let mut vertices: Vec<String> = d.vertex_ids().to_vec();
            vertices.push(new_vertex.clone());
            let mut kept: Vec<(String, String, String)> = d
                .edge_triples()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, (e, s, r))| (e.to_owned(), s.to_owned(), r.to_owned()))
                .collect();
            for id in edges {
                let taken = |x: &str| d.has_edge(x) || kept.iter().any(|(e, _, _)| e == x);
                let fresh = fresh_id(format!("{id}@{new_vertex}"), &taken);
                kept.push((fresh, d.vertex_ids()[u].clone(), new_vertex.clone()));
            }
            let taken = |x: &str| d.has_edge(x) || kept.iter().any(|(e, _, _)| e == x);
            let out_id = fresh_id(format!("{new_vertex}.out"), &taken);
            kept.push((out_id, new_vertex.clone(), d.vertex_ids()[w].clone()));
            Digraph::new(vertices, kept)
        }
        MoveApplication::O { vertex, partition } => Ok(outsplit(d, vertex, partition)),
        MoveApplication::I { vertex, partition } => Ok(insplit(d, vertex, partition)),
        MoveApplication::C { vertex, .. } => Ok(cuntz_splice(d, vertex)),
        MoveApplication::CSet { vertices, .. } => {
            let mut order: Vec<usize> = vertices
                .iter()
                .map(|v| d.vertex_position(v).expect("checked"))
                .collect();
            order.sort_unstable();
            order.dedup();
            let mut current = d.clone();
            for v in order {
                let id = d.vertex_ids()[v].clone();
                current = cuntz_splice(&current, &id);
            }
            Ok(current)
        }
        MoveApplication::P { vertex } => Ok(eclose(d, vertex)),
    };
    Ok(result.expect("move construction preserves digraph invariants"))
}

/// Outsplit: the vertex becomes one copy per partition block; in-edges are
/// copied once per block, out-edges keep their identity and move to the
/// copy owning their block.
fn outsplit(d: &Digraph, vertex: &str, partition: &[Vec<String>]) -> Digraph {
    let v = d.vertex_position(vertex).expect("checked");
    let out = d.out_edge_indices(v);
    let assignment = validate_partition(d, partition, &out, "the out-edge set").expect("checked");
    let block_of = |edge: usize| -> usize {
        assignment
            .iter()
            .find(|&&(e, _)| e == edge)
            .expect("edge in partition")
            .1
    };
    let n = partition.len();
    let taken_vertex = |id: &str| d.has_vertex(id);
    let copies: Vec<String> = (1..=n)
        .map(|i| fresh_id(format!("{vertex}^{i}"), &taken_vertex))
        .collect();
    let mut vertices: Vec<String> = Vec::with_capacity(d.vertex_count() + n - 1);
    for id in d.vertex_ids() {
        if id == vertex {
            vertices.extend(copies.iter().cloned());
        } else {
            vertices.push(id.clone());
        }
    }
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for (idx, (e_id, s_id, r_id)) in d.edge_triples().enumerate() {
        let (s, r) = d.endpoints(idx);
        if r == v {
            // replaced by one copy per block, ranges fanned out
            let source_block = (s == v).then(|| block_of(idx));
            for i in 0..n {
                let taken = |id: &str| {
                    d.has_edge(id) || edges.iter().any(|(x, _, _)| x == id)
                };
                let id = fresh_id(format!("{e_id}^{}", i + 1), &taken);
                let source = match source_block {
                    Some(b) => copies[b].clone(),
                    None => s_id.to_owned(),
                };
                edges.push((id, source, copies[i].clone()));
            }
        } else if s == v {
            edges.push((e_id.to_owned(), copies[block_of(idx)].clone(), r_id.to_owned()));
        } else {
            edges.push((e_id.to_owned(), s_id.to_owned(), r_id.to_owned()));
        }
    }
    Digraph::new(vertices, edges).expect("outsplit preserves invariants")
}

/// Insplit: dual to outsplit with the roles of sources and ranges swapped.
fn insplit(d: &Digraph, vertex: &str, partition: &[Vec<String>]) -> Digraph {
    let v = d.vertex_position(vertex).expect("checked");
    let into = d.in_edge_indices(v);
    let assignment = validate_partition(d, partition, &into, "the in-edge set").expect("checked");
    let block_of = |edge: usize| -> usize {
        assignment
            .iter()
            .find(|&&(e, _)| e == edge)
            .expect("edge in partition")
            .1
    };
    let n = partition.len();
    let taken_vertex = |id: &str| d.has_vertex(id);
    let copies: Vec<String> = (1..=n)
        .map(|i| fresh_id(format!("{vertex}^{i}"), &taken_vertex))
        .collect();
    let mut vertices: Vec<String> = Vec::with_capacity(d.vertex_count() + n - 1);
    for id in d.vertex_ids() {
        if id == vertex {
            vertices.extend(copies.iter().cloned());
        } else {
            vertices.push(id.clone());
        }
    }
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for (idx, (e_id, s_id, r_id)) in d.edge_triples().enumerate() {
        let (s, r) = d.endpoints(idx);
        if s == v {
            let range_block = (r == v).then(|| block_of(idx));
            for i in 0..n {
                let taken = |id: &str| {
                    d.has_edge(id) || edges.iter().any(|(x, _, _)| x == id)
                };
                let id = fresh_id(format!("{e_id}^{}", i + 1), &taken);
                let range = match range_block {
                    Some(b) => copies[b].clone(),
                    None => r_id.to_owned(),
                };
                edges.push((id, copies[i].clone(), range));
            }
        } else if r == v {
            edges.push((e_id.to_owned(), s_id.to_owned(), copies[block_of(idx)].clone()));
        } else {
            edges.push((e_id.to_owned(), s_id.to_owned(), r_id.to_owned()));
        }
    }
    Digraph::new(vertices, edges).expect("insplit preserves invariants")
}

/// Appends the splice gadget at `vertex`: two vertices `u1@v`, `u2@v` (in
/// this order, last in the vertex list) and the six edges of the splice.
fn cuntz_splice(d: &Digraph, vertex: &str) -> Digraph {
    let taken_vertex = |id: &str| d.has_vertex(id);
    let u1 = fresh_id(format!("u1@{vertex}"), &taken_vertex);
    let u2 = {
        let taken = |id: &str| d.has_vertex(id) || id == u1;
        fresh_id(format!("u2@{vertex}"), &taken)
    };
    let mut vertices: Vec<String> = d.vertex_ids().to_vec();
    vertices.push(u1.clone());
    vertices.push(u2.clone());
    let mut edges: Vec<(String, String, String)> = d
        .edge_triples()
        .map(|(e, s, r)| (e.to_owned(), s.to_owned(), r.to_owned()))
        .collect();
    let splice = [
        ("e1", vertex, u1.as_str()),
        ("e2", u1.as_str(), vertex),
        ("f1", u1.as_str(), u1.as_str()),
        ("f2", u1.as_str(), u2.as_str()),
        ("h1", u2.as_str(), u1.as_str()),
        ("h2", u2.as_str(), u2.as_str()),
    ];
    for (base, s, r) in splice {
        let taken = |id: &str| edges.iter().any(|(x, _, _)| x == id);
        let id = fresh_id(format!("{base}@{vertex}"), &taken);
        edges.push((id, s.to_owned(), r.to_owned()));
    }
    Digraph::new(vertices, edges).expect("splice preserves invariants")
}

/// Eclosure: splice every target of `vertex` in vertex order, then double
/// up each edge from `vertex` to a target as a pair into that target's
/// second splice vertex.
fn eclose(d: &Digraph, vertex: &str) -> Digraph {
    let v = d.vertex_position(vertex).expect("checked");
    let targets = eclosure_targets(d, v);
    let mut current = d.clone();
    let mut u2_of: Vec<(usize, String)> = Vec::new();
    for &w in &targets {
        let w_id = d.vertex_ids()[w].clone();
        current = cuntz_splice(&current, &w_id);
        let u2 = current.vertex_ids()[current.vertex_count() - 1].clone();
        u2_of.push((w, u2));
    }
    let mut vertices: Vec<String> = current.vertex_ids().to_vec();
    let mut edges: Vec<(String, String, String)> = current
        .edge_triples()
        .map(|(e, s, r)| (e.to_owned(), s.to_owned(), r.to_owned()))
        .collect();
    for (w, u2) in &u2_of {
        let w_id = &d.vertex_ids()[*w];
        for e in d.out_edge_indices(v) {
            if d.endpoints(e).1 != *w {
                continue;
            }
            let e_id: String = d.edge_ids().nth(e).expect("edge exists").to_owned();
            for marker in ["bar", "tilde"] {
                let taken = |id: &str| edges.iter().any(|(x, _, _)| x == id);
                let id = fresh_id(format!("{marker}({e_id})@{w_id}"), &taken);
                edges.push((id, vertex.to_owned(), u2.clone()));
            }
        }
    }
    let _ = &mut vertices;
    Digraph::new(vertices, edges).expect("eclosure preserves invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    fn d1() -> Digraph {
        d("vertices v1 v2 v3\n\
           edge a v1 v1\nedge b v1 v2\nedge c v1 v3\nedge d v1 v3\n\
           edge e v2 v2\nedge f v2 v2\nedge g v2 v3\nedge h v3 v3\n")
    }

    fn d2() -> Digraph {
        d("vertices v1 v2 v3\n\
           edge a v1 v1\nedge b v1 v2\nedge e v2 v2\nedge f v2 v2\n\
           edge g v2 v3\nedge h v3 v3\n")
    }

    fn d4() -> Digraph {
        d("vertices v1 v2\nedge a v1 v1\nedge b v1 v2\nedge c v2 v1\n")
    }

    fn s(x: &str) -> String {
        x.to_owned()
    }

    #[test]
    fn precondition_s_rejects_non_source() {
        let err = check_precondition(&d1(), &MoveApplication::S { source: s("v1") });
        assert!(matches!(
            err,
            Err(MoveError::Violation(PreconditionViolation {
                clause: ViolationClause::NotASource,
                ..
            }))
        ));
    }

    #[test]
    fn precondition_c_ok_on_d1_v2() {
        check_precondition(
            &d1(),
            &MoveApplication::C {
                vertex: s("v2"),
                force: false,
            },
        )
        .unwrap();
    }

    #[test]
    fn precondition_c_force_skips_return_paths_only() {
        let g = d("vertices a b\nedge e a b\nedge l b b\n");
        // `a` has one return path... zero, actually; force allows it anyway
        apply_move(
            &g,
            &MoveApplication::C {
                vertex: s("a"),
                force: true,
            },
        )
        .unwrap();
        let sink = d("vertices a b\nedge e a b\n");
        let err = check_precondition(
            &sink,
            &MoveApplication::C {
                vertex: s("b"),
                force: true,
            },
        );
        assert!(matches!(
            err,
            Err(MoveError::Violation(PreconditionViolation {
                clause: ViolationClause::NotRegular,
                ..
            }))
        ));
    }

    #[test]
    fn precondition_p_ok_on_d2_v1() {
        check_precondition(&d2(), &MoveApplication::P { vertex: s("v1") }).unwrap();
    }

    #[test]
    fn precondition_p_rejects_d1_sites() {
        for v in ["v1", "v2", "v3"] {
            assert!(check_precondition(&d1(), &MoveApplication::P { vertex: s(v) }).is_err());
        }
    }

    #[test]
    fn s_inverse_then_s_round_trips() {
        let g = d1();
        let app = MoveApplication::SInverse {
            new_vertex: s("v_s"),
            targets: vec![s("v1"), s("v2"), s("v3")],
        };
        let with_source = apply_move(&g, &app).unwrap();
        assert_eq!(with_source.vertex_count(), 4);
        assert_eq!(with_source.edge_count(), 11);
        assert!(!with_source.is_strongly_connected());
        let back = apply_move(&with_source, &MoveApplication::S { source: s("v_s") }).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn s_on_two_vertex_source() {
        let g = d("vertices vs v\nedge e vs v\n");
        let out = apply_move(&g, &MoveApplication::S { source: s("vs") }).unwrap();
        assert_eq!(out.vertex_count(), 1);
        assert_eq!(out.edge_count(), 0);
    }

    #[test]
    fn r_collapses_d4_to_two_loops() {
        let out = apply_move(&d4(), &MoveApplication::R { vertex: s("v2") }).unwrap();
        assert_eq!(out.vertex_count(), 1);
        assert_eq!(out.edge_count(), 2);
        let loops: Vec<_> = out.edge_triples().collect();
        assert!(loops.iter().all(|(_, s, r)| s == r));
    }

    #[test]
    fn r_collapses_three_cycle_to_two_cycle() {
        let d5 = d("vertices v1 v2 v_r\nedge a v1 v2\nedge b v2 v_r\nedge c v_r v1\n");
        let out = apply_move(&d5, &MoveApplication::R { vertex: s("v_r") }).unwrap();
        assert_eq!(out.vertex_count(), 2);
        assert_eq!(out.edge_count(), 2);
        assert!(out.is_strongly_connected());
    }

    #[test]
    fn r_rejects_lone_loop_vertex() {
        let g = d("vertices a b\nedge l a a\nedge x b a\nedge y b b\n");
        // `a` emits one edge (its loop) but receives from both a and b
        assert!(matches!(
            check_precondition(&g, &MoveApplication::R { vertex: s("a") }),
            Err(MoveError::Violation(PreconditionViolation {
                clause: ViolationClause::NoUniqueEmitter,
                ..
            }))
        ));
        let lone = d("vertices a b\nedge l a a\nedge x b b\n");
        assert!(matches!(
            check_precondition(&lone, &MoveApplication::R { vertex: s("a") }),
            Err(MoveError::Violation(PreconditionViolation {
                clause: ViolationClause::EmitterIsSelf,
                ..
            }))
        ));
    }

    #[test]
    fn r_inverse_then_r_is_isomorphic() {
        let g = d1();
        let app = MoveApplication::RInverse {
            new_vertex: s("v_r"),
            edges: vec![s("e")],
        };
        let expanded = apply_move(&g, &app).unwrap();
        assert_eq!(expanded.vertex_count(), 4);
        assert_eq!(expanded.edge_count(), 9);
        let back = apply_move(&expanded, &MoveApplication::R { vertex: s("v_r") }).unwrap();
        // identical up to edge renaming; orders match position for position
        assert_eq!(back.vertex_ids(), g.vertex_ids());
        let mut g_pairs: Vec<_> = (0..g.edge_count()).map(|i| g.endpoints(i)).collect();
        let mut b_pairs: Vec<_> = (0..back.edge_count()).map(|i| back.endpoints(i)).collect();
        g_pairs.sort_unstable();
        b_pairs.sort_unstable();
        assert_eq!(g_pairs, b_pairs);
    }

    #[test]
    fn r_inverse_rejects_mixed_edges() {
        let err = apply_move(
            &d1(),
            &MoveApplication::RInverse {
                new_vertex: s("x"),
                edges: vec![s("b"), s("g")],
            },
        );
        assert!(matches!(err, Err(MoveError::EdgesNotParallel(_))));
    }

    #[test]
    fn outsplit_d1_matches_figure() {
        let app = MoveApplication::O {
            vertex: s("v1"),
            partition: vec![vec![s("a"), s("b")], vec![s("c"), s("d")]],
        };
        let out = apply_move(&d1(), &app).unwrap();
        assert_eq!(out.vertex_count(), 4);
        assert_eq!(out.edge_count(), 9);
        assert_eq!(
            out.vertex_ids(),
            &["v1^1", "v1^2", "v2", "v3"]
        );
        let triples: Vec<(String, String, String)> = out
            .edge_triples()
            .map(|(e, s, r)| (e.into(), s.into(), r.into()))
            .collect();
        // the loop at v1 fans out into a loop at v1^1 and an edge to v1^2
        assert!(triples.contains(&(s("a^1"), s("v1^1"), s("v1^1"))));
        assert!(triples.contains(&(s("a^2"), s("v1^1"), s("v1^2"))));
        assert!(triples.contains(&(s("b"), s("v1^1"), s("v2"))));
        assert!(triples.contains(&(s("c"), s("v1^2"), s("v3"))));
    }

    #[test]
    fn single_block_splits_are_isomorphisms() {
        let g = d1();
        let o = apply_move(
            &g,
            &MoveApplication::O {
                vertex: s("v1"),
                partition: vec![vec![s("a"), s("b"), s("c"), s("d")]],
            },
        )
        .unwrap();
        assert!(o.is_position_isomorphic(&g));
        let i = apply_move(
            &g,
            &MoveApplication::I {
                vertex: s("v2"),
                partition: vec![vec![s("b"), s("e"), s("f")]],
            },
        )
        .unwrap();
        assert!(i.is_position_isomorphic(&g));
    }

    #[test]
    fn insplit_d1_matches_figure() {
        let app = MoveApplication::I {
            vertex: s("v2"),
            partition: vec![vec![s("e"), s("b")], vec![s("f")]],
        };
        let out = apply_move(&d1(), &app).unwrap();
        assert_eq!(out.vertex_count(), 4);
        assert_eq!(out.edge_count(), 11);
        let triples: Vec<(String, String, String)> = out
            .edge_triples()
            .map(|(e, s, r)| (e.into(), s.into(), r.into()))
            .collect();
        assert!(triples.contains(&(s("b"), s("v1"), s("v2^1"))));
        assert!(triples.contains(&(s("e^1"), s("v2^1"), s("v2^1"))));
        assert!(triples.contains(&(s("e^2"), s("v2^2"), s("v2^1"))));
        assert!(triples.contains(&(s("f^1"), s("v2^1"), s("v2^2"))));
        assert!(triples.contains(&(s("f^2"), s("v2^2"), s("v2^2"))));
        assert!(triples.contains(&(s("g^1"), s("v2^1"), s("v3"))));
        assert!(triples.contains(&(s("g^2"), s("v2^2"), s("v3"))));
    }

    #[test]
    fn partition_validation_errors() {
        let g = d1();
        for partition in [
            vec![vec![s("a")]],                          // not covering
            vec![vec![s("a"), s("b")], vec![s("b")], vec![s("c"), s("d")]], // overlap
            vec![vec![]],                                // empty block
            vec![vec![s("a"), s("b"), s("c"), s("d"), s("e")]], // wrong domain
        ] {
            let err = apply_move(
                &g,
                &MoveApplication::O {
                    vertex: s("v1"),
                    partition,
                },
            );
            assert!(matches!(err, Err(MoveError::InvalidPartition(_))), "{err:?}");
        }
    }

    #[test]
    fn cuntz_splice_growth_and_shape() {
        let g = d1();
        let out = apply_move(
            &g,
            &MoveApplication::C {
                vertex: s("v2"),
                force: false,
            },
        )
        .unwrap();
        assert_eq!(out.vertex_count(), g.vertex_count() + 2);
        assert_eq!(out.edge_count(), g.edge_count() + 6);
        let ids = out.vertex_ids();
        assert_eq!(&ids[ids.len() - 2..], &["u1@v2", "u2@v2"]);
    }

    #[test]
    fn eclosure_d2_shape() {
        let out = apply_move(&d2(), &MoveApplication::P { vertex: s("v1") }).unwrap();
        assert_eq!(out.vertex_count(), 5);
        assert_eq!(out.edge_count(), 14);
        // the doubled edges both run from v1 to u2@v2
        let doubled: Vec<_> = out
            .edge_triples()
            .filter(|(_, s, r)| *s == "v1" && *r == "u2@v2")
            .collect();
        assert_eq!(doubled.len(), 2);
        assert!(!out.is_strongly_connected());
    }

    #[test]
    fn eclosure_edge_growth_formula() {
        let g = d2();
        let v = g.vertex_position("v1").unwrap();
        let targets = eclosure_targets(&g, v);
        let crossing: usize = targets
            .iter()
            .map(|&w| {
                g.out_edge_indices(v)
                    .iter()
                    .filter(|&&e| g.endpoints(e).1 == w)
                    .count()
            })
            .sum();
        let out = apply_move(&g, &MoveApplication::P { vertex: s("v1") }).unwrap();
        assert_eq!(
            out.edge_count(),
            g.edge_count() + 6 * targets.len() + 2 * crossing
        );
    }

    #[test]
    fn unknown_ids_are_errors_not_violations() {
        let g = d4();
        assert_eq!(
            check_precondition(&g, &MoveApplication::R { vertex: s("zz") }),
            Err(MoveError::UnknownVertex(s("zz")))
        );
        assert_eq!(
            apply_move(
                &g,
                &MoveApplication::O {
                    vertex: s("v1"),
                    partition: vec![vec![s("nope")]],
                }
            ),
            Err(MoveError::UnknownEdge(s("nope")))
        );
        assert_eq!(
            apply_move(
                &g,
                &MoveApplication::SInverse {
                    new_vertex: s("v1"),
                    targets: vec![s("v2")],
                }
            ),
            Err(MoveError::IdentifierClash(s("v1")))
        );
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        // a digraph that already uses the names the splice would pick
        let g = d("vertices v u1@v u2@v\nedge e1@v v v\nedge x v u1@v\nedge y u1@v v\nedge z u2@v v\n");
        let out = apply_move(
            &g,
            &MoveApplication::C {
                vertex: s("v"),
                force: true,
            },
        )
        .unwrap();
        assert_eq!(out.vertex_count(), 5);
        assert_eq!(out.edge_count(), 10);
        // all ids still pairwise distinct (Digraph::new enforces it)
    }
}
