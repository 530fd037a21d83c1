//! The digraph data model: ordered vertices and edges with source/range
//! maps, the text format, structural predicates, derived digraphs, and the
//! bounded return-path search.
//!
//! Vertex and edge identifiers are opaque strings. Ordering is authoritative:
//! every matrix indexes rows and columns by the order of `vertices` (or
//! `edges` for the line adjacency matrix), and derived digraphs define their
//! own orders by explicit rules so that downstream output is reproducible
//! bit for bit. Loops and parallel edges are permitted everywhere; the empty
//! digraph is legal.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Structural errors raised when constructing or querying a digraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge identifier `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("invalid identifier `{0}`: identifiers must be nonempty and contain no whitespace")]
    InvalidIdentifier(String),
    #[error("vertex `{0}` has no loop")]
    NoLoop(String),
}

/// Errors from the line-based text format, each tagged with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: duplicate vertex identifier `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: duplicate edge identifier `{id}`")]
    DuplicateEdge { line: usize, id: String },
    #[error("line {line}: unknown vertex `{id}` in edge declaration")]
    UnknownVertex { line: usize, id: String },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing `vertices` line")]
    MissingVertices,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    id: String,
    source: usize,
    range: usize,
}

/// A finite digraph with ordered vertex and edge lists.
///
/// Immutable after construction; all operations are pure functions of their
/// inputs, so values can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct Digraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
}

/// Source/sink/regular flags for one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexClassification {
    /// No edge has this vertex as range.
    pub is_source: bool,
    /// No edge has this vertex as source.
    pub is_sink: bool,
    /// The out-edge set is nonempty (finiteness is automatic here).
    pub is_regular: bool,
}

/// The four degree counts of one vertex: in/out edge counts and their
/// binary (distinct-neighbor) variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeQuad {
    pub d_in: usize,
    pub d_out: usize,
    pub d_bin: usize,
    pub d_bout: usize,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && !id.chars().any(char::is_whitespace)
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph from an ordered vertex list and an ordered edge list
    /// of `(edge id, source id, range id)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, DigraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if !valid_id(v) {
                return Err(DigraphError::InvalidIdentifier(v.clone()));
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(DigraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_ids = HashMap::new();
        let mut resolved = Vec::new();
        for (i, (id, src, dst)) in edges.into_iter().enumerate() {
            if !valid_id(&id) {
                return Err(DigraphError::InvalidIdentifier(id));
            }
            if edge_ids.insert(id.clone(), i).is_some() {
                return Err(DigraphError::DuplicateEdge(id));
            }
            let source = *vertex_index
                .get(&src)
                .ok_or(DigraphError::UnknownVertex(src))?;
            let range = *vertex_index
                .get(&dst)
                .ok_or(DigraphError::UnknownVertex(dst))?;
            resolved.push(Edge {
                id,
                source,
                range,
            });
        }
        Ok(Digraph {
            vertices,
            edges: resolved,
            vertex_index,
        })
    }

    /// Parses the line-based text format:
    ///
    /// ```text
    /// # optional comments
    /// vertices v1 v2 v3
    /// edge e1 v1 v2
    /// ```
    ///
    /// Exactly one `vertices` line (order-defining, may list zero vertices),
    /// followed by zero or more `edge <id> <source> <range>` lines.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edges: Vec<(String, String, String)> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        let mut vertex_line = 0usize;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            match tokens.next() {
                Some("vertices") => {
                    if vertices.is_some() {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "second `vertices` line".into(),
                        });
                    }
                    vertices = Some(tokens.map(str::to_owned).collect());
                    vertex_line = line;
                }
                Some("edge") => {
                    if vertices.is_none() {
                        return Err(ParseError::Malformed {
                            line,
                            msg: "`edge` line before the `vertices` line".into(),
                        });
                    }
                    let fields: Vec<&str> = tokens.collect();
                    if fields.len() != 3 {
                        return Err(ParseError::Malformed {
                            line,
                            msg: format!(
                                "expected `edge <id> <source> <range>`, got {} fields",
                                fields.len()
                            ),
                        });
                    }
                    edges.push((fields[0].into(), fields[1].into(), fields[2].into()));
                    edge_lines.push(line);
                }
                Some(other) => {
                    return Err(ParseError::Malformed {
                        line,
                        msg: format!("unknown directive `{other}`"),
                    });
                }
                None => unreachable!(),
            }
        }
        let vertices = vertices.ok_or(ParseError::MissingVertices)?;
        // Re-run the structural validation so errors carry line numbers.
        let mut seen = HashMap::new();
        for v in &vertices {
            if seen.insert(v.clone(), ()).is_some() {
                return Err(ParseError::DuplicateVertex {
                    line: vertex_line,
                    id: v.clone(),
                });
            }
        }
        let mut seen_edges = HashMap::new();
        for ((id, src, dst), line) in edges.iter().zip(&edge_lines) {
            if seen_edges.insert(id.clone(), ()).is_some() {
                return Err(ParseError::DuplicateEdge {
                    line: *line,
                    id: id.clone(),
                });
            }
            for endpoint in [src, dst] {
                if !seen.contains_key(endpoint) {
                    return Err(ParseError::UnknownVertex {
                        line: *line,
                        id: endpoint.clone(),
                    });
                }
            }
        }
        Digraph::new(vertices, edges).map_err(|e| ParseError::Malformed {
            line: vertex_line,
            msg: e.to_string(),
        })
    }

    /// Canonical serializer; `parse` is a left inverse of this.
    pub fn to_text(&self) -> String {
        let mut out = String::from("vertices");
        for v in &self.vertices {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str("edge ");
            out.push_str(&e.id);
            out.push(' ');
            out.push_str(&self.vertices[e.source]);
            out.push(' ');
            out.push_str(&self.vertices[e.range]);
            out.push('\n');
        }
        out
    }

    /// DOT export for visualization.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[e.source], self.vertices[e.range], e.id
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex identifiers in order.
    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    /// Edge identifiers in order.
    pub fn edge_ids(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(|e| e.id.as_str())
    }

    /// `(edge id, source id, range id)` triples in order.
    pub fn edge_triples(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.edges.iter().map(|e| {
            (
                e.id.as_str(),
                self.vertices[e.source].as_str(),
                self.vertices[e.range].as_str(),
            )
        })
    }

    pub fn vertex_position(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_position(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id)
    }

    pub fn has_edge(&self, id: &str) -> bool {
        self.edges.iter().any(|e| e.id == id)
    }

    /// Source and range positions of the edge at `index`.
    pub fn endpoints(&self, index: usize) -> (usize, usize) {
        let e = &self.edges[index];
        (e.source, e.range)
    }

    fn require_vertex(&self, id: &str) -> Result<usize, DigraphError> {
        self.vertex_position(id)
            .ok_or_else(|| DigraphError::UnknownVertex(id.into()))
    }

    /// Indices of edges with source `v` (by vertex position), in edge order.
    pub fn out_edge_indices(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].source == v)
            .collect()
    }

    /// Indices of edges with range `v` (by vertex position), in edge order.
    pub fn in_edge_indices(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].range == v)
            .collect()
    }

    /// The four degrees of Def 2.6-style bookkeeping: edge counts in and out,
    /// plus distinct-neighbor counts.
    pub fn degrees(&self, vertex: &str) -> Result<DegreeQuad, DigraphError> {
        let v = self.require_vertex(vertex)?;
        let mut d_in = 0;
        let mut d_out = 0;
        let mut in_sources: Vec<usize> = Vec::new();
        let mut out_ranges: Vec<usize> = Vec::new();
        for e in &self.edges {
            if e.range == v {
                d_in += 1;
                if !in_sources.contains(&e.source) {
                    in_sources.push(e.source);
                }
            }
            if e.source == v {
                d_out += 1;
                if !out_ranges.contains(&e.range) {
                    out_ranges.push(e.range);
                }
            }
        }
        Ok(DegreeQuad {
            d_in,
            d_out,
            d_bin: in_sources.len(),
            d_bout: out_ranges.len(),
        })
    }

    pub fn classify_vertex(&self, vertex: &str) -> Result<VertexClassification, DigraphError> {
        let d = self.degrees(vertex)?;
        Ok(VertexClassification {
            is_source: d.d_in == 0,
            is_sink: d.d_out == 0,
            is_regular: d.d_out > 0,
        })
    }

    /// The line digraph: vertices are this digraph's edges (same order),
    /// with one edge per composable pair `(e, f)`, `r(e) = s(f)`, ordered
    /// lexicographically by the positions of `e` and `f`.
    pub fn line_digraph(&self) -> Digraph {
        let vertices: Vec<String> = self.edges.iter().map(|e| e.id.clone()).collect();
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (j, f) in self.edges.iter().enumerate() {
                if e.range == f.source {
                    edges.push((
                        format!("({},{})", e.id, f.id),
                        vertices[i].clone(),
                        vertices[j].clone(),
                    ));
                }
            }
        }
        Digraph::new(vertices, edges).expect("line digraph construction cannot clash")
    }

    /// The unparalleled digraph: same vertices, one edge per nonempty
    /// `(source, range)` class, keeping the first edge of each class.
    pub fn unparalleled(&self) -> Digraph {
        let mut kept: Vec<(String, String, String)> = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for e in &self.edges {
            let key = (e.source, e.range);
            if !seen.contains(&key) {
                seen.push(key);
                kept.push((
                    e.id.clone(),
                    self.vertices[e.source].clone(),
                    self.vertices[e.range].clone(),
                ));
            }
        }
        Digraph::new(self.vertices.clone(), kept).expect("unparalleled keeps valid ids")
    }

    /// True iff there is a path between every ordered pair of vertices,
    /// computed by Tarjan's SCC traversal. A single vertex with no edges
    /// counts as strongly connected (the empty path joins it to itself);
    /// the empty digraph does not.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            adjacency[e.source].push(e.range);
        }
        tarjan_scc(&adjacency).len() == 1
    }

    /// Counts return paths based at `vertex` — cycles ending at `vertex`
    /// whose earlier edges avoid it — up to length `2 * |V|`, capped at
    /// `cap`. If at least two return paths of any length exist, two exist
    /// within this length bound: a vertex-simple one of length at most `|V|`
    /// plus one with a single minimal inserted subcycle of length at most
    /// `|V|`. So a result of `cap = 2` is a faithful "at least two" test.
    pub fn return_path_count_capped(
        &self,
        vertex: &str,
        cap: usize,
    ) -> Result<usize, DigraphError> {
        assert!(cap >= 1, "cap must be at least 1");
        let v = self.require_vertex(vertex)?;
        let out: Vec<Vec<usize>> = {
            let mut out = vec![Vec::new(); self.vertices.len()];
            for e in &self.edges {
                out[e.source].push(e.range);
            }
            out
        };
        let max_len = 2 * self.vertices.len();
        let mut count = 0usize;
        // Walk edge sequences from v; a sequence ends the moment it hits v.
        fn dfs(
            out: &[Vec<usize>],
            base: usize,
            current: usize,
            remaining: usize,
            cap: usize,
            count: &mut usize,
        ) {
            for &next in &out[current] {
                if *count >= cap {
                    return;
                }
                if next == base {
                    *count += 1;
                } else if remaining > 1 {
                    dfs(out, base, next, remaining - 1, cap, count);
                }
            }
        }
        if max_len >= 1 {
            dfs(&out, v, v, max_len, cap, &mut count);
        }
        Ok(count.min(cap))
    }

    /// True iff some edge leaving `vertex` is distinct from a loop based
    /// there. Errors if `vertex` supports no loop.
    pub fn loop_has_exit(&self, vertex: &str) -> Result<bool, DigraphError> {
        let v = self.require_vertex(vertex)?;
        let has_loop = self.edges.iter().any(|e| e.source == v && e.range == v);
        if !has_loop {
            return Err(DigraphError::NoLoop(vertex.into()));
        }
        let d_out = self.edges.iter().filter(|e| e.source == v).count();
        Ok(d_out >= 2)
    }

    /// True when the vertex/edge lists of `self` and `other` match position
    /// for position (same sizes, same incidences), ignoring identifiers.
    /// This is digraph isomorphism restricted to the identity on positions.
    pub fn is_position_isomorphic(&self, other: &Digraph) -> bool {
        self.vertices.len() == other.vertices.len()
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.source == b.source && a.range == b.range)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct TarjanState {
    index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    idx: Vec<Option<usize>>,
    low: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

fn tarjan_scc(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = graph.len();
    let mut state = TarjanState {
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if state.idx[v].is_none() {
            strongconnect(v, graph, &mut state);
        }
    }
    state.comps
}

fn strongconnect(v: usize, graph: &[Vec<usize>], state: &mut TarjanState) {
    state.idx[v] = Some(state.index);
    state.low[v] = state.index;
    state.index += 1;
    state.stack.push(v);
    state.on_stack[v] = true;
    for &w in &graph[v] {
        if state.idx[w].is_none() {
            strongconnect(w, graph, state);
            state.low[v] = state.low[v].min(state.low[w]);
        } else if state.on_stack[w] {
            state.low[v] = state.low[v].min(state.idx[w].unwrap());
        }
    }
    if state.low[v] == state.idx[v].unwrap() {
        let mut comp = Vec::new();
        loop {
            let w = state.stack.pop().expect("stack underflow");
            state.on_stack[w] = false;
            comp.push(w);
            if w == v {
                break;
            }
        }
        state.comps.push(comp);
    }
}

/// Returns `base` or, if taken, `base` with enough primes appended to be
/// fresh. Deterministic, so generated digraphs serialize identically run
/// over run.
pub(crate) fn fresh_id(base: String, taken: &dyn Fn(&str) -> bool) -> String {
    let mut candidate = base;
    while taken(&candidate) {
        candidate.push('\'');
    }
    candidate
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    /// Fig. 2(a): three vertices, a loop at each, double edge to v3.
    pub(crate) fn d1() -> Digraph {
        d("vertices v1 v2 v3\n\
           edge a v1 v1\n\
           edge b v1 v2\n\
           edge c v1 v3\n\
           edge d v1 v3\n\
           edge e v2 v2\n\
           edge f v2 v2\n\
           edge g v2 v3\n\
           edge h v3 v3\n")
    }

    fn d4() -> Digraph {
        d("vertices v1 v2\nedge a v1 v1\nedge b v1 v2\nedge c v2 v1\n")
    }

    #[test]
    fn parse_smallest_loop() {
        let g = d("vertices v1\nedge a v1 v1\n");
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_d1_shape() {
        let g = d1();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn parse_rejects_duplicate_edge_id() {
        let err = Digraph::parse("vertices v1 v2\nedge a v1 v2\nedge a v2 v1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::DuplicateEdge {
                line: 3,
                id: "a".into()
            }
        );
    }

    #[test]
    fn parse_rejects_unknown_vertex_with_line() {
        let err = Digraph::parse("vertices v1\nedge a v1 v9\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownVertex {
                line: 2,
                id: "v9".into()
            }
        );
    }

    #[test]
    fn parse_rejects_malformed_and_missing() {
        assert!(matches!(
            Digraph::parse("vertices v1\nedge a v1\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            Digraph::parse("# nothing\n"),
            Err(ParseError::MissingVertices)
        ));
        assert!(matches!(
            Digraph::parse("edge a v1 v1\nvertices v1\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn round_trip_identity() {
        let g = d1();
        assert_eq!(Digraph::parse(&g.to_text()).unwrap(), g);
        let empty = d("vertices\n");
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(Digraph::parse(&empty.to_text()).unwrap(), empty);
    }

    #[test]
    fn degrees_d1_v2() {
        let q = d1().degrees("v2").unwrap();
        assert_eq!(
            q,
            DegreeQuad {
                d_in: 3,
                d_out: 3,
                d_bin: 2,
                d_bout: 2
            }
        );
    }

    #[test]
    fn degrees_isolated_and_d4() {
        let g = d("vertices v\n");
        assert_eq!(
            g.degrees("v").unwrap(),
            DegreeQuad {
                d_in: 0,
                d_out: 0,
                d_bin: 0,
                d_bout: 0
            }
        );
        assert_eq!(
            d4().degrees("v1").unwrap(),
            DegreeQuad {
                d_in: 2,
                d_out: 2,
                d_bin: 2,
                d_bout: 2
            }
        );
        assert_eq!(
            g.degrees("missing"),
            Err(DigraphError::UnknownVertex("missing".into()))
        );
    }

    #[test]
    fn classify_vertices() {
        let iso = d("vertices v\n");
        assert_eq!(
            iso.classify_vertex("v").unwrap(),
            VertexClassification {
                is_source: true,
                is_sink: true,
                is_regular: false
            }
        );
        let g = d1();
        assert_eq!(
            g.classify_vertex("v3").unwrap(),
            VertexClassification {
                is_source: false,
                is_sink: false,
                is_regular: true
            }
        );
    }

    #[test]
    fn line_digraph_of_cycle_is_cycle() {
        let c3 = d("vertices v1 v2 v3\nedge a v1 v2\nedge b v2 v3\nedge c v3 v1\n");
        let l = c3.line_digraph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 3);
        assert!(l.is_strongly_connected());
    }

    #[test]
    fn line_digraph_d4_counts() {
        let l = d4().line_digraph();
        assert_eq!(l.vertex_count(), 3);
        assert_eq!(l.edge_count(), 5);
    }

    #[test]
    fn line_digraph_single_loop_fixed_point() {
        let g = d("vertices v\nedge a v v\n");
        let l = g.line_digraph();
        assert_eq!(l.vertex_count(), 1);
        assert_eq!(l.edge_count(), 1);
        let (s, r) = l.endpoints(0);
        assert_eq!((s, r), (0, 0));
    }

    #[test]
    fn unparalleled_d1() {
        let u = d1().unparalleled();
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.edge_count(), 6);
        // keeps the first of each parallel class
        assert!(u.has_edge("c") && !u.has_edge("d"));
        assert!(u.has_edge("e") && !u.has_edge("f"));
    }

    #[test]
    fn unparalleled_idempotent_and_line_unparalleled() {
        let g = d1();
        let u = g.unparalleled();
        assert_eq!(u.unparalleled(), u);
        let l = g.line_digraph();
        assert_eq!(l.unparalleled(), l);
    }

    #[test]
    fn strong_connectivity() {
        assert!(d4().is_strongly_connected());
        assert!(!d1().is_strongly_connected());
        assert!(!d("vertices a b\n").is_strongly_connected());
        assert!(d("vertices a\n").is_strongly_connected());
        assert!(!d("vertices\n").is_strongly_connected());
    }

    #[test]
    fn return_paths() {
        let d2 = d("vertices v1 v2 v3\n\
                    edge a v1 v1\nedge b v1 v2\nedge e v2 v2\nedge f v2 v2\n\
                    edge g v2 v3\nedge h v3 v3\n");
        assert_eq!(d2.return_path_count_capped("v1", 2).unwrap(), 1);
        assert_eq!(d4().return_path_count_capped("v2", 2).unwrap(), 2);
        assert_eq!(
            d("vertices v\n").return_path_count_capped("v", 2).unwrap(),
            0
        );
    }

    #[test]
    fn loop_exits() {
        let d2 = d("vertices v1 v2\nedge a v1 v1\nedge b v1 v2\n");
        assert!(d2.loop_has_exit("v1").unwrap());
        let single = d("vertices v\nedge a v v\n");
        assert!(!single.loop_has_exit("v").unwrap());
        let double = d("vertices v\nedge a v v\nedge b v v\n");
        assert!(double.loop_has_exit("v").unwrap());
        assert_eq!(
            d2.loop_has_exit("v2"),
            Err(DigraphError::NoLoop("v2".into()))
        );
    }

    #[test]
    fn binary_degrees_match_unparalleled() {
        let g = d1();
        let u = g.unparalleled();
        for v in g.vertex_ids() {
            let a = g.degrees(v).unwrap();
            let b = u.degrees(v).unwrap();
            assert_eq!(a.d_bin, b.d_in);
            assert_eq!(a.d_bout, b.d_out);
        }
    }

    #[test]
    fn dot_export_shape() {
        let dot = d4().to_dot();
        assert!(dot.starts_with("digraph {"));
        assert!(dot.contains("\"v1\" -> \"v2\" [label=\"b\"];"));
    }
}
