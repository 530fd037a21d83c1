//! Seeded random digraphs and move sites for the randomized preservation
//! suites. Callers pass a fixed-seed RNG so runs are reproducible.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::digraph::Digraph;
use crate::moves::MoveApplication;

/// A random digraph with `1..=max_vertices` vertices and `0..=max_edges`
/// edges; loops and parallel edges arise naturally.
pub fn random_digraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Digraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
    let edges: Vec<(String, String, String)> = (1..=m)
        .map(|j| {
            let s = rng.gen_range(0..n);
            let t = rng.gen_range(0..n);
            (
                format!("e{j}"),
                vertices[s].clone(),
                vertices[t].clone(),
            )
        })
        .collect();
    Digraph::new(vertices, edges).expect("generated ids are distinct")
}

/// Adjoins a fresh source with 1..=3 random targets; always applicable.
pub fn random_source_adjunction<R: Rng>(rng: &mut R, d: &Digraph) -> MoveApplication {
    let mut name = String::from("src");
    while d.has_vertex(&name) {
        name.push('\'');
    }
    let count = rng.gen_range(1..=3);
    let targets = (0..count)
        .map(|_| d.vertex_ids()[rng.gen_range(0..d.vertex_count())].clone())
        .collect();
    MoveApplication::SInverse {
        new_vertex: name,
        targets,
    }
}

fn random_partition<R: Rng>(rng: &mut R, mut ids: Vec<String>) -> Vec<Vec<String>> {
    let blocks = rng.gen_range(1..=ids.len().min(3));
    ids.shuffle(rng);
    let mut partition: Vec<Vec<String>> = vec![Vec::new(); blocks];
    for (i, id) in ids.iter().enumerate() {
        if i < blocks {
            partition[i].push(id.clone());
        } else {
            partition[rng.gen_range(0..blocks)].push(id.clone());
        }
    }
    partition
}

/// An outsplit at a random non-sink with a random partition, if any vertex
/// qualifies.
pub fn random_outsplit<R: Rng>(rng: &mut R, d: &Digraph) -> Option<MoveApplication> {
    let candidates: Vec<usize> = (0..d.vertex_count())
        .filter(|&v| !d.out_edge_indices(v).is_empty())
        .collect();
    let &v = candidates.choose(rng)?;
    let ids: Vec<String> = d
        .out_edge_indices(v)
        .into_iter()
        .map(|e| d.edge_ids().nth(e).expect("edge exists").to_owned())
        .collect();
    Some(MoveApplication::O {
        vertex: d.vertex_ids()[v].clone(),
        partition: random_partition(rng, ids),
    })
}

/// An insplit at a random non-source with a random partition.
pub fn random_insplit<R: Rng>(rng: &mut R, d: &Digraph) -> Option<MoveApplication> {
    let candidates: Vec<usize> = (0..d.vertex_count())
        .filter(|&v| !d.in_edge_indices(v).is_empty())
        .collect();
    let &v = candidates.choose(rng)?;
    let ids: Vec<String> = d
        .in_edge_indices(v)
        .into_iter()
        .map(|e| d.edge_ids().nth(e).expect("edge exists").to_owned())
        .collect();
    Some(MoveApplication::I {
        vertex: d.vertex_ids()[v].clone(),
        partition: random_partition(rng, ids),
    })
}

/// A splice at a random vertex admitting it (regular, at least two return
/// paths).
pub fn random_cuntz<R: Rng>(rng: &mut R, d: &Digraph) -> Option<MoveApplication> {
    let candidates: Vec<&String> = d
        .vertex_ids()
        .iter()
        .filter(|v| {
            d.degrees(v).expect("vertex exists").d_out > 0
                && d.return_path_count_capped(v, 2).expect("vertex exists") == 2
        })
        .collect();
    let v = candidates.choose(rng)?;
    Some(MoveApplication::C {
        vertex: (*v).clone(),
        force: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{apply_move, check_precondition};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_sites_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut applied = 0;
        for _ in 0..200 {
            let d = random_digraph(&mut rng, 6, 12);
            let s = random_source_adjunction(&mut rng, &d);
            check_precondition(&d, &s).unwrap();
            apply_move(&d, &s).unwrap();
            for site in [
                random_outsplit(&mut rng, &d),
                random_insplit(&mut rng, &d),
                random_cuntz(&mut rng, &d),
            ]
            .into_iter()
            .flatten()
            {
                check_precondition(&d, &site).unwrap();
                apply_move(&d, &site).unwrap();
                applied += 1;
            }
        }
        assert!(applied > 100, "enough random sites exercised: {applied}");
    }

    #[test]
    fn generation_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            assert_eq!(
                random_digraph(&mut a, 6, 12).to_text(),
                random_digraph(&mut b, 6, 12).to_text()
            );
        }
    }
}
