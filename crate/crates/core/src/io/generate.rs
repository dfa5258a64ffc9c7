//! Seeded graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`. Panics unless `0 ≤ p ≤ 1`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    random_with(&mut rng(seed), n, p)
}

pub fn random_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// Random bipartite graph with `X = 0..nx` and `Y = nx..nx+ny`.
pub fn random_bipartite<R: Rng>(rng: &mut R, nx: usize, ny: usize, p: f64) -> (Graph, VertexSet) {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut edges = Vec::new();
    for x in 0..nx {
        for y in nx..nx + ny {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::new(nx + ny, edges).expect("generated edges are simple");
    (g, VertexSet::from_ids(nx + ny, 0..nx))
}

/// The six connected graphs on four vertices, by name.
pub fn order4_seeds() -> Vec<(&'static str, Graph)> {
    let g = |edges: &[(usize, usize)]| Graph::new(4, edges.iter().copied()).unwrap();
    vec![
        ("P4", g(&[(0, 1), (1, 2), (2, 3)])),
        ("C4", g(&[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("K4", g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
        ("K13", g(&[(0, 1), (0, 2), (0, 3)])),
        ("paw", g(&[(0, 1), (1, 2), (2, 0), (2, 3)])),
        ("diamond", g(&[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])),
    ]
}

/// A member of the perfect-matching family grown from the order-4 seeds.
pub fn gen_pmg4(depth: u32, seed: u64) -> Graph {
    let seeds: Vec<Graph> = order4_seeds().into_iter().map(|(_, g)| g).collect();
    gen_pmg(depth, seed, &seeds).expect("built-in seeds share an order")
}

/// Depth 0 picks one of `seeds`; depth `d` joins two independent depth
/// `d − 1` graphs by a uniformly random perfect matching between them.
/// Vertices `0..half` come from the first graph.
pub fn gen_pmg(depth: u32, seed: u64, seeds: &[Graph]) -> Result<Graph> {
    let Some(first) = seeds.first() else {
        return Err(Error::InvalidPartition("no seed graphs given".into()));
    };
    if let Some(bad) = seeds.iter().find(|g| g.n() != first.n()) {
        return Err(Error::InvalidPartition(format!(
            "seed graphs must share an order ({} vs {})",
            first.n(),
            bad.n()
        )));
    }
    Ok(pmg_with(&mut rng(seed), depth, seeds))
}

fn pmg_with(rng: &mut ChaCha8Rng, depth: u32, seeds: &[Graph]) -> Graph {
    if depth == 0 {
        return seeds[rng.gen_range(0..seeds.len())].clone();
    }
    let left = pmg_with(rng, depth - 1, seeds);
    let right = pmg_with(rng, depth - 1, seeds);
    let half = left.n();
    let mut partner: Vec<usize> = (0..half).collect();
    partner.shuffle(rng);
    let edges = left
        .edges()
        .chain(right.edges().map(|(u, v)| (u + half, v + half)))
        .chain(partner.iter().enumerate().map(|(i, &j)| (i, half + j)));
    Graph::new(2 * half, edges).expect("halves are disjoint")
}
