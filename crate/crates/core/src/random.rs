//! Seeded random multigraphs for the property suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomGraphSpec {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Make the underlying undirected graph connected.
    pub connected: bool,
}

impl Default for RandomGraphSpec {
    fn default() -> Self {
        RandomGraphSpec {
            seed: 0,
            max_vertices: 8,
            max_edges: 16,
            connected: false,
        }
    }
}

impl RandomGraphSpec {
    /// Parameters for the `index`-th graph of a sample drawn from this seed.
    pub fn nth(&self, index: u64) -> RandomGraphSpec {
        let mixed = self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03);
        RandomGraphSpec {
            seed: mixed.rotate_left(17) ^ index,
            ..*self
        }
    }
}

/// A graph with 1 to `max_vertices` vertices `v0, v1, …` and at most
/// `max_edges` edges `e0, e1, …`; loops and parallel edges are allowed.
/// When connectivity is requested, a random spanning tree is laid down first
/// and the vertex count is capped at `max_edges + 1`.
pub fn random_graph(spec: &RandomGraphSpec) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut n = rng.gen_range(1..=spec.max_vertices.max(1));
    if spec.connected {
        n = n.min(spec.max_edges + 1);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if spec.connected {
        for i in 1..n {
            let j = rng.gen_range(0..i);
            edges.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    let m = rng.gen_range(edges.len()..=spec.max_edges.max(edges.len()));
    while edges.len() < m {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.vertex(&format!("v{v}")).expect("fresh vertex name");
    }
    for (i, (s, d)) in edges.into_iter().enumerate() {
        b.edge(&format!("e{i}"), &format!("v{s}"), &format!("v{d}"))
            .expect("fresh edge name");
    }
    b.build()
}
