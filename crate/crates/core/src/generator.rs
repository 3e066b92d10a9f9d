//! Seeded generators for cyclically orientable test graphs (grow a cycle,
//! then repeatedly glue a fresh cycle onto a random existing edge) and for
//! non-orientable ones (plant a theta substructure and verify).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::oracle::decompose_is_co;

/// Name of the PRNG recorded in generated file metadata.
pub const RNG_ALGORITHM: &str = "chacha8";

const NON_CO_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    /// Number of cycles glued onto the base cycle.
    pub attachments: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub seed: u64,
    pub want_co: bool,
}

impl GenParams {
    pub fn validate(&self) -> Result<(), GenError> {
        if self.min_len < 3 {
            return Err(GenError::InvalidParams(
                "cycle lengths must be at least 3".into(),
            ));
        }
        if self.min_len > self.max_len {
            return Err(GenError::InvalidParams(
                "min_len must not exceed max_len".into(),
            ));
        }
        if !self.want_co && self.attachments == 0 && self.max_len == 3 {
            // a bare triangle has no nonadjacent vertex pair to thread
            // the extra paths through
            return Err(GenError::InvalidParams(
                "non-CO generation needs attachments > 0 or max_len > 3".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("gave up generating a non-CO graph after {0} attempts")]
    RetriesExhausted(usize),
}

struct Growth {
    edges: Vec<(u32, u32)>,
    n: u32,
}

impl Growth {
    fn new_cycle(len: usize) -> Growth {
        let mut edges = Vec::with_capacity(len);
        for i in 0..len as u32 {
            edges.push((i, (i + 1) % len as u32));
        }
        Growth {
            edges,
            n: len as u32,
        }
    }

    /// Glue a cycle of length `len` through the existing edge (x, y):
    /// a path of len - 2 fresh vertices joins x to y.
    fn attach_cycle(&mut self, rng: &mut ChaCha8Rng, len: usize) {
        let (x, y) = self.edges[rng.gen_range(0..self.edges.len())];
        let mut prev = x;
        for _ in 0..len - 2 {
            let fresh = self.n;
            self.n += 1;
            self.edges.push((prev, fresh));
            prev = fresh;
        }
        self.edges.push((prev, y));
    }

    fn into_graph(self) -> Graph {
        Graph::from_edges(self.n as usize, &self.edges).expect("generator emits simple graphs")
    }
}

fn grow_co(p: &GenParams, rng: &mut ChaCha8Rng) -> Growth {
    let base_len = rng.gen_range(p.min_len..=p.max_len);
    let mut growth = Growth::new_cycle(base_len);
    for _ in 0..p.attachments {
        let len = rng.gen_range(p.min_len..=p.max_len);
        growth.attach_cycle(rng, len);
    }
    growth
}

/// Generate a cyclically orientable graph: a random base cycle with
/// `attachments` cycles glued on, each sharing one edge with the graph
/// built so far. Deterministic per seed.
pub fn gen_co_graph(p: &GenParams) -> Result<Graph, GenError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let g = grow_co(p, &mut rng).into_graph();
    debug_assert!(crate::reducer::check_edge_bound(g.n(), g.m()));
    Ok(g)
}

/// Generate a graph that is certainly not cyclically orientable: a CO
/// base plus two internally disjoint paths of length >= 2 between a
/// nonadjacent vertex pair. The result is verified against the peeling
/// oracle; generation retries with fresh randomness and fails loudly
/// rather than ever returning a CO graph.
pub fn gen_non_co_graph(p: &GenParams) -> Result<Graph, GenError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..NON_CO_RETRIES {
        let mut growth = grow_co(p, &mut rng);
        if let Some((u, v)) = pick_nonadjacent(&growth, &mut rng) {
            for _ in 0..2 {
                let len = rng.gen_range(2..=3);
                let mut prev = u;
                for _ in 0..len - 1 {
                    let fresh = growth.n;
                    growth.n += 1;
                    growth.edges.push((prev, fresh));
                    prev = fresh;
                }
                growth.edges.push((prev, v));
            }
            let g = growth.into_graph();
            if !decompose_is_co(&g) {
                return Ok(g);
            }
        }
    }
    Err(GenError::RetriesExhausted(NON_CO_RETRIES))
}

fn pick_nonadjacent(growth: &Growth, rng: &mut ChaCha8Rng) -> Option<(u32, u32)> {
    use std::collections::HashSet;
    let present: HashSet<(u32, u32)> = growth
        .edges
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let n = growth.n;
    if (n as usize) * (n as usize - 1) / 2 == present.len() {
        return None;
    }
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if !present.contains(&(u.min(v), u.max(v))) {
            return Some((u, v));
        }
    }
}

/// Grow a CO graph to exactly `n_target` vertices (for benchmarking).
/// Cycle lengths vary in [3, 6], clamped near the end to land on the
/// target. Deterministic per seed.
pub fn gen_co_graph_with_size(n_target: usize, seed: u64) -> Graph {
    assert!(n_target >= 3, "need at least a triangle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = 3.min(n_target);
    let mut growth = Growth::new_cycle(base);
    while (growth.n as usize) < n_target {
        let remaining = n_target - growth.n as usize;
        let len = rng.gen_range(3..=6).min(remaining + 2);
        growth.attach_cycle(&mut rng, len);
    }
    debug_assert_eq!(growth.n as usize, n_target);
    growth.into_graph()
}
