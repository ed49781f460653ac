//! Seeded random instances. All generators use ChaCha8 seeded from a `u64`,
//! so equal arguments give bit-identical graphs on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::check_probability;
use super::undirected::UndirectedGraph;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::scc_period;

/// Attempts [`random_layered_strong`] makes before giving up.
pub const LAYERED_RESAMPLE_LIMIT: usize = 1000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Acyclic: arcs only go forward in a random vertex order.
pub fn random_dag(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Every ordered pair `u != v` is an arc independently with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Parts `0..a` and `a..a+b`; each cross pair is joined with probability
/// `p` in a uniformly random direction, so no antiparallel pairs occur.
pub fn random_oriented_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for x in 0..a {
        for y in a..a + b {
            if rng.gen_bool(p) {
                arcs.push(if rng.gen_bool(0.5) { (x, y) } else { (y, x) });
            }
        }
    }
    Digraph::from_arcs(a + b, arcs)
}

pub fn random_undirected(n: usize, p: f64, seed: u64) -> Result<UndirectedGraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges)
}

/// Strongly connected digraph with `h` layers of `layer_size` vertices and
/// period exactly `h`.
///
/// Vertex `j` of layer `i` has id `i * layer_size + j`. A spanning cycle
/// visits `(0,0), (1,0), …, (h-1,0), (0,1), …, (h-1,layer_size-1)` and
/// every other arc from layer `i` to layer `i+1 mod h` is added with
/// probability `p`. Draws whose period is a proper multiple of `h` are
/// rejected and redrawn from the same stream.
pub fn random_layered_strong(h: usize, layer_size: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    if h == 0 || layer_size == 0 {
        return Err(Error::invalid("layer count and layer size must be positive"));
    }
    let n = h * layer_size;
    if n < 2 {
        return Err(Error::invalid("a single vertex cannot carry a cycle"));
    }
    let id = |layer: usize, j: usize| layer * layer_size + j;
    let mut rng = rng(seed);
    let spine: Vec<usize> = (0..layer_size).flat_map(|j| (0..h).map(move |i| id(i, j))).collect();

    for _ in 0..LAYERED_RESAMPLE_LIMIT {
        let mut arcs: Vec<(usize, usize)> = (0..n).map(|t| (spine[t], spine[(t + 1) % n])).collect();
        for i in 0..h {
            let next = (i + 1) % h;
            for a in 0..layer_size {
                for b in 0..layer_size {
                    let (u, v) = (id(i, a), id(next, b));
                    if u != v && rng.gen_bool(p) {
                        arcs.push((u, v));
                    }
                }
            }
        }
        let g = Digraph::from_arcs(n, arcs)?;
        if scc_period(&g)? == h {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!(
        "no draw with period {h} after {LAYERED_RESAMPLE_LIMIT} attempts (layer size {layer_size}, p = {p})"
    )))
}
