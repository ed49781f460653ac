//! Exhaustive subset enumeration, for cross-checking on small graphs.
//!
//! Subsets are visited as bitmasks in increasing numeric order, so "first"
//! below means smallest mask.

use std::time::Instant;

use super::{Method, SolveOutcome, SolverStats, Status};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::verify::certify;
use crate::vertex_set::VertexSet;

pub const BRUTE_DEFAULT_CAP: usize = 20;
pub const IDOMATIC_DEFAULT_CAP: usize = 14;
/// Largest graph a bitmask enumeration can represent at all.
pub const BRUTE_HARD_CAP: usize = 63;

struct Masks {
    n: usize,
    out: Vec<u64>,
}

impl Masks {
    fn new(graph: &Digraph, cap: usize) -> Result<Self> {
        let n = graph.vertex_count();
        let cap = cap.min(BRUTE_HARD_CAP);
        if n > cap {
            return Err(Error::SizeGuard { n, cap });
        }
        let out = graph.vertices().map(|v| graph.out_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        Ok(Self { n, out })
    }

    fn all(&self) -> u64 {
        if self.n == 0 { 0 } else { u64::MAX >> (64 - self.n) }
    }

    fn subsets(&self) -> impl Iterator<Item = u64> {
        0..=self.all()
    }

    fn reach(&self, s: u64) -> u64 {
        bits(s).fold(0, |m, v| m | self.out[v])
    }

    fn dominating(&self, s: u64) -> bool {
        (s | self.reach(s)) == self.all()
    }

    fn ids(&self, s: u64) -> bool {
        let reach = self.reach(s);
        reach & s == 0 && (s | reach) == self.all()
    }

    fn to_set(&self, s: u64) -> VertexSet {
        VertexSet::from_vertices(self.n, bits(s))
    }
}

fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            v
        })
    })
}

/// The first IDS by mask order, or none. Refuses graphs above `cap` vertices.
pub fn brute_force_solve(graph: &Digraph, cap: usize) -> Result<SolveOutcome> {
    let start = Instant::now();
    let m = Masks::new(graph, cap)?;
    let mut explored = 0;
    let mut found = None;
    for s in m.subsets() {
        explored += 1;
        if m.ids(s) {
            found = Some(m.to_set(s));
            break;
        }
    }
    if let Some(set) = &found {
        certify(graph, set, "brute_force_solve");
    }
    Ok(SolveOutcome {
        status: found.map_or(Status::NoneExists, Status::Found),
        method: Method::Brute,
        stats: SolverStats { subsets_explored: explored, elapsed: start.elapsed(), ..Default::default() },
    })
}

/// Every IDS, in mask order.
pub fn all_ids_brute(graph: &Digraph, cap: usize) -> Result<Vec<VertexSet>> {
    let m = Masks::new(graph, cap)?;
    Ok(m.subsets().filter(|&s| m.ids(s)).map(|s| m.to_set(s)).collect())
}

/// Independent domination number `i(G)`; `None` when no IDS exists.
pub fn min_ids_size_brute(graph: &Digraph, cap: usize) -> Result<Option<usize>> {
    let m = Masks::new(graph, cap)?;
    Ok(m.subsets().filter(|&s| m.ids(s)).map(|s| s.count_ones() as usize).min())
}

/// Domination number `γ(G)`.
pub fn min_dom_size_brute(graph: &Digraph, cap: usize) -> Result<usize> {
    let m = Masks::new(graph, cap)?;
    Ok(m.subsets().filter(|&s| m.dominating(s)).map(|s| s.count_ones() as usize).min().expect("V dominates"))
}

/// Largest number of pairwise disjoint IDSs. Zero when there is no IDS.
pub fn idomatic_brute(graph: &Digraph, cap: usize) -> Result<usize> {
    let m = Masks::new(graph, cap)?;
    if m.n == 0 {
        return Err(Error::invalid("idomatic number of the empty graph is unbounded"));
    }
    let family: Vec<u64> = m.subsets().filter(|&s| m.ids(s)).collect();
    let smallest = family.iter().map(|s| s.count_ones()).min().unwrap_or(1);
    let mut best = 0;
    disjoint_pack(&family, 0, 0, 0, smallest, m.all(), &mut best);
    Ok(best)
}

fn disjoint_pack(family: &[u64], from: usize, used: u64, count: usize, smallest: u32, all: u64, best: &mut usize) {
    *best = (*best).max(count);
    let free = (all & !used).count_ones();
    if count + (free / smallest) as usize <= *best {
        return;
    }
    for (i, &s) in family.iter().enumerate().skip(from) {
        if s & used == 0 {
            disjoint_pack(family, i + 1, used | s, count + 1, smallest, all, best);
        }
    }
}
