//! Seed-and-propagate search over the cyclic layering of a strongly
//! connected digraph.
//!
//! In a layering `S_0, …, S_{h-1}` only `S_i` can dominate `S_{i+1}`, so an
//! IDS `I` is determined by `X = I ∩ S_k`: the next layer's part must be
//! `S_{k+1} \ N^+(X)`, and so on around the cycle. A seed yields an IDS
//! exactly when the trip returns to `X`. Seeding the smallest layer gives
//! at most `2^{⌈n/h⌉}` candidates.

use std::time::Instant;

use rayon::prelude::*;

use super::periodic::solve_even_period;
use super::{Budget, Method, SolveOutcome, SolverConfig, SolverStats, Status};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::{layer_decomposition, LayerDecomposition};
use crate::verify::certify;
use crate::vertex_set::VertexSet;

/// Seeds evaluated per parallel batch.
const PARALLEL_BATCH: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropagationResult {
    /// The seed closes up; the union of all propagated layers is an IDS.
    Consistent(VertexSet),
    /// The propagation disagreed with the seed after `step` layers.
    Inconsistent { step: usize },
}

impl PropagationResult {
    pub fn set(&self) -> Option<&VertexSet> {
        match self {
            PropagationResult::Consistent(s) => Some(s),
            PropagationResult::Inconsistent { .. } => None,
        }
    }
}

/// Propagates `seed ⊆ S_k` once around the layering.
pub fn propagate_layer_seed(
    graph: &Digraph,
    layers: &LayerDecomposition,
    k: usize,
    seed: &VertexSet,
) -> Result<PropagationResult> {
    if k >= layers.period() || layers.layer(0).universe() != graph.vertex_count() {
        return Err(Error::invalid("layer index or decomposition does not match the graph"));
    }
    let seed = graph.normalize_set(seed)?;
    if !seed.is_subset(layers.layer(k)) {
        return Err(Error::SeedOutsideLayer { layer: k });
    }
    let result = propagate(graph, layers, k, &seed);
    if let PropagationResult::Consistent(set) = &result {
        certify(graph, set, "propagate_layer_seed");
    }
    Ok(result)
}

/// `seed` must already be over the graph's universe and inside `S_k`.
pub(crate) fn propagate(graph: &Digraph, layers: &LayerDecomposition, k: usize, seed: &VertexSet) -> PropagationResult {
    let h = layers.period();
    let mut union = seed.clone();
    let mut current = seed.clone();
    for step in 1..=h {
        let mut next = layers.layer((k + step) % h).clone();
        next.difference_with(&graph.out_neighborhood(&current));
        if step == h {
            return if next == *seed {
                PropagationResult::Consistent(union)
            } else {
                PropagationResult::Inconsistent { step }
            };
        }
        union.union_with(&next);
        current = next;
    }
    unreachable!("period is positive")
}

/// Subsets of `0..m` as ascending index lists, in lexicographic order
/// (`[] < [0] < [0,1] < [0,1,2] < [0,2] < [1] < …`), with the option of
/// skipping every extension of the current list.
#[derive(Clone, Debug)]
struct LexSubsets {
    m: usize,
    current: Vec<usize>,
    done: bool,
}

impl LexSubsets {
    fn new(m: usize) -> Self {
        Self { m, current: Vec::new(), done: false }
    }

    fn current(&self) -> Option<&[usize]> {
        (!self.done).then_some(self.current.as_slice())
    }

    /// Moves to the next list in lexicographic order.
    fn advance(&mut self) {
        let next = self.current.last().map_or(0, |&l| l + 1);
        if next < self.m {
            self.current.push(next);
        } else {
            self.skip_extensions();
        }
    }

    /// Moves to the next list that does not extend the current one.
    fn skip_extensions(&mut self) {
        while let Some(last) = self.current.last_mut() {
            if *last + 1 < self.m {
                *last += 1;
                return;
            }
            self.current.pop();
        }
        self.done = true;
    }
}

/// Lazily enumerates every IDS of a strongly connected graph.
///
/// For period 1 the single layer is the whole vertex set; there the search
/// also drops a seed together with all its extensions as soon as it is not
/// independent, or leaves some already-passed vertex without any possible
/// dominator.
pub(crate) struct SeedSearch<'g> {
    graph: &'g Digraph,
    layers: LayerDecomposition,
    layer: usize,
    members: Vec<usize>,
    subsets: LexSubsets,
    seeds: u64,
}

impl<'g> SeedSearch<'g> {
    pub(crate) fn new(graph: &'g Digraph) -> Result<Self> {
        let layers = layer_decomposition(graph)?;
        Ok(Self::with_layers(graph, layers))
    }

    fn with_layers(graph: &'g Digraph, layers: LayerDecomposition) -> Self {
        let layer = layers.smallest_layer();
        let members = layers.layer(layer).to_vec();
        let subsets = LexSubsets::new(members.len());
        Self { graph, layers, layer, members, subsets, seeds: 0 }
    }

    pub(crate) fn seeds(&self) -> u64 {
        self.seeds
    }

    fn seed_set(&self, positions: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.graph.vertex_count(), positions.iter().map(|&i| self.members[i]))
    }

    /// Charge for one seed visit plus, when propagated, one step per layer.
    fn cost(&self) -> u64 {
        1 + self.layers.period() as u64
    }

    pub(crate) fn next_ids(&mut self, budget: &Budget) -> Result<Option<VertexSet>> {
        let full_layer = self.layers.period() == 1;
        while let Some(positions) = self.subsets.current() {
            budget.charge(self.cost())?;
            self.seeds += 1;
            let seed = self.seed_set(positions);
            if full_layer && !self.extendable(positions, &seed) {
                self.subsets.skip_extensions();
                continue;
            }
            let result = propagate(self.graph, &self.layers, self.layer, &seed);
            match result {
                PropagationResult::Consistent(set) => {
                    if full_layer {
                        // any proper superset of an IDS contains an arc
                        self.subsets.skip_extensions();
                    } else {
                        self.subsets.advance();
                    }
                    certify(self.graph, &set, "seed search");
                    return Ok(Some(set));
                }
                PropagationResult::Inconsistent { .. } => self.subsets.advance(),
            }
        }
        Ok(None)
    }

    /// Period-1 pruning. `positions` are vertex ids here since the only
    /// layer is `0..n`. Ancestors in the lexicographic tree already passed,
    /// so only the newest vertex can create an arc inside the seed.
    fn extendable(&self, positions: &[usize], seed: &VertexSet) -> bool {
        let Some(&last) = positions.last() else { return true };
        let g = self.graph;
        if g.out_neighbors(last).iter().chain(g.in_neighbors(last)).any(|&w| seed.contains(w)) {
            return false;
        }
        (0..last).all(|v| {
            seed.contains(v) || g.in_neighbors(v).iter().any(|&u| seed.contains(u) || u > last)
        })
    }
}

/// Every IDS of a strongly connected graph, in seed order.
pub fn all_ids_by_layers(graph: &Digraph, config: &SolverConfig) -> Result<Vec<VertexSet>> {
    let budget = Budget::new(config.budget);
    let mut search = SeedSearch::new(graph)?;
    let mut out = Vec::new();
    while let Some(set) = search.next_ids(&budget)? {
        out.push(set);
    }
    Ok(out)
}

/// Decides a strongly connected graph by seeding its smallest layer.
///
/// Even periods are answered directly by [`solve_even_period`]. Otherwise
/// seeds are tried in lexicographic order and the first that closes up is
/// returned; `stats.seeds_explored` never exceeds `2^{⌈n/h⌉}`.
pub fn solve_strong_by_layers(graph: &Digraph, config: &SolverConfig) -> Result<SolveOutcome> {
    let start = Instant::now();
    let layers = layer_decomposition(graph)?;
    let h = layers.period();
    if h % 2 == 0 {
        return solve_even_period(graph);
    }
    let budget = Budget::new(config.budget);
    let mut search = SeedSearch::with_layers(graph, layers);

    let found = if config.threads > 1 && h > 1 {
        parallel_first(&mut search, &budget, config.threads)?
    } else {
        search.next_ids(&budget)?
    };

    let n = graph.vertex_count();
    debug_assert!(search.seeds() <= seed_bound(n, h));
    let stats = SolverStats {
        seeds_explored: search.seeds(),
        propagation_steps: budget.used(),
        elapsed: start.elapsed(),
        ..Default::default()
    };
    let status = found.map_or(Status::NoneExists, Status::Found);
    Ok(SolveOutcome { status, method: Method::Layers, stats })
}

/// `2^{⌈n/h⌉}`, saturating.
pub(crate) fn seed_bound(n: usize, h: usize) -> u64 {
    1u64.checked_shl(n.div_ceil(h) as u32).unwrap_or(u64::MAX)
}

/// Evaluates seeds in batches on a thread pool and reports exactly what the
/// sequential scan would: the first consistent seed, with the seed count
/// and budget charge up to and including it.
fn parallel_first(search: &mut SeedSearch<'_>, budget: &Budget, threads: usize) -> Result<Option<VertexSet>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start {threads} worker threads: {e}")))?;
    let cost = search.cost();
    loop {
        let mut batch = Vec::with_capacity(PARALLEL_BATCH);
        while batch.len() < PARALLEL_BATCH {
            let Some(positions) = search.subsets.current() else { break };
            batch.push(search.seed_set(positions));
            search.subsets.advance();
        }
        if batch.is_empty() {
            return Ok(None);
        }
        let (graph, layers, layer) = (search.graph, &search.layers, search.layer);
        let hit = pool.install(|| {
            batch.par_iter().enumerate().find_map_first(|(i, seed)| match propagate(graph, layers, layer, seed) {
                PropagationResult::Consistent(set) => Some((i, set)),
                PropagationResult::Inconsistent { .. } => None,
            })
        });
        let tried = hit.as_ref().map_or(batch.len(), |(i, _)| i + 1);
        for _ in 0..tried {
            budget.charge(cost)?;
            search.seeds += 1;
        }
        if let Some((_, set)) = hit {
            certify(graph, &set, "parallel seed search");
            return Ok(Some(set));
        }
    }
}
