use std::time::Instant;

use super::greedy::forced_sources_closure;
use super::propagation::SeedSearch;
use super::{Budget, Method, SolveOutcome, SolverConfig, SolverStats, Status};
use crate::error::Result;
use crate::graph::{induced_subgraph, Digraph};
use crate::structure::condensation;
use crate::verify::certify;
use crate::vertex_set::VertexSet;

/// Decides IDS existence for any digraph.
///
/// Sources are forced into every IDS, so the forced closure is applied
/// first. What remains has a source component `C` with no arcs entering it;
/// any IDS meets `C` in an IDS `J` of `C` alone, and the rest of it is an
/// IDS of what is left after deleting `C ∪ N^+(J)`. Each `J` is produced by
/// the layer-seed search and the remainder is solved recursively. The first
/// combination that succeeds, in seed order, is returned.
pub fn solve_exact(graph: &Digraph, config: &SolverConfig) -> Result<SolveOutcome> {
    let start = Instant::now();
    let budget = Budget::new(config.budget);
    let mut stats = SolverStats::default();
    let found = search(graph, &budget, &mut stats, 1)?;
    if let Some(set) = &found {
        certify(graph, set, "solve_exact");
    }
    stats.propagation_steps = budget.used();
    stats.elapsed = start.elapsed();
    let status = found.map_or(Status::NoneExists, Status::Found);
    Ok(SolveOutcome { status, method: Method::Exact, stats })
}

fn search(graph: &Digraph, budget: &Budget, stats: &mut SolverStats, depth: usize) -> Result<Option<VertexSet>> {
    stats.recursion_depth = stats.recursion_depth.max(depth);
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(Some(VertexSet::new(0)));
    }
    let closure = forced_sources_closure(graph);
    budget.charge(closure.rounds as u64)?;
    let residual = &closure.residual;
    if residual.graph.is_empty() {
        return Ok(Some(closure.forced));
    }

    let cond = condensation(&residual.graph);
    let source = *cond.source_components().iter().min().expect("a nonempty graph has a source component");
    let members = cond.sccs.members(source);
    let component = induced_subgraph(&residual.graph, &VertexSet::from_vertices(residual.graph.vertex_count(), members.iter().copied()))?;

    let try_part = |local: VertexSet, stats: &mut SolverStats| -> Result<Option<VertexSet>> {
        // `local` is an IDS of the component; lift it to the residual.
        let j = component.lift(&local, residual.graph.vertex_count());
        let mut removed = residual.graph.out_neighborhood(&j);
        for &v in members {
            removed.insert(v);
        }
        let rest = induced_subgraph(&residual.graph, &removed.complement())?;
        let Some(inner) = search(&rest.graph, budget, stats, depth + 1)? else { return Ok(None) };
        let mut in_residual = j;
        rest.lift_into(&inner, &mut in_residual);
        let mut out = closure.forced.clone();
        residual.lift_into(&in_residual, &mut out);
        Ok(Some(out))
    };

    if component.graph.vertex_count() == 1 {
        let only = VertexSet::from_vertices(1, [0]);
        return try_part(only, stats);
    }
    let mut seeds = SeedSearch::new(&component.graph)?;
    let mut counted = 0;
    loop {
        let next = seeds.next_ids(budget);
        stats.seeds_explored += seeds.seeds() - counted;
        counted = seeds.seeds();
        let Some(local) = next? else { return Ok(None) };
        if let Some(found) = try_part(local, stats)? {
            return Ok(Some(found));
        }
    }
}
