use std::time::Instant;

use super::{Method, SolveOutcome, SolverStats, Status};
use crate::error::{Error, Result};
use crate::generators::underlying_graph;
use crate::graph::{induced_subgraph, Digraph, Subgraph};
use crate::structure::period;
use crate::verify::certify;
use crate::vertex_set::VertexSet;

/// Outcome of repeatedly taking every source and deleting its closed
/// out-neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedClosure {
    /// Vertices of in-degree zero at some round. Independent, and contained
    /// in every IDS of the input.
    pub forced: VertexSet,
    /// What remains; it has no sources.
    pub residual: Subgraph,
    pub rounds: usize,
}

/// Source-greedy closure, taking all current sources each round.
pub fn forced_sources_closure(graph: &Digraph) -> ForcedClosure {
    let n = graph.vertex_count();
    let mut alive = vec![true; n];
    let mut indeg: Vec<usize> = graph.vertices().map(|v| graph.in_degree(v)).collect();
    let mut forced = VertexSet::new(n);
    let mut frontier: Vec<usize> = graph.sources();
    let mut rounds = 0;

    while !frontier.is_empty() {
        rounds += 1;
        let mut dying = Vec::new();
        for &s in &frontier {
            forced.insert(s);
            alive[s] = false;
            dying.push(s);
        }
        for &s in &frontier {
            for &w in graph.out_neighbors(s) {
                if alive[w] {
                    alive[w] = false;
                    dying.push(w);
                }
            }
        }
        let mut next = Vec::new();
        for &x in &dying {
            for &y in graph.out_neighbors(x) {
                if alive[y] {
                    indeg[y] -= 1;
                    if indeg[y] == 0 {
                        next.push(y);
                    }
                }
            }
        }
        next.sort_unstable();
        frontier = next;
    }

    let keep = VertexSet::from_vertices(n, (0..n).filter(|&v| alive[v]));
    let residual = induced_subgraph(graph, &keep).expect("kept vertices are in range");
    ForcedClosure { forced, residual, rounds }
}

/// Every acyclic digraph has an IDS: the forced closure empties it.
pub fn solve_dag(graph: &Digraph) -> Result<SolveOutcome> {
    let start = Instant::now();
    if period(graph) != 0 {
        return Err(Error::NotAcyclic);
    }
    let closure = forced_sources_closure(graph);
    assert!(closure.residual.graph.is_empty(), "closure of an acyclic graph leaves nothing");
    certify(graph, &closure.forced, "solve_dag");
    Ok(SolveOutcome {
        status: Status::Found(closure.forced),
        method: Method::DagGreedy,
        stats: SolverStats { elapsed: start.elapsed(), ..Default::default() },
    })
}

/// Forced closure, then one whole side of the bipartition of the residual.
///
/// `parts[v]` is `false` for side A. Without `parts` a 2-colouring of the
/// underlying graph is used (each component's smallest vertex on side A).
pub fn solve_bipartite(graph: &Digraph, parts: Option<&[bool]>) -> Result<SolveOutcome> {
    let start = Instant::now();
    let side: Vec<bool> = match parts {
        Some(p) => {
            if p.len() != graph.vertex_count() {
                return Err(Error::invalid("bipartition must label every vertex"));
            }
            if graph.arcs().any(|(u, v)| p[u] == p[v]) {
                return Err(Error::NotBipartite);
            }
            p.to_vec()
        }
        None => underlying_graph(graph).two_coloring().ok_or(Error::NotBipartite)?,
    };

    let closure = forced_sources_closure(graph);
    let mut set = closure.forced;
    for (local, &v) in closure.residual.old_ids.iter().enumerate() {
        debug_assert!(closure.residual.graph.in_degree(local) > 0);
        if !side[v] {
            set.insert(v);
        }
    }
    certify(graph, &set, "solve_bipartite");
    Ok(SolveOutcome {
        status: Status::Found(set),
        method: Method::Bipartite,
        stats: SolverStats { elapsed: start.elapsed(), ..Default::default() },
    })
}
