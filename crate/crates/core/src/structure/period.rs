use std::collections::VecDeque;

use super::gcd;
use super::scc::{sccs, SccDecomposition};
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Largest graph [`cycle_gcd_oracle`] accepts.
pub const CYCLE_ORACLE_CAP: usize = 12;

/// BFS levels from `root`, following only arcs that stay inside the
/// component of `root`. Unreached vertices keep `usize::MAX`.
pub(crate) fn bfs_levels(graph: &Digraph, root: usize, scc: Option<&SccDecomposition>) -> Vec<usize> {
    let mut level = vec![usize::MAX; graph.vertex_count()];
    let same = |v: usize| scc.is_none_or(|d| d.component_of(v) == d.component_of(root));
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in graph.out_neighbors(u) {
            if level[v] == usize::MAX && same(v) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level
}

/// gcd over intra-component arcs `(u, v)` of `level(u) + 1 - level(v)`.
fn component_period(graph: &Digraph, members: &[usize], level: &[usize], scc: Option<&SccDecomposition>) -> usize {
    let mut h = 0;
    for &u in members {
        for &v in graph.out_neighbors(u) {
            if scc.is_none_or(|d| d.component_of(u) == d.component_of(v)) {
                h = gcd(h, (level[u] + 1).abs_diff(level[v]));
            }
        }
    }
    h
}

/// Period of a strongly connected digraph: the gcd of its directed cycle
/// lengths, computed from one BFS rooted at vertex 0.
pub fn scc_period(graph: &Digraph) -> Result<usize> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::NotStronglyConnected);
    }
    let level = bfs_levels(graph, 0, None);
    if level.contains(&usize::MAX) || sccs(graph).count() != 1 {
        return Err(Error::NotStronglyConnected);
    }
    if n == 1 {
        return Err(Error::NoCycle);
    }
    let all: Vec<usize> = graph.vertices().collect();
    Ok(component_period(graph, &all, &level, None))
}

/// gcd of all directed cycle lengths; `0` for acyclic graphs.
pub fn period(graph: &Digraph) -> usize {
    let d = sccs(graph);
    let mut h = 0;
    for members in d.components().iter().filter(|c| c.len() > 1) {
        let level = bfs_levels(graph, members[0], Some(&d));
        h = gcd(h, component_period(graph, members, &level, Some(&d)));
    }
    h
}

/// gcd of the lengths of all simple directed cycles, by exhaustive DFS.
/// Exponential; only for graphs with at most [`CYCLE_ORACLE_CAP`] vertices.
pub fn cycle_gcd_oracle(graph: &Digraph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > CYCLE_ORACLE_CAP {
        return Err(Error::SizeGuard { n, cap: CYCLE_ORACLE_CAP });
    }

    // every simple cycle is found exactly once, from its smallest vertex
    fn walk(graph: &Digraph, start: usize, v: usize, depth: usize, on_path: &mut [bool], h: &mut usize) {
        for &w in graph.out_neighbors(v) {
            if w == start {
                *h = gcd(*h, depth + 1);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                walk(graph, start, w, depth + 1, on_path, h);
                on_path[w] = false;
            }
        }
    }

    let mut h = 0;
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        walk(graph, start, start, 0, &mut on_path, &mut h);
        on_path[start] = false;
    }
    Ok(h)
}
