use std::time::Instant;

use super::{Method, SolveOutcome, SolverStats, Status};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::layer_decomposition;
use crate::verify::certify;
use crate::vertex_set::VertexSet;

/// Unions of the even-indexed and of the odd-indexed layers.
fn parity_unions(graph: &Digraph) -> Result<(VertexSet, VertexSet)> {
    let layers = layer_decomposition(graph)?;
    let h = layers.period();
    if h % 2 == 1 {
        return Err(Error::OddPeriod(h as u64));
    }
    let n = graph.vertex_count();
    let (mut even, mut odd) = (VertexSet::new(n), VertexSet::new(n));
    for (i, layer) in layers.layers().iter().enumerate() {
        if i % 2 == 0 { even.union_with(layer) } else { odd.union_with(layer) }
    }
    Ok((even, odd))
}

/// Strongly connected graphs of even period: take every even layer.
pub fn solve_even_period(graph: &Digraph) -> Result<SolveOutcome> {
    let start = Instant::now();
    let (even, _) = parity_unions(graph)?;
    certify(graph, &even, "solve_even_period");
    Ok(SolveOutcome {
        status: Status::Found(even),
        method: Method::EvenPeriod,
        stats: SolverStats { elapsed: start.elapsed(), ..Default::default() },
    })
}

/// Two vertex-disjoint IDSs of a strongly connected graph of even period.
pub fn two_disjoint_ids(graph: &Digraph) -> Result<(VertexSet, VertexSet)> {
    let (even, odd) = parity_unions(graph)?;
    certify(graph, &even, "two_disjoint_ids");
    certify(graph, &odd, "two_disjoint_ids");
    debug_assert!(even.is_disjoint(&odd));
    Ok((even, odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{double_edges, gen_cycle, gen_path, random_layered_strong, UndirectedGraph};
    use crate::verify::is_ids;

    #[test]
    fn even_examples() {
        assert_eq!(solve_even_period(&gen_cycle(4).unwrap()).unwrap().set().unwrap().to_vec(), vec![0, 2]);
        let k2 = gen_cycle(2).unwrap();
        assert_eq!(solve_even_period(&k2).unwrap().set().unwrap().to_vec(), vec![0]);
        let g = random_layered_strong(4, 3, 0.4, 9).unwrap();
        let o = solve_even_period(&g).unwrap();
        assert!(is_ids(&g, o.set().unwrap()).unwrap().ids());
    }

    #[test]
    fn disjoint_pairs() {
        let (a, b) = two_disjoint_ids(&gen_cycle(4).unwrap()).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
        let (a, b) = two_disjoint_ids(&gen_cycle(6).unwrap()).unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2, 4], vec![1, 3, 5]));

        let square = double_edges(&UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
        let (a, b) = two_disjoint_ids(&square).unwrap();
        assert!(a.is_disjoint(&b));
        assert!(is_ids(&square, &a).unwrap().ids() && is_ids(&square, &b).unwrap().ids());
    }

    #[test]
    fn preconditions() {
        assert_eq!(solve_even_period(&gen_cycle(5).unwrap()), Err(Error::OddPeriod(5)));
        assert_eq!(solve_even_period(&gen_path(3).unwrap()), Err(Error::NotStronglyConnected));
        assert_eq!(two_disjoint_ids(&gen_cycle(3).unwrap()), Err(Error::OddPeriod(3)));
    }
}
