//! Independence and (in-neighbour) domination checks with witnesses.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Arc, Digraph};
use crate::vertex_set::VertexSet;

/// Verdict of [`is_ids`] with every violation listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdsReport {
    pub independent: bool,
    pub dominating: bool,
    /// Arcs with both endpoints in the set, in lexicographic order.
    pub independence_violations: Vec<Arc>,
    /// Vertices outside the set with no in-neighbour inside it, ascending.
    pub domination_violations: Vec<usize>,
}

impl IdsReport {
    pub fn ids(&self) -> bool {
        self.independent && self.dominating
    }
}

/// Arcs inside `set`. Empty iff the set is independent.
pub fn independence_violations(graph: &Digraph, set: &VertexSet) -> Result<Vec<Arc>> {
    graph.check_set(set)?;
    Ok(set
        .iter()
        .flat_map(|u| graph.out_neighbors(u).iter().filter(|&&v| set.contains(v)).map(move |&v| (u, v)))
        .collect())
}

/// Vertices outside `set` that no member of `set` points to.
pub fn domination_violations(graph: &Digraph, set: &VertexSet) -> Result<Vec<usize>> {
    graph.check_set(set)?;
    Ok(graph
        .vertices()
        .filter(|&v| !set.contains(v) && !graph.in_neighbors(v).iter().any(|&u| set.contains(u)))
        .collect())
}

pub fn is_independent(graph: &Digraph, set: &VertexSet) -> Result<bool> {
    graph.check_set(set)?;
    Ok(!set.iter().any(|u| graph.out_neighbors(u).iter().any(|&v| set.contains(v))))
}

/// Every vertex outside `set` has an in-neighbour in `set`.
pub fn is_dominating(graph: &Digraph, set: &VertexSet) -> Result<bool> {
    graph.check_set(set)?;
    Ok(graph.vertices().all(|v| set.contains(v) || graph.in_neighbors(v).iter().any(|&u| set.contains(u))))
}

pub fn is_ids(graph: &Digraph, set: &VertexSet) -> Result<IdsReport> {
    let independence_violations = independence_violations(graph, set)?;
    let domination_violations = domination_violations(graph, set)?;
    Ok(IdsReport {
        independent: independence_violations.is_empty(),
        dominating: domination_violations.is_empty(),
        independence_violations,
        domination_violations,
    })
}

/// Fast boolean form of [`is_ids`].
pub fn is_ids_quick(graph: &Digraph, set: &VertexSet) -> Result<bool> {
    Ok(is_independent(graph, set)? && is_dominating(graph, set)?)
}

/// Panics unless `set` is an independent dominating set of `graph`.
pub(crate) fn certify(graph: &Digraph, set: &VertexSet, context: &str) {
    let report = is_ids(graph, set).expect("certified set must lie inside the graph");
    assert!(report.ids(), "{context} produced a set that is not an IDS: {report:?}");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{double_edges, gen_cycle, gen_paw, gen_wheel, UndirectedGraph};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn independence_examples() {
        let c3 = gen_cycle(3).unwrap();
        assert!(!is_independent(&c3, &set(3, &[0, 1])).unwrap());
        assert_eq!(independence_violations(&c3, &set(3, &[0, 1])).unwrap(), vec![(0, 1)]);

        let c4 = gen_cycle(4).unwrap();
        assert!(is_independent(&c4, &set(4, &[0, 2])).unwrap());

        let k2 = double_edges(&UndirectedGraph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(independence_violations(&k2, &set(2, &[0, 1])).unwrap(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn domination_examples() {
        let c3 = gen_cycle(3).unwrap();
        assert!(is_dominating(&c3, &set(3, &[0, 1])).unwrap());
        assert!(!is_dominating(&c3, &set(3, &[0])).unwrap());
        assert_eq!(domination_violations(&c3, &set(3, &[0])).unwrap(), vec![2]);

        let w3 = gen_wheel(3).unwrap();
        assert!(is_dominating(&w3, &set(4, &[3])).unwrap());
    }

    #[test]
    fn ids_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert!(is_ids(&c4, &set(4, &[0, 2])).unwrap().ids());

        let c3 = gen_cycle(3).unwrap();
        for mask in 0u32..8 {
            let s = VertexSet::from_vertices(3, (0..3).filter(|i| mask >> i & 1 == 1));
            assert!(!is_ids(&c3, &s).unwrap().ids(), "{s:?}");
        }

        let paw = gen_paw();
        let r = is_ids(&paw, &set(4, &[0, 1])).unwrap();
        assert!(r.ids());
        assert!(r.independence_violations.is_empty() && r.domination_violations.is_empty());
    }

    #[test]
    fn out_of_range_member_is_an_error() {
        let c3 = gen_cycle(3).unwrap();
        assert!(is_ids(&c3, &set(4, &[3])).is_err());
        assert!(is_independent(&c3, &set(4, &[3])).is_err());
        assert!(is_dominating(&c3, &set(4, &[3])).is_err());
    }

    #[test]
    fn empty_graph_empty_set() {
        let g = Digraph::empty(0);
        assert!(is_ids(&g, &VertexSet::new(0)).unwrap().ids());
    }
}
