use crate::error::{Error, Result};
use crate::graph::Digraph;

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl UndirectedGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_edges_counting(n, edges).map(|(g, _)| g)
    }

    /// Also reports how many repeated edges (in either orientation) were dropped.
    pub fn from_edges_counting(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<(Self, usize)> {
        let mut adj = vec![Vec::new(); n];
        let mut given = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
            given += 1;
        }
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        let edge_count = degree_sum / 2;
        Ok((Self { adj, edge_count }, given - edge_count))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Each edge once as `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// A proper 2-colouring, each component coloured from its smallest
    /// vertex with colour `false`. `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            stack.push(root);
            while let Some(u) = stack.pop() {
                let cu = color[u].expect("pushed vertices are coloured");
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("every vertex coloured")).collect())
    }
}

/// Replaces every edge `{u, v}` by the arcs `u -> v` and `v -> u`.
pub fn double_edges(graph: &UndirectedGraph) -> Digraph {
    Digraph::from_sorted_out_adj(graph.adj.clone())
}

/// The undirected graph underlying a digraph (antiparallel pairs merge).
pub fn underlying_graph(graph: &Digraph) -> UndirectedGraph {
    UndirectedGraph::from_edges(graph.vertex_count(), graph.arcs()).expect("digraph arcs are valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{cycle_gcd_oracle, period};

    #[test]
    fn doubling_examples() {
        let tri = UndirectedGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = double_edges(&tri);
        assert_eq!(d.arc_count(), 6);
        assert_eq!(cycle_gcd_oracle(&d).unwrap(), 1);
        assert_eq!(period(&d), 1);

        let k2 = double_edges(&UndirectedGraph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(k2.arc_count(), 2);
        assert_eq!(period(&k2), 2);

        let empty = double_edges(&UndirectedGraph::from_edges(4, []).unwrap());
        assert_eq!(empty.arc_count(), 0);
    }

    #[test]
    fn coloring() {
        let c4 = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.two_coloring(), Some(vec![false, true, false, true]));
        let c3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.two_coloring(), None);
    }

    #[test]
    fn underlying_merges_antiparallel() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let u = underlying_graph(&d);
        assert_eq!(u.edge_count(), 2);
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_loops() {
        assert!(UndirectedGraph::from_edges(2, [(1, 1)]).is_err());
        assert!(UndirectedGraph::from_edges(2, [(0, 3)]).is_err());
    }
}
