//! Finite simple digraphs on dense vertex ids, plus the subgraph operations
//! the solvers recurse through.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An ordered pair `(tail, head)`.
pub type Arc = (usize, usize);

/// A finite directed graph on vertices `0..n` without self-loops or
/// parallel arcs. Antiparallel pairs are allowed.
///
/// Adjacency lists are sorted and immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { out_adj: vec![Vec::new(); n], in_adj: vec![Vec::new(); n], arc_count: 0 }
    }

    /// Builds a graph, collapsing duplicate arcs.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Self::from_arcs_counting(n, arcs).map(|(g, _)| g)
    }

    /// Like [`Digraph::from_arcs`], also returning how many duplicate arcs
    /// were dropped.
    pub fn from_arcs_counting(
        n: usize,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<(Self, usize)> {
        let mut out_adj = vec![Vec::new(); n];
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            out_adj[u].push(v);
        }
        let mut duplicates = 0;
        for list in &mut out_adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicates += before - list.len();
        }
        Ok((Self::from_sorted_out_adj(out_adj), duplicates))
    }

    /// `out_adj` must already be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted_out_adj(out_adj: Vec<Vec<usize>>) -> Self {
        let n = out_adj.len();
        let mut in_adj = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, outs) in out_adj.iter().enumerate() {
            arc_count += outs.len();
            for &v in outs {
                // u ascends, so in-lists come out sorted
                in_adj[v].push(u);
            }
        }
        Self { out_adj, in_adj, arc_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_empty(&self) -> bool {
        self.out_adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Vertices of in-degree zero, ascending.
    pub fn sources(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn has_antiparallel_pair(&self) -> bool {
        self.arcs().any(|(u, v)| u < v && self.has_arc(v, u))
    }

    /// Fails if any member of `set` is not a vertex of this graph.
    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max_vertex() {
            Some(v) if v >= self.vertex_count() => {
                Err(Error::VertexOutOfRange { vertex: v, n: self.vertex_count() })
            }
            _ => Ok(()),
        }
    }

    /// Reinterprets `set` over exactly this graph's vertex universe.
    pub(crate) fn normalize_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        if set.universe() == self.vertex_count() {
            Ok(set.clone())
        } else {
            Ok(VertexSet::from_vertices(self.vertex_count(), set.iter()))
        }
    }

    /// `N^+(S)`: every vertex with an in-neighbour in `set`.
    pub fn out_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.vertex_count());
        for u in set.iter() {
            for &v in &self.out_adj[u] {
                out.insert(v);
            }
        }
        out
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::invalid("relabeling is not a permutation of the vertex set"));
        }
        Digraph::from_arcs(n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.vertex_count();
        let mut out_adj = self.out_adj.clone();
        out_adj.extend(other.out_adj.iter().map(|outs| outs.iter().map(|v| v + shift).collect()));
        Digraph::from_sorted_out_adj(out_adj)
    }
}

/// A vertex-induced subgraph together with the ids its vertices had in the
/// parent graph. `old_ids` is ascending, so relabeling preserves order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Digraph,
    pub old_ids: Vec<usize>,
}

impl Subgraph {
    pub fn old_id(&self, local: usize) -> usize {
        self.old_ids[local]
    }

    /// Maps a set over the subgraph back into a set over a parent universe.
    pub fn lift(&self, local: &VertexSet, parent_universe: usize) -> VertexSet {
        VertexSet::from_vertices(parent_universe, local.iter().map(|v| self.old_ids[v]))
    }

    /// Maps a set over the subgraph into an existing parent-universe set.
    pub fn lift_into(&self, local: &VertexSet, target: &mut VertexSet) {
        for v in local.iter() {
            target.insert(self.old_ids[v]);
        }
    }
}

/// The subgraph induced on `keep`, relabeled to `0..|keep|` in ascending
/// order of the original ids.
pub fn induced_subgraph(graph: &Digraph, keep: &VertexSet) -> Result<Subgraph> {
    graph.check_set(keep)?;
    let n = graph.vertex_count();
    let mut new_id = vec![usize::MAX; n];
    let old_ids: Vec<usize> = keep.iter().collect();
    for (i, &v) in old_ids.iter().enumerate() {
        new_id[v] = i;
    }
    let out_adj = old_ids
        .iter()
        .map(|&u| {
            graph.out_neighbors(u).iter().filter_map(|&v| (new_id[v] != usize::MAX).then_some(new_id[v])).collect()
        })
        .collect();
    Ok(Subgraph { graph: Digraph::from_sorted_out_adj(out_adj), old_ids })
}

/// Deletes the closed out-neighbourhood `S ∪ N^+(S)` and returns what is
/// left as an induced subgraph.
pub fn out_closed_removal(graph: &Digraph, set: &VertexSet) -> Result<Subgraph> {
    graph.check_set(set)?;
    let mut removed = graph.out_neighborhood(set);
    for v in set.iter() {
        removed.insert(v);
    }
    induced_subgraph(graph, &removed.complement())
}
