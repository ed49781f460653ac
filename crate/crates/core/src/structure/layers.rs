use super::period::{bfs_levels, scc_period};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

/// Cyclic partition `S_0, …, S_{h-1}` of a strongly connected digraph with
/// period `h`: every arc leaves `S_i` and enters `S_{i+1 mod h}`.
///
/// Layers are nonempty and, when `h > 1`, independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    period: usize,
    layer_of: Vec<usize>,
    layers: Vec<VertexSet>,
}

impl LayerDecomposition {
    /// Builds a decomposition from explicit labels, checking every invariant.
    pub fn from_labels(graph: &Digraph, period: usize, layer_of: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        if period == 0 || layer_of.len() != n {
            return Err(Error::invalid("layer labels must cover every vertex with a positive period"));
        }
        let mut layers = vec![VertexSet::new(n); period];
        for (v, &l) in layer_of.iter().enumerate() {
            if l >= period {
                return Err(Error::invalid(format!("vertex {v} has layer {l} >= period {period}")));
            }
            layers[l].insert(v);
        }
        if let Some(i) = layers.iter().position(VertexSet::is_empty) {
            return Err(Error::invalid(format!("layer {i} is empty")));
        }
        if let Some((u, v)) = graph.arcs().find(|&(u, v)| layer_of[v] != (layer_of[u] + 1) % period) {
            return Err(Error::invalid(format!("arc {u}->{v} does not advance one layer")));
        }
        Ok(Self { period, layer_of, layers })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    pub fn layer(&self, i: usize) -> &VertexSet {
        &self.layers[i]
    }

    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(VertexSet::len).collect()
    }

    /// Index of a smallest layer, lowest index on ties.
    pub fn smallest_layer(&self) -> usize {
        (0..self.period).min_by_key(|&i| (self.layers[i].len(), i)).expect("period is positive")
    }
}

/// Layers are BFS levels from vertex 0 reduced modulo the period, so the
/// root sits in `S_0`.
pub fn layer_decomposition(graph: &Digraph) -> Result<LayerDecomposition> {
    let h = scc_period(graph)?;
    let layer_of = bfs_levels(graph, 0, None).into_iter().map(|l| l % h).collect();
    LayerDecomposition::from_labels(graph, h, layer_of)
}
