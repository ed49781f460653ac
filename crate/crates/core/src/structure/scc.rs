use crate::graph::Digraph;

/// Partition of the vertices into strongly connected components.
///
/// Components are numbered by their smallest vertex: component 0 contains
/// vertex 0, component 1 contains the smallest vertex outside component 0,
/// and so on. Each member list is ascending. Use
/// [`Condensation::topological_order`] for an order that respects arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl SccDecomposition {
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn members(&self, component: usize) -> &[usize] {
        &self.components[component]
    }
}

/// Tarjan's algorithm with an explicit stack.
pub fn sccs(graph: &Digraph) -> SccDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = graph.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = graph.out_neighbors(v).get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                raw.push(comp);
            }
        }
    }

    raw.sort_unstable_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (id, comp) in raw.iter().enumerate() {
        for &v in comp {
            component_of[v] = id;
        }
    }
    SccDecomposition { component_of, components: raw }
}

/// True for a graph with at least one vertex and a single component.
pub fn is_strongly_connected(graph: &Digraph) -> bool {
    graph.vertex_count() > 0 && sccs(graph).count() == 1
}

/// The acyclic quotient graph obtained by contracting every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    /// Vertex `c` of the dag is component `c` of `sccs`.
    pub dag: Digraph,
    pub sccs: SccDecomposition,
}

impl Condensation {
    /// Components with no incoming arc from another component, ascending.
    pub fn source_components(&self) -> Vec<usize> {
        self.dag.sources()
    }

    /// Components ordered so that every quotient arc points forward; ties
    /// broken by smallest component id.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.dag.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|c| self.dag.in_degree(c)).collect();
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&c| indeg[c] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(c) = ready.pop_first() {
            order.push(c);
            for &d in self.dag.out_neighbors(c) {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    ready.insert(d);
                }
            }
        }
        order
    }
}

pub fn condensation(graph: &Digraph) -> Condensation {
    let sccs = sccs(graph);
    let mut out_adj = vec![Vec::new(); sccs.count()];
    for (u, v) in graph.arcs() {
        let (a, b) = (sccs.component_of(u), sccs.component_of(v));
        if a != b {
            out_adj[a].push(b);
        }
    }
    for list in &mut out_adj {
        list.sort_unstable();
        list.dedup();
    }
    Condensation { dag: Digraph::from_sorted_out_adj(out_adj), sccs }
}
