use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::verify::is_ids;
use crate::vertex_set::VertexSet;

/// Largest product the constructor will build.
pub const PRODUCT_VERTEX_CAP: usize = 1 << 24;

/// Cartesian product `G □ H`. Vertex `(x, u)` gets id `x * |V(H)| + u`;
/// `(x,u) -> (y,v)` is an arc iff `x -> y` in `G` and `u = v`, or `x = y`
/// and `u -> v` in `H`.
pub fn cartesian_product(g: &Digraph, h: &Digraph) -> Result<Digraph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let n = ng
        .checked_mul(nh)
        .filter(|&n| n <= PRODUCT_VERTEX_CAP)
        .ok_or_else(|| Error::invalid(format!("product of {ng} and {nh} vertices exceeds {PRODUCT_VERTEX_CAP}")))?;
    let out_adj = (0..ng)
        .flat_map(|x| (0..nh).map(move |u| (x, u)))
        .map(|(x, u)| {
            let mut outs: Vec<usize> = g.out_neighbors(x).iter().map(|&y| y * nh + u).collect();
            outs.extend(h.out_neighbors(u).iter().map(|&v| x * nh + v));
            outs.sort_unstable();
            outs
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(out_adj.len(), n);
    Ok(Digraph::from_sorted_out_adj(out_adj))
}

fn torus_set(n: usize, columns_per_row: usize) -> VertexSet {
    VertexSet::from_vertices(
        n * n,
        (0..n).flat_map(|i| (0..columns_per_row).map(move |j| i * n + (i + 2 * j) % n)),
    )
}

fn check_odd(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!("expected an odd n >= 3, got {n}")));
    }
    Ok(())
}

/// The explicit IDS `{(v_i, u_{i+2j}) : 0 <= i < n, 0 <= j < ⌊n/2⌋}` of
/// `C_n □ C_n` for odd `n`, in [`cartesian_product`] ids. Verified before
/// it is returned.
///
/// Each row takes `⌊n/2⌋` columns of one parity class; allowing
/// `j = ⌊n/2⌋` as well would add column `i - 1`, which is adjacent to
/// column `i` in the row's cycle.
pub fn cn_box_cn_ids(n: usize) -> Result<VertexSet> {
    check_odd(n)?;
    let set = torus_set(n, n / 2);
    let product = cartesian_product(&crate::generators::gen_cycle(n)?, &crate::generators::gen_cycle(n)?)?;
    let report = is_ids(&product, &set)?;
    if !report.ids() {
        return Err(Error::Construction(format!("C_{n} □ C_{n} witness failed verification: {report:?}")));
    }
    Ok(set)
}

/// The same family with the inclusive range `0 <= j <= ⌊n/2⌋`. Not an IDS;
/// kept so the difference can be demonstrated.
pub fn cn_box_cn_ids_inclusive(n: usize) -> Result<VertexSet> {
    check_odd(n)?;
    Ok(torus_set(n, n / 2 + 1))
}
