//! Constructors for every graph family used as evidence: cycles, paths,
//! the directed wheel and paw, the layered `D_{h,k}` families, Cartesian
//! products, antiparallel doubling, and seeded random instances.
//!
//! Vertex ids are always dense and row-major so that solver answers are
//! reproducible across runs.

mod basic;
mod dhk;
mod product;
mod random;
mod undirected;

pub use basic::{gen_cycle, gen_out_star, gen_path, gen_paw, gen_wheel, PAW_P, PAW_T1, PAW_T2, PAW_T3};
pub use dhk::{gen_dhk, DhkGraph, DhkSpec, DhkVariant, RuleSource};
pub use product::{cartesian_product, cn_box_cn_ids, cn_box_cn_ids_inclusive, PRODUCT_VERTEX_CAP};
pub use random::{
    random_dag, random_digraph, random_layered_strong, random_oriented_bipartite, random_undirected,
    LAYERED_RESAMPLE_LIMIT,
};
pub use undirected::{double_edges, underlying_graph, UndirectedGraph};

use crate::error::{Error, Result};

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("probability {p} is outside [0, 1]")))
    }
}
