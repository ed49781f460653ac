//! Strongly connected components, periods and the cyclic layer structure of
//! periodic digraphs.

mod layers;
mod period;
mod scc;

pub use layers::{layer_decomposition, LayerDecomposition};
pub use period::{cycle_gcd_oracle, period, scc_period, CYCLE_ORACLE_CAP};
pub use scc::{condensation, is_strongly_connected, sccs, Condensation, SccDecomposition};

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
