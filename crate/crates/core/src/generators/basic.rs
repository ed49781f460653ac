use crate::error::{Error, Result};
use crate::graph::Digraph;

pub const PAW_P: usize = 0;
pub const PAW_T1: usize = 1;
pub const PAW_T2: usize = 2;
pub const PAW_T3: usize = 3;

/// Directed cycle `0 -> 1 -> … -> n-1 -> 0`. `n = 2` is an antiparallel pair.
pub fn gen_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::invalid("a directed cycle needs at least 2 vertices"));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Directed path `0 -> 1 -> … -> n-1`.
pub fn gen_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::invalid("a path needs at least one vertex"));
    }
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

/// Directed wheel on `n + 1` vertices: outer cycle `0..n`, center `n`
/// pointing at every outer vertex.
pub fn gen_wheel(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::invalid("a wheel needs an outer cycle of at least 3 vertices"));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (n, i));
    Digraph::from_arcs(n + 1, outer.chain(spokes))
}

/// Oriented paw: a directed triangle `t1 -> t2 -> t3 -> t1` with a pendant
/// source `p -> t3`.
pub fn gen_paw() -> Digraph {
    Digraph::from_arcs(4, [(PAW_P, PAW_T3), (PAW_T1, PAW_T2), (PAW_T2, PAW_T3), (PAW_T3, PAW_T1)])
        .expect("paw arcs are valid")
}

/// Center `0` pointing at leaves `1..=leaves`.
pub fn gen_out_star(leaves: usize) -> Digraph {
    Digraph::from_arcs(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star arcs are valid")
}
