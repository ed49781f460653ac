//! Independent dominating sets in directed graphs.
//!
//! A set `S` of vertices is an *independent dominating set* (IDS) when no
//! arc joins two members of `S` and every vertex outside `S` has an
//! in-neighbour in `S`. Not every digraph has one; odd directed cycles are
//! the smallest counterexamples.
//!
//! The crate provides the structure needed to reason about existence
//! (strong components, period, cyclic layering), solvers for the tractable
//! classes and a complete search for the rest, generators for the standard
//! families, and brute-force oracles for testing.
//!
//! ```
//! use idom::{gen_cycle, solve_auto, SolverConfig};
//!
//! let c4 = gen_cycle(4).unwrap();
//! let out = solve_auto(&c4, &SolverConfig::default()).unwrap();
//! assert_eq!(out.set().unwrap().to_vec(), vec![0, 2]);
//!
//! let c5 = gen_cycle(5).unwrap();
//! assert!(!solve_auto(&c5, &SolverConfig::default()).unwrap().is_found());
//! ```

pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod solvers;
pub mod structure;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use format::{parse_digraph, parse_undirected, write_arc_list, write_edge_list, Parsed};
pub use generators::*;
pub use graph::{induced_subgraph, out_closed_removal, Arc, Digraph, Subgraph};
pub use solvers::*;
pub use structure::*;
pub use verify::{is_ids, is_ids_quick, IdsReport};
pub use vertex_set::VertexSet;
