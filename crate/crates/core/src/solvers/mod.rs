//! Existence and construction of independent dominating sets.
//!
//! Polynomial cases ([`solve_dag`], [`solve_bipartite`],
//! [`solve_even_period`]) construct a set directly. Strongly connected
//! graphs are searched by seeding one layer of their cyclic layering and
//! propagating ([`solve_strong_by_layers`]); [`solve_exact`] combines the
//! forced-source closure with that search over source components and decides
//! every input. The `*_brute` functions are exhaustive oracles for small
//! graphs.
//!
//! Every returned set is checked with [`crate::verify::is_ids`] before it
//! leaves this module.

mod brute;
mod exact;
mod greedy;
mod periodic;
mod propagation;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Duration;

use serde::Serialize;

pub use brute::{
    all_ids_brute, brute_force_solve, idomatic_brute, min_dom_size_brute, min_ids_size_brute, BRUTE_DEFAULT_CAP,
    BRUTE_HARD_CAP, IDOMATIC_DEFAULT_CAP,
};
pub use exact::solve_exact;
pub use greedy::{forced_sources_closure, solve_bipartite, solve_dag, ForcedClosure};
pub use periodic::{solve_even_period, two_disjoint_ids};
pub use propagation::{all_ids_by_layers, propagate_layer_seed, solve_strong_by_layers, PropagationResult};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::{is_strongly_connected, period, scc_period};
use crate::vertex_set::VertexSet;

/// Default work budget, in propagation steps.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`] in [`SolverConfig::from_env`].
pub const BUDGET_ENV: &str = "IDOM_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DagGreedy,
    EvenPeriod,
    Bipartite,
    Layers,
    Exact,
    Brute,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::DagGreedy => "dag-greedy",
            Method::EvenPeriod => "even-period",
            Method::Bipartite => "bipartite",
            Method::Layers => "layers",
            Method::Exact => "exact",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Method::DagGreedy, Method::EvenPeriod, Method::Bipartite, Method::Layers, Method::Exact, Method::Brute]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown method `{s}`")))
    }
}

/// Work counters reported with every outcome.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Layer seeds tried by propagation searches.
    pub seeds_explored: u64,
    /// Subsets tested by brute-force enumeration.
    pub subsets_explored: u64,
    /// Deepest recursion level reached by [`solve_exact`].
    pub recursion_depth: usize,
    /// Units charged against the work budget.
    pub propagation_steps: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Found(VertexSet),
    NoneExists,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    pub method: Method,
    pub stats: SolverStats,
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self.status, Status::Found(_))
    }

    pub fn set(&self) -> Option<&VertexSet> {
        match &self.status {
            Status::Found(s) => Some(s),
            Status::NoneExists => None,
        }
    }
}

/// Knobs for the exponential solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Propagation steps allowed before giving up with
    /// [`Error::BudgetExceeded`].
    pub budget: u64,
    /// Worker threads for seed evaluation in [`solve_strong_by_layers`].
    /// Results do not depend on this value.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

impl SolverConfig {
    /// Default configuration with the budget taken from `IDOM_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut config = Self::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            config.budget = raw
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{BUDGET_ENV}={raw:?} is not a non-negative integer")))?;
        }
        Ok(config)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// Shared step counter; safe to charge from several threads.
#[derive(Debug)]
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Self { limit, used: AtomicU64::new(0) }
    }

    pub(crate) fn charge(&self, steps: u64) -> Result<()> {
        let before = self.used.fetch_add(steps, Ordering::Relaxed);
        if before.saturating_add(steps) > self.limit {
            Err(Error::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }
}

/// Picks the cheapest applicable method: the greedy closure for acyclic
/// graphs, layer parity for strongly connected graphs of even period, and
/// [`solve_exact`] otherwise. Always agrees with [`solve_exact`] on
/// existence.
pub fn solve_auto(graph: &Digraph, config: &SolverConfig) -> Result<SolveOutcome> {
    if period(graph) == 0 {
        return solve_dag(graph);
    }
    if is_strongly_connected(graph) && scc_period(graph)? % 2 == 0 {
        return solve_even_period(graph);
    }
    solve_exact(graph, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_path, random_dag};

    #[test]
    fn method_names_round_trip() {
        for m in [Method::DagGreedy, Method::EvenPeriod, Method::Bipartite, Method::Layers, Method::Exact, Method::Brute] {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{m}\""));
        }
        assert!("auto".parse::<Method>().is_err());
    }

    #[test]
    fn auto_dispatch() {
        let cfg = SolverConfig::default();
        for seed in 0..5 {
            let d = random_dag(8, 0.3, seed).unwrap();
            assert_eq!(solve_auto(&d, &cfg).unwrap().method, Method::DagGreedy);
        }
        assert_eq!(solve_auto(&gen_path(4).unwrap(), &cfg).unwrap().method, Method::DagGreedy);
        let c6 = solve_auto(&gen_cycle(6).unwrap(), &cfg).unwrap();
        assert_eq!(c6.method, Method::EvenPeriod);
        assert!(c6.is_found());
        let c5 = solve_auto(&gen_cycle(5).unwrap(), &cfg).unwrap();
        assert_eq!(c5.method, Method::Exact);
        assert_eq!(c5.status, Status::NoneExists);
    }

    #[test]
    fn budget_counts_and_trips() {
        let b = Budget::new(10);
        assert!(b.charge(4).is_ok());
        assert!(b.charge(6).is_ok());
        assert_eq!(b.charge(1), Err(Error::BudgetExceeded { budget: 10 }));
        assert_eq!(b.used(), 10);
    }

    #[test]
    fn config_builders() {
        let c = SolverConfig::default().with_budget(5).with_threads(0);
        assert_eq!(c, SolverConfig { budget: 5, threads: 1 });
    }
}
