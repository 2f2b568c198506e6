//! Exact and heuristic search for small covers and independent sets.
//!
//! * [`exact_set_cover`]: branch and bound for minimum set cover, with
//!   optional "chosen together" pairings.
//! * [`exact_theta`]: the clique covering number of `J(n, k)` through it.
//! * [`anneal_cover`]: simulated annealing over maximal cliques.
//! * [`exact_max_independent_set`]: coloring-bounded branch and bound.
//!
//! All searches are deterministic for a fixed input and seed.

mod anneal;
mod mis;
mod setcover;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use anneal::{anneal_cover, AnnealResult, AnnealSchedule};
pub use mis::{exact_max_independent_set, johnson_graph, jk_graph, BitGraph, IndependentSetOutcome};
pub use setcover::{
    covering_number_small, exact_set_cover, exact_theta, greedy_cover, solve_set_cover, symmetric_cover_search,
    SetCoverInstance, SolveReport, ThetaSolution,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// `lower_bound == best_value`.
    Optimal,
    /// Node limit reached.
    BoundsOnly,
    /// Time limit reached.
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub best_value: u64,
    pub lower_bound: u64,
    /// Indices of the chosen sets, ascending.
    pub selection: Vec<usize>,
    pub nodes_explored: u64,
    pub seed: u64,
}

impl SolveOutcome {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    /// `[lower_bound, best_value]`.
    pub fn interval(&self) -> (u64, u64) {
        (self.lower_bound, self.best_value)
    }
}

/// One line of the solver log: a new incumbent or a raised lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IncumbentEvent {
    pub elapsed_secs: f64,
    pub value: u64,
    pub bound: u64,
}

/// Search limits; `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: None, max_time: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), max_time: None }
    }

    pub fn time(max_time: Duration) -> Self {
        Budget { max_nodes: None, max_time: Some(max_time) }
    }
}

/// Named budgets: `Fast` settles everything up to `N = 8`, `Extended` is
/// meant for `J(9, 4)`, `J(10, 5)` and covering numbers, `Heavy` for
/// multi-hour runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BudgetTier {
    #[default]
    Fast,
    Extended,
    Heavy,
}

impl BudgetTier {
    pub fn budget(self) -> Budget {
        match self {
            BudgetTier::Fast => Budget { max_nodes: Some(200_000_000), max_time: Some(Duration::from_secs(300)) },
            BudgetTier::Extended => Budget { max_nodes: None, max_time: Some(Duration::from_secs(600)) },
            BudgetTier::Heavy => Budget { max_nodes: None, max_time: Some(Duration::from_secs(6 * 3600)) },
        }
    }

    /// Annealing schedule used to seed the exact search in this tier.
    pub fn warm_start(self) -> Option<AnnealSchedule> {
        match self {
            BudgetTier::Fast => Some(AnnealSchedule { restarts: 4, ..AnnealSchedule::default() }),
            BudgetTier::Extended | BudgetTier::Heavy => Some(AnnealSchedule::default()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BudgetTier::Fast => "fast",
            BudgetTier::Extended => "extended",
            BudgetTier::Heavy => "heavy",
        }
    }
}

impl std::str::FromStr for BudgetTier {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "fast" => Ok(BudgetTier::Fast),
            "extended" => Ok(BudgetTier::Extended),
            "heavy" => Ok(BudgetTier::Heavy),
            other => Err(crate::error::Error::Precondition(format!("unknown budget tier '{other}'"))),
        }
    }
}
