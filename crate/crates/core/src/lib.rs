//! Clique covers of Johnson graphs.
//!
//! `J(n, k)` has the `k`-subsets of `{1, ..., n}` as vertices, two of them
//! adjacent when they share `k - 1` elements. This crate builds and checks
//! clique covers of these graphs, computes the known bounds on the clique
//! covering number θ, converts between covers and constant-weight codes,
//! and searches for small covers exactly or heuristically.
//!
//! ```
//! use johnson_cover::{cover_recursive, verify_cover, GraphParams};
//!
//! let params = GraphParams::new(7, 3).unwrap();
//! let cover = cover_recursive(params).unwrap();
//! assert_eq!(cover.len(), 10);
//! assert!(verify_cover(&cover).covered);
//! ```

pub mod bounds;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod solver;
pub mod subset;

pub use bounds::{catalan, clique_number, simple_lower_bound, BoundsReport, Rational};
pub use codes::{lexicode, theta_cover_from_lexicode, JKVertex, Lexicode, LexicodeOptions};
pub use constructions::{cover_closed_form, cover_k1, cover_k2, cover_k3, cover_recursive, BlockRole};
pub use error::{Error, Result};
pub use graph::{
    adjacent, enumerate_maximal_cliques, is_code, verify_cover, Clique, CliqueKind, Code, Cover, CoverStats,
    GraphParams, VerifyReport,
};
pub use solver::{
    anneal_cover, exact_set_cover, exact_theta, AnnealSchedule, Budget, BudgetTier, SetCoverInstance, SolveOutcome,
    SolveStatus,
};
pub use subset::{KSubset, Subset, VertexOrder};
