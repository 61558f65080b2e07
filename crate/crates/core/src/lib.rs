//! Orders, scores and dominance functions on hesitant fuzzy elements.
//!
//! A hesitant fuzzy element (HFE) is a nonempty subset of `[0, 1]`. This crate
//! models finite HFEs ([`Thfe`]) and finite unions of intervals
//! ([`IntervalUnionHfe`]) with exact rational grades, and provides:
//!
//! * the list, pessimistic, optimistic, right, left and symmetric orders ([`orders`]),
//! * meet and join for the symmetric order with a brute-force oracle ([`lattice`]),
//! * score functions and order-relative score checks ([`scores`]),
//! * normative properties of scores such as [SMU] and [G] ([`normative`]),
//! * discrete and relative dominance functions ([`dominance`]),
//! * fuzzy preference relations and baseline evaluation ([`decision`]),
//! * the `hfe` command-line front end ([`cli`]).

pub mod cli;
pub mod decision;
pub mod dominance;
pub mod error;
pub mod exact;
pub mod grade;
pub mod grid;
pub mod interval;
pub mod lattice;
pub mod normative;
pub mod orders;
pub mod scores;
pub mod thfe;

pub use decision::{
    evaluate, evaluate_with, preference_matrix, EvaluationConfig, PreferenceMatrix, RankingReport,
};
pub use dominance::{dominance, kernel_matrix, DominanceKind, KernelMatrix};
pub use error::{HfeError, Result};
pub use grade::Grade;
pub use grid::Grid;
pub use interval::{strictly_below, Bound, IntervalUnionHfe, Piece};
pub use lattice::{join0, meet0};
pub use orders::{Comparison, OrderKind, OrderVerdict, SetOrders};
pub use scores::{Score, ScoreKind, ScoreValue};
pub use thfe::Thfe;
