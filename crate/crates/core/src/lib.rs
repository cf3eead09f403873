//! Intervention games on discretized action spaces.
//!
//! An intervention game couples `N` self-interested users with an
//! intervention device (indexed as user 0) that observes the chosen action
//! profile and responds with its own action. A manager commits to an
//! *intervention rule* — a total mapping from user action profiles to device
//! actions — and the users then play the induced simultaneous game. A rule
//! *sustains* a profile when that profile is a Nash equilibrium of the
//! induced game; a profile is *sustainable* when some rule sustains it.
//!
//! This crate provides:
//!
//! - [`InterventionGameModel`]: grids, payoffs, and the designated
//!   minimal/maximal device actions (the reward and punishment extremes).
//! - Solver operations built on the extreme-rule characterization:
//!   sustainability tests, the full sustainable region, and the
//!   welfare-maximizing intervention equilibrium.
//! - [`oracle`]: an independent brute-force path that enumerates the entire
//!   rule space on tiny finite games, used to cross-check the solver.
//! - [`cournot`]: a two-user congestion/quality game family with closed-form
//!   thresholds and best responses, the analytic reference for grid results.
//!
//! Core math is generic over the scalar type via [`Real`]; `f64` aliases are
//! exported at the crate root.

pub mod cournot;
mod error;
mod grid;
mod model;
pub mod oracle;
mod profile;
mod region;
mod rule;
mod scalar;
mod solver;

pub use error::GameError;
pub use grid::ActionGrid;
pub use model::{
    AssumptionCounterexample, AssumptionReport, InterventionGameModel, PayoffEvaluator,
    TablePayoff, VerificationMode,
};
pub use profile::ActionProfile;
pub use region::{EquilibriumResult, RegionMask};
pub use rule::{ConstantRule, ExtremeRule, InterventionRule};
pub use scalar::Real;
pub use solver::{default_tolerance, DEFAULT_PROFILE_BUDGET};

/// `f64` action grid.
pub type Grid64 = ActionGrid<f64>;
/// `f64` action profile.
pub type Profile64 = ActionProfile<f64>;
/// `f64` intervention game.
pub type Game64 = InterventionGameModel<f64>;
/// `f64` sustainability region.
pub type Region64 = RegionMask<f64>;
/// `f64` equilibrium result.
pub type Equilibrium64 = EquilibriumResult<f64>;
/// `f64` Cournot parameters.
pub type Cournot64 = cournot::CournotParams<f64>;
