use thiserror::Error;

/// Errors produced by game construction and solver operations.
///
/// Scalar values are reported as `f64` regardless of the game's scalar type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("profile has {got} actions but the game has {expected} users")]
    ProfileLength { got: usize, expected: usize },

    #[error("action {action} for user {user} is not a grid point")]
    OffGrid { user: usize, action: f64 },

    #[error("device action {action} is not a point of the device grid")]
    OffDeviceGrid { action: f64 },

    #[error("user index {index} out of range (valid: 0..={n_users})")]
    UserIndex { index: usize, n_users: usize },

    #[error("enumeration budget exceeded: {profiles} grid profiles > cap {budget}")]
    BudgetExceeded { profiles: u128, budget: u128 },

    #[error("rule space too large: {rules} rules > cap {cap}")]
    RuleSpaceExceeded { rules: u128, cap: u128 },

    #[error("no sustainable profile on grid")]
    EmptySustainableSet,

    #[error("unsupported: {0}")]
    Unsupported(String),
}
