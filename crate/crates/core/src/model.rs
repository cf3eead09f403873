use std::fmt;
use std::sync::Arc;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GameError;
use crate::grid::ActionGrid;
use crate::profile::{ActionProfile, ProfileSpace};
use crate::scalar::Real;

/// Payoff function `u_i(a0, a)` for user `i` in `0..=N`, with index 0 the
/// intervention device (the system objective).
///
/// Evaluation must be pure: identical inputs always return identical values.
/// Callers only evaluate on grid actions; implementations may panic off-grid.
pub trait PayoffEvaluator<T>: Send + Sync {
    fn eval(&self, user: usize, device_action: T, actions: &[T]) -> T;
}

impl<T, F> PayoffEvaluator<T> for F
where
    F: Fn(usize, T, &[T]) -> T + Send + Sync,
{
    fn eval(&self, user: usize, device_action: T, actions: &[T]) -> T {
        self(user, device_action, actions)
    }
}

/// Dense payoff table over the full `(user, device action, profile)` product.
///
/// Lookups resolve action values back to grid indices, so only grid actions
/// are valid inputs.
pub struct TablePayoff<T> {
    user_grids: Vec<ActionGrid<T>>,
    device_grid: ActionGrid<T>,
    space: ProfileSpace,
    /// Indexed by `(user * |A0| + a0_index) * profiles + flat_profile`.
    values: Vec<T>,
}

impl<T: Real> TablePayoff<T> {
    /// `values[(user * |A0| + a0_idx) * P + flat]` with profiles flattened in
    /// ascending lexicographic order.
    pub fn new(
        user_grids: Vec<ActionGrid<T>>,
        device_grid: ActionGrid<T>,
        values: Vec<T>,
    ) -> Result<Self, GameError> {
        let space = ProfileSpace::new(user_grids.iter().map(ActionGrid::len).collect());
        let expected = (user_grids.len() + 1) * device_grid.len() * space.count();
        if values.len() != expected {
            return Err(GameError::InvalidGame(format!(
                "payoff table has {} entries, expected {}",
                values.len(),
                expected
            )));
        }
        Ok(Self { user_grids, device_grid, space, values })
    }

    fn flat(&self, user: usize, a0_idx: usize, profile_flat: usize) -> usize {
        (user * self.device_grid.len() + a0_idx) * self.space.count() + profile_flat
    }
}

impl<T: Real> PayoffEvaluator<T> for TablePayoff<T> {
    fn eval(&self, user: usize, device_action: T, actions: &[T]) -> T {
        let a0_idx = self
            .device_grid
            .index_of(device_action)
            .unwrap_or_else(|| panic!("device action {device_action} off grid"));
        let indices: Vec<usize> = actions
            .iter()
            .zip(&self.user_grids)
            .map(|(a, g)| {
                g.index_of(*a)
                    .unwrap_or_else(|| panic!("action {a} off grid"))
            })
            .collect();
        self.values[self.flat(user, a0_idx, self.space.flatten(&indices))]
    }
}

/// How [`InterventionGameModel::verify_assumption`] scans the profile space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationMode {
    /// Every profile in the Cartesian product.
    Exhaustive,
    /// `samples` profiles drawn uniformly with a seeded generator, so
    /// repeated calls are deterministic.
    Sampled { samples: usize, seed: u64 },
}

/// A witness that the extremal-ordering property fails: some participant
/// prefers `device_action` over the minimal intervention, or the maximal
/// intervention over `device_action`, at `profile`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionCounterexample<T> {
    pub user: usize,
    pub device_action: T,
    pub profile: ActionProfile<T>,
}

/// Outcome of checking the extremal-intervention ordering
/// `u_i(min, a) >= u_i(a0, a) >= u_i(max, a)` for every participant.
#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionReport<T> {
    pub holds: bool,
    pub counterexample: Option<AssumptionCounterexample<T>>,
    pub profiles_checked: usize,
}

/// An intervention game: user grids, a device grid, the payoff evaluator,
/// and the designated minimal (reward) and maximal (punishment) device
/// actions.
///
/// Immutable after construction; all solver operations are pure.
#[derive(Clone)]
pub struct InterventionGameModel<T> {
    user_grids: Vec<ActionGrid<T>>,
    device_grid: ActionGrid<T>,
    payoff: Arc<dyn PayoffEvaluator<T>>,
    min_intervention: T,
    max_intervention: T,
    space: ProfileSpace,
}

impl<T: Real> InterventionGameModel<T> {
    /// Builds a game whose reward/punishment extremes are the smallest and
    /// largest device grid points.
    pub fn new(
        user_grids: Vec<ActionGrid<T>>,
        device_grid: ActionGrid<T>,
        payoff: Arc<dyn PayoffEvaluator<T>>,
    ) -> Result<Self, GameError> {
        let min = device_grid.first();
        let max = device_grid.last();
        Self::with_interventions(user_grids, device_grid, payoff, min, max)
    }

    /// Builds a game with explicit minimal/maximal intervention actions,
    /// which must both be device grid points.
    pub fn with_interventions(
        user_grids: Vec<ActionGrid<T>>,
        device_grid: ActionGrid<T>,
        payoff: Arc<dyn PayoffEvaluator<T>>,
        min_intervention: T,
        max_intervention: T,
    ) -> Result<Self, GameError> {
        if user_grids.is_empty() {
            return Err(GameError::InvalidGame("game needs at least one user".into()));
        }
        for a0 in [min_intervention, max_intervention] {
            if !device_grid.contains(a0) {
                return Err(GameError::OffDeviceGrid {
                    action: a0.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let space = ProfileSpace::new(user_grids.iter().map(ActionGrid::len).collect());
        Ok(Self {
            user_grids,
            device_grid,
            payoff,
            min_intervention,
            max_intervention,
            space,
        })
    }

    pub fn n_users(&self) -> usize {
        self.user_grids.len()
    }

    pub fn user_grid(&self, user: usize) -> &ActionGrid<T> {
        &self.user_grids[user - 1]
    }

    pub fn user_grids(&self) -> &[ActionGrid<T>] {
        &self.user_grids
    }

    pub fn device_grid(&self) -> &ActionGrid<T> {
        &self.device_grid
    }

    pub fn min_intervention(&self) -> T {
        self.min_intervention
    }

    pub fn max_intervention(&self) -> T {
        self.max_intervention
    }

    /// Number of grid profiles, exact even when it overflows `usize`.
    pub fn profile_count(&self) -> u128 {
        ProfileSpace::count_u128(self.space.shape()).unwrap_or(u128::MAX)
    }

    pub(crate) fn space(&self) -> &ProfileSpace {
        &self.space
    }

    /// Raw payoff lookup with full validation of user index, device action,
    /// and profile.
    pub fn payoff(
        &self,
        user: usize,
        device_action: T,
        profile: &ActionProfile<T>,
    ) -> Result<T, GameError> {
        self.check_user(user)?;
        if !self.device_grid.contains(device_action) {
            return Err(GameError::OffDeviceGrid {
                action: device_action.to_f64().unwrap_or(f64::NAN),
            });
        }
        let indices = self.resolve_profile(profile)?;
        Ok(self.eval_at(user, device_action, &indices))
    }

    pub(crate) fn check_user(&self, user: usize) -> Result<(), GameError> {
        if user > self.n_users() {
            return Err(GameError::UserIndex { index: user, n_users: self.n_users() });
        }
        Ok(())
    }

    /// Maps a profile of action values onto grid indices, or reports which
    /// coordinate is off-grid.
    pub fn resolve_profile(&self, profile: &ActionProfile<T>) -> Result<Vec<usize>, GameError> {
        if profile.len() != self.n_users() {
            return Err(GameError::ProfileLength {
                got: profile.len(),
                expected: self.n_users(),
            });
        }
        profile
            .actions()
            .iter()
            .zip(&self.user_grids)
            .enumerate()
            .map(|(axis, (a, grid))| {
                grid.index_of(*a).ok_or(GameError::OffGrid {
                    user: axis + 1,
                    action: a.to_f64().unwrap_or(f64::NAN),
                })
            })
            .collect()
    }

    /// The grid-canonical profile at the given per-user indices.
    pub fn profile_at(&self, indices: &[usize]) -> ActionProfile<T> {
        ActionProfile::new(
            indices
                .iter()
                .zip(&self.user_grids)
                .map(|(&i, g)| g.points()[i])
                .collect(),
        )
    }

    /// Payoff at grid indices; values are canonicalized through the grids so
    /// results are bit-stable regardless of how the caller produced inputs.
    pub(crate) fn eval_at(&self, user: usize, device_action: T, indices: &[usize]) -> T {
        let actions: Vec<T> = indices
            .iter()
            .zip(&self.user_grids)
            .map(|(&i, g)| g.points()[i])
            .collect();
        self.payoff.eval(user, device_action, &actions)
    }

    pub(crate) fn eval_values(&self, user: usize, device_action: T, actions: &[T]) -> T {
        self.payoff.eval(user, device_action, actions)
    }

    /// Checks that the minimal intervention is weakly best and the maximal
    /// intervention weakly worst for every participant, at every device
    /// action, over the scanned profiles. Comparisons are exact; a failure is
    /// reported, not raised.
    pub fn verify_assumption(&self, mode: VerificationMode) -> AssumptionReport<T> {
        match mode {
            VerificationMode::Exhaustive => {
                let mut indices = vec![0usize; self.n_users()];
                let mut checked = 0usize;
                loop {
                    checked += 1;
                    if let Some(cx) = self.assumption_violation(&indices) {
                        return AssumptionReport {
                            holds: false,
                            counterexample: Some(cx),
                            profiles_checked: checked,
                        };
                    }
                    if !self.space.advance(&mut indices) {
                        break;
                    }
                }
                AssumptionReport { holds: true, counterexample: None, profiles_checked: checked }
            }
            VerificationMode::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let axes: Vec<Uniform<usize>> = self
                    .space
                    .shape()
                    .iter()
                    .map(|&n| Uniform::from(0..n))
                    .collect();
                let mut indices = vec![0usize; self.n_users()];
                for checked in 1..=samples {
                    for (i, axis) in axes.iter().enumerate() {
                        indices[i] = axis.sample(&mut rng);
                    }
                    if let Some(cx) = self.assumption_violation(&indices) {
                        return AssumptionReport {
                            holds: false,
                            counterexample: Some(cx),
                            profiles_checked: checked,
                        };
                    }
                }
                AssumptionReport { holds: true, counterexample: None, profiles_checked: samples }
            }
        }
    }

    fn assumption_violation(&self, indices: &[usize]) -> Option<AssumptionCounterexample<T>> {
        for user in 0..=self.n_users() {
            let at_min = self.eval_at(user, self.min_intervention, indices);
            let at_max = self.eval_at(user, self.max_intervention, indices);
            for &a0 in self.device_grid.points() {
                let v = self.eval_at(user, a0, indices);
                if at_min < v || v < at_max {
                    return Some(AssumptionCounterexample {
                        user,
                        device_action: a0,
                        profile: self.profile_at(indices),
                    });
                }
            }
        }
        None
    }
}

impl<T: Real> fmt::Debug for InterventionGameModel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InterventionGameModel")
            .field("n_users", &self.n_users())
            .field("shape", &self.space.shape())
            .field("device_points", &self.device_grid.len())
            .field("min_intervention", &self.min_intervention)
            .field("max_intervention", &self.max_intervention)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_by_two_game(values: Vec<f64>) -> InterventionGameModel<f64> {
        let user_grids = vec![
            ActionGrid::explicit(vec![0.0, 1.0]).unwrap(),
            ActionGrid::explicit(vec![0.0, 1.0]).unwrap(),
        ];
        let device = ActionGrid::explicit(vec![0.0, 1.0]).unwrap();
        let table = TablePayoff::new(user_grids.clone(), device.clone(), values).unwrap();
        InterventionGameModel::new(user_grids, device, Arc::new(table)).unwrap()
    }

    #[test]
    fn construction_rejects_off_grid_interventions() {
        let grids = vec![ActionGrid::explicit(vec![0.0, 1.0]).unwrap()];
        let device = ActionGrid::explicit(vec![0.0, 1.0]).unwrap();
        let payoff = Arc::new(|_: usize, _: f64, _: &[f64]| 0.0);
        let err = InterventionGameModel::with_interventions(
            grids.clone(),
            device.clone(),
            payoff.clone(),
            0.0,
            2.0,
        )
        .unwrap_err();
        assert_eq!(err, GameError::OffDeviceGrid { action: 2.0 });
        assert!(InterventionGameModel::new(vec![], device, payoff).is_err());
    }

    #[test]
    fn payoff_validates_inputs() {
        // u_i = a0 + sum(actions) + user, but as a table.
        let mut values = Vec::new();
        for user in 0..3 {
            for a0 in [0.0, 1.0] {
                for a1 in [0.0, 1.0] {
                    for a2 in [0.0, 1.0] {
                        values.push(a0 + a1 + a2 + user as f64);
                    }
                }
            }
        }
        let game = two_by_two_game(values);
        let p = ActionProfile::new(vec![1.0, 0.0]);
        assert_eq!(game.payoff(2, 1.0, &p).unwrap(), 4.0);
        assert!(matches!(
            game.payoff(3, 1.0, &p),
            Err(GameError::UserIndex { index: 3, n_users: 2 })
        ));
        assert!(matches!(
            game.payoff(0, 0.5, &p),
            Err(GameError::OffDeviceGrid { .. })
        ));
        let off = ActionProfile::new(vec![0.25, 0.0]);
        assert!(matches!(
            game.payoff(0, 0.0, &off),
            Err(GameError::OffGrid { user: 1, .. })
        ));
        let short = ActionProfile::new(vec![0.0]);
        assert!(matches!(
            game.payoff(0, 0.0, &short),
            Err(GameError::ProfileLength { got: 1, expected: 2 })
        ));
    }

    #[test]
    fn assumption_fails_with_counterexample_when_ordering_reversed() {
        // Payoffs increase in a0, so the designated extremes are reversed.
        let payoff = |_user: usize, a0: f64, _a: &[f64]| a0;
        let grids = vec![ActionGrid::explicit(vec![0.0, 1.0]).unwrap()];
        let device = ActionGrid::explicit(vec![0.0, 1.0]).unwrap();
        let game = InterventionGameModel::new(grids, device, Arc::new(payoff)).unwrap();
        let report = game.verify_assumption(VerificationMode::Exhaustive);
        assert!(!report.holds);
        let cx = report.counterexample.unwrap();
        assert_eq!(cx.device_action, 1.0);
    }

    #[test]
    fn assumption_vacuous_with_single_device_action() {
        let payoff = |_user: usize, a0: f64, a: &[f64]| a0 * a[0];
        let grids = vec![ActionGrid::explicit(vec![0.0, 1.0]).unwrap()];
        let device = ActionGrid::singleton(3.0).unwrap();
        let game = InterventionGameModel::new(grids, device, Arc::new(payoff)).unwrap();
        let report = game.verify_assumption(VerificationMode::Exhaustive);
        assert!(report.holds);
        assert_eq!(report.profiles_checked, 2);
    }

    #[test]
    fn sampled_verification_is_deterministic() {
        let payoff = |_user: usize, a0: f64, a: &[f64]| -a0 * (1.0 + a[0]);
        let grids = vec![ActionGrid::interval(0.0, 1.0, 0.1).unwrap()];
        let device = ActionGrid::interval(0.0, 1.0, 0.5).unwrap();
        let game = InterventionGameModel::new(grids, device, Arc::new(payoff)).unwrap();
        let mode = VerificationMode::Sampled { samples: 32, seed: 7 };
        assert_eq!(game.verify_assumption(mode), game.verify_assumption(mode));
        assert!(game.verify_assumption(mode).holds);
    }
}
