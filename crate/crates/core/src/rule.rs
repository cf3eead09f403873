use crate::error::GameError;
use crate::model::InterventionGameModel;
use crate::profile::ActionProfile;
use crate::scalar::Real;

/// A total mapping from grid profiles to device actions.
///
/// Profiles are identified by their per-user grid indices; every returned
/// action must be a device grid point of the game the rule was built for.
pub trait InterventionRule<T> {
    fn device_action(&self, indices: &[usize]) -> T;
}

/// The rule that rewards exactly one target profile: it plays the minimal
/// intervention at the target and the maximal intervention everywhere else.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremeRule<T> {
    target: ActionProfile<T>,
    target_indices: Vec<usize>,
    reward: T,
    punishment: T,
}

impl<T: Real> ExtremeRule<T> {
    pub fn new(
        game: &InterventionGameModel<T>,
        target: ActionProfile<T>,
    ) -> Result<Self, GameError> {
        let target_indices = game.resolve_profile(&target)?;
        Ok(Self {
            // Canonicalize onto the grid so equal targets compare equal.
            target: game.profile_at(&target_indices),
            target_indices,
            reward: game.min_intervention(),
            punishment: game.max_intervention(),
        })
    }

    pub fn target(&self) -> &ActionProfile<T> {
        &self.target
    }

    pub(crate) fn target_indices(&self) -> &[usize] {
        &self.target_indices
    }
}

impl<T: Real> InterventionRule<T> for ExtremeRule<T> {
    fn device_action(&self, indices: &[usize]) -> T {
        if indices == self.target_indices.as_slice() {
            self.reward
        } else {
            self.punishment
        }
    }
}

/// A rule that ignores the observed profile entirely.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantRule<T> {
    action: T,
}

impl<T: Real> ConstantRule<T> {
    pub fn new(game: &InterventionGameModel<T>, action: T) -> Result<Self, GameError> {
        if !game.device_grid().contains(action) {
            return Err(GameError::OffDeviceGrid {
                action: action.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { action })
    }
}

impl<T: Real> InterventionRule<T> for ConstantRule<T> {
    fn device_action(&self, _indices: &[usize]) -> T {
        self.action
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::grid::ActionGrid;
    use crate::profile::ProfileSpace;

    fn game() -> InterventionGameModel<f64> {
        let grids = vec![
            ActionGrid::interval(0.0, 2.0, 1.0).unwrap(),
            ActionGrid::interval(0.0, 2.0, 1.0).unwrap(),
        ];
        let device = ActionGrid::interval(0.0, 5.0, 1.0).unwrap();
        let payoff = |_: usize, a0: f64, a: &[f64]| a0 + a[0] + a[1];
        InterventionGameModel::new(grids, device, Arc::new(payoff)).unwrap()
    }

    #[test]
    fn extreme_rule_rewards_only_the_target() {
        let game = game();
        let rule = ExtremeRule::new(&game, ActionProfile::new(vec![1.0, 2.0])).unwrap();
        let space = ProfileSpace::new(vec![3, 3]);
        let mut idx = vec![0usize, 0];
        let mut rewarded = Vec::new();
        loop {
            let a0 = rule.device_action(&idx);
            if a0 == game.min_intervention() {
                rewarded.push(idx.clone());
            } else {
                assert_eq!(a0, game.max_intervention());
            }
            if !space.advance(&mut idx) {
                break;
            }
        }
        assert_eq!(rewarded, vec![vec![1, 2]]);
    }

    #[test]
    fn extreme_rule_rejects_off_grid_target() {
        let game = game();
        let err = ExtremeRule::new(&game, ActionProfile::new(vec![0.5, 0.0])).unwrap_err();
        assert!(matches!(err, GameError::OffGrid { user: 1, .. }));
    }

    #[test]
    fn constant_rule_must_use_a_device_point() {
        let game = game();
        assert!(ConstantRule::new(&game, 3.0).is_ok());
        assert!(ConstantRule::new(&game, 3.5).is_err());
    }
}
