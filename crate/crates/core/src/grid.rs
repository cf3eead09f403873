use crate::error::GameError;
use crate::scalar::Real;

/// Hard cap on materialized points per grid; a grid near this size is
/// unusable anyway once profiles are enumerated.
const MAX_GRID_POINTS: usize = 10_000_000;

/// A finite, ascending one-dimensional action space.
///
/// Grids are built either from an interval `[lower, upper]` discretized at a
/// fixed step, or from an explicit strictly increasing point list. Interval
/// grids always include `upper` as the final point, appended when the step
/// does not land on it exactly. Enumeration order is ascending and
/// deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionGrid<T> {
    points: Vec<T>,
}

impl<T: Real> ActionGrid<T> {
    /// Discretizes `[lower, upper]` at `step`, keeping `upper` as the last point.
    pub fn interval(lower: T, upper: T, step: T) -> Result<Self, GameError> {
        if !lower.is_finite() || !upper.is_finite() || !step.is_finite() {
            return Err(GameError::InvalidGrid("bounds and step must be finite".into()));
        }
        if step <= T::zero() {
            return Err(GameError::InvalidGrid(format!("step {step} must be > 0")));
        }
        if lower > upper {
            return Err(GameError::InvalidGrid(format!(
                "lower {lower} exceeds upper {upper}"
            )));
        }
        let est = ((upper - lower) / step).to_f64().unwrap_or(f64::INFINITY);
        if est > MAX_GRID_POINTS as f64 {
            return Err(GameError::InvalidGrid(format!(
                "interval would produce more than {MAX_GRID_POINTS} points"
            )));
        }
        // Points are lower + k*step (fresh multiply per k, no running sum);
        // the final multiple is snapped onto `upper` when it lands there.
        let snap = step * T::from_f64(1e-6).unwrap();
        let mut points = Vec::new();
        let mut k = 0usize;
        loop {
            let x = lower + T::from_usize(k).unwrap() * step;
            if x >= upper - snap {
                points.push(upper);
                break;
            }
            points.push(x);
            k += 1;
        }
        Ok(Self { points })
    }

    /// Wraps an explicit strictly increasing, nonempty point list.
    pub fn explicit(points: Vec<T>) -> Result<Self, GameError> {
        if points.is_empty() {
            return Err(GameError::InvalidGrid("explicit grid is empty".into()));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(GameError::InvalidGrid("grid points must be finite".into()));
        }
        for w in points.windows(2) {
            if w[0] >= w[1] {
                return Err(GameError::InvalidGrid(format!(
                    "points must be strictly increasing ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { points })
    }

    /// Grid containing a single action.
    pub fn singleton(point: T) -> Result<Self, GameError> {
        Self::explicit(vec![point])
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> T {
        self.points[0]
    }

    pub fn last(&self) -> T {
        *self.points.last().unwrap()
    }

    /// Index of the grid point matching `x`.
    ///
    /// Matching snaps within a tiny scale-relative tolerance so that values
    /// reconstructed by other arithmetic (e.g. `3.0` vs `300 * 0.01`) resolve
    /// to the same point. The tolerance never exceeds half the gap to a
    /// neighboring point, so resolution is unambiguous.
    pub fn index_of(&self, x: T) -> Option<usize> {
        if !x.is_finite() {
            return None;
        }
        // Nearest point by binary search.
        let mut lo = 0usize;
        let mut hi = self.points.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.points[mid] < x {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let mut candidate = lo.min(self.points.len() - 1);
        if candidate > 0 {
            let d_prev = (x - self.points[candidate - 1]).abs();
            let d_here = (x - self.points[candidate]).abs();
            if d_prev < d_here {
                candidate -= 1;
            }
        }
        let p = self.points[candidate];
        let mut tol = T::from_f64(1e-9).unwrap() * p.abs().max(T::one());
        if candidate > 0 {
            tol = tol.min((p - self.points[candidate - 1]) / T::from_f64(2.0).unwrap());
        }
        if candidate + 1 < self.points.len() {
            tol = tol.min((self.points[candidate + 1] - p) / T::from_f64(2.0).unwrap());
        }
        if (x - p).abs() <= tol {
            Some(candidate)
        } else {
            None
        }
    }

    pub fn contains(&self, x: T) -> bool {
        self.index_of(x).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_includes_both_endpoints() {
        let g = ActionGrid::interval(0.0, 12.0, 1.0).unwrap();
        assert_eq!(g.len(), 13);
        assert_eq!(g.first(), 0.0);
        assert_eq!(g.last(), 12.0);
    }

    #[test]
    fn interval_appends_upper_when_step_does_not_divide() {
        let g = ActionGrid::interval(0.0, 1.0, 0.3).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.last(), 1.0);
        assert!(g.points()[3] < 1.0);
    }

    #[test]
    fn interval_snaps_final_multiple_onto_upper() {
        // 120 * 0.1 rounds to 12.0; the last point must be upper exactly.
        let g = ActionGrid::interval(0.0, 12.0, 0.1).unwrap();
        assert_eq!(g.len(), 121);
        assert_eq!(g.last(), 12.0);
        let g = ActionGrid::interval(0.0, 3.0, 0.01).unwrap();
        assert_eq!(g.len(), 301);
        assert_eq!(g.last(), 3.0);
    }

    #[test]
    fn interval_degenerate_single_point() {
        let g = ActionGrid::interval(0.0, 0.0, 1.0).unwrap();
        assert_eq!(g.points(), &[0.0]);
    }

    #[test]
    fn interval_rejects_bad_parameters() {
        assert!(matches!(
            ActionGrid::interval(0.0, 1.0, 0.0),
            Err(GameError::InvalidGrid(_))
        ));
        assert!(matches!(
            ActionGrid::interval(2.0, 1.0, 0.5),
            Err(GameError::InvalidGrid(_))
        ));
        assert!(matches!(
            ActionGrid::interval(0.0, f64::NAN, 0.5),
            Err(GameError::InvalidGrid(_))
        ));
    }

    #[test]
    fn explicit_requires_strictly_increasing_nonempty() {
        assert!(ActionGrid::<f64>::explicit(vec![]).is_err());
        assert!(ActionGrid::explicit(vec![1.0, 1.0]).is_err());
        assert!(ActionGrid::explicit(vec![2.0, 1.0]).is_err());
        assert!(ActionGrid::explicit(vec![0.0, 0.5, 2.0]).is_ok());
    }

    #[test]
    fn index_of_snaps_reconstructed_values() {
        let g = ActionGrid::interval(0.0, 12.0, 0.01).unwrap();
        assert_eq!(g.index_of(3.0), Some(300));
        assert_eq!(g.index_of(300.0 * 0.01), Some(300));
        assert_eq!(g.index_of(4.25), Some(425));
        assert_eq!(g.index_of(3.005), None);
        assert_eq!(g.index_of(-1.0), None);
        assert_eq!(g.index_of(13.0), None);
    }

    #[test]
    fn index_of_respects_tight_explicit_gaps() {
        let g = ActionGrid::explicit(vec![0.0, 1e-12, 1.0]).unwrap();
        assert_eq!(g.index_of(0.0), Some(0));
        assert_eq!(g.index_of(1e-12), Some(1));
    }
}
