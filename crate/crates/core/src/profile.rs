use crate::scalar::Real;

/// A joint action of the users (device action excluded), one entry per user
/// in user order 1..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionProfile<T> {
    actions: Vec<T>,
}

impl<T: Real> ActionProfile<T> {
    pub fn new(actions: Vec<T>) -> Self {
        Self { actions }
    }

    pub fn actions(&self) -> &[T] {
        &self.actions
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    /// Action of user `i` (1-based).
    pub fn action_of(&self, user: usize) -> T {
        self.actions[user - 1]
    }

    /// The unilateral deviation where user `i` (1-based) plays `action`.
    pub fn with_action(&self, user: usize, action: T) -> Self {
        let mut actions = self.actions.clone();
        actions[user - 1] = action;
        Self { actions }
    }
}

impl<T: Real> From<Vec<T>> for ActionProfile<T> {
    fn from(actions: Vec<T>) -> Self {
        Self::new(actions)
    }
}

/// Row-major indexing over the Cartesian product of the user grids, with
/// user 1 as the most significant axis. Flat order is therefore ascending
/// lexicographic order over profiles.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ProfileSpace {
    shape: Vec<usize>,
    strides: Vec<usize>,
    count: usize,
}

impl ProfileSpace {
    pub fn new(shape: Vec<usize>) -> Self {
        let mut strides = vec![1usize; shape.len()];
        for axis in (0..shape.len().saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * shape[axis + 1];
        }
        let count = shape.iter().product();
        Self { shape, strides, count }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Product of the shape without risking usize overflow.
    pub fn count_u128(shape: &[usize]) -> Option<u128> {
        shape
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
    }

    pub fn flatten(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.shape.len());
        indices
            .iter()
            .zip(&self.strides)
            .map(|(i, s)| i * s)
            .sum()
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut indices = vec![0usize; self.shape.len()];
        for axis in 0..self.shape.len() {
            indices[axis] = flat / self.strides[axis];
            flat %= self.strides[axis];
        }
        indices
    }

    /// Advances `indices` to the next profile in ascending lexicographic
    /// order (last axis fastest). Returns false once exhausted.
    pub fn advance(&self, indices: &mut [usize]) -> bool {
        for axis in (0..self.shape.len()).rev() {
            indices[axis] += 1;
            if indices[axis] < self.shape[axis] {
                return true;
            }
            indices[axis] = 0;
        }
        false
    }
}
