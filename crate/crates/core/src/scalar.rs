use std::fmt;

use num_traits::{Float, FromPrimitive};

/// Scalar type for actions and payoffs: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{}
