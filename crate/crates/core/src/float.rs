//! Scalar abstraction for the numeric kernels.
//!
//! The signature algebra, the standardizer and the elastic-net trainer are
//! generic over the floating-point type; `f64` aliases for all of them live
//! at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::NumAssign
    + ndarray::ScalarOperand
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `usize`, panicking only when the count does not
    /// fit the mantissa (never at the data sizes this crate handles).
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
