//! Coefficient field abstraction.
//!
//! Every algebraic routine in this crate is written against [`Scalar`], so the
//! same code runs over exact rationals (the default, see [`crate::Rational`])
//! or over `f32`/`f64` when speed matters more than sign-exactness.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

use crate::blade::Sign;

/// A coefficient type for multivectors and polynomial fields.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    fn from_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => Self::one(),
            Sign::Minus => -Self::one(),
        }
    }

    /// Converts a small integer; every scalar field contains the integers.
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("scalar field must contain the integers")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}
