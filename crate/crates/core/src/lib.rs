//! Exact real Clifford algebras of arbitrary diagonal signature, the vee and
//! tilt products that simulate one signature's product inside another's, and
//! polynomial multivector fields with the Dirac, Hodge and (co)differential
//! operators built on top of them.
//!
//! Everything is generic over a [`Scalar`] coefficient type; the aliases
//! below pin the exact rational instantiation used for verification.

pub mod blade;
pub mod error;
pub mod field;
pub mod linalg;
pub mod morph;
pub mod multivector;
pub mod scalar;
pub mod signature;

pub use blade::{blade_product, Blade, Sign};
pub use error::{CliffordError, FieldError, MorphError};
pub use multivector::{Involution, Multivector};
pub use scalar::Scalar;
pub use signature::{Signature, N_MAX, N_MAX_LAZY};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub type RationalMultivector = Multivector<Rational>;
pub type F64Multivector = Multivector<f64>;
pub type F32Multivector = Multivector<f32>;

pub type RationalField = field::PolyField<Rational>;
pub type F64Field = field::PolyField<f64>;

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
