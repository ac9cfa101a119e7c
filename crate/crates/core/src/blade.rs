//! Basis blades encoded as generator bitmasks, and the sign algebra of their
//! products.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::scalar::Scalar;
use crate::signature::Signature;

/// A sign in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn from_i64(value: i64) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    /// Multiplies `value` by this sign.
    pub fn apply<S: Scalar>(self, value: S) -> S {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A basis blade: bit `μ` of the mask is set iff generator `e_μ` occurs.
///
/// The blade stands for the product of its generators in increasing index
/// order; mask `0` is the scalar unit and the full mask is the volume element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(index: usize) -> Blade {
        Blade(1 << index)
    }

    /// The volume element `e_{0..n-1}`.
    pub fn volume(dim: usize) -> Blade {
        Blade((1u32 << dim) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Blade {
        Blade(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn is_even(self) -> bool {
        self.grade() % 2 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }

    /// All `2^dim` blades in mask order.
    pub fn all(dim: usize) -> impl Iterator<Item = Blade> {
        (0..1u32 << dim).map(Blade)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Number of adjacent transpositions that sort the generator word `a b` into
/// increasing order (pairs `i` in `a`, `j` in `b` with `i > j`).
pub fn reordering_swaps(a: Blade, b: Blade) -> u32 {
    let mut swaps = 0;
    let mut shifted = a.0 >> 1;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }
    swaps
}

/// Clifford product of two basis blades under a diagonal metric.
///
/// The result blade is `a XOR b`; the sign collects the reordering parity and
/// the squares of the generators the two blades share.
pub fn blade_product(sig: &Signature, a: Blade, b: Blade) -> (Sign, Blade) {
    let swaps = reordering_swaps(a, b);
    let contracted_negative = (a.0 & b.0 & sig.negative_mask()).count_ones();
    (Sign::from_parity((swaps + contracted_negative) % 2 == 1), Blade(a.0 ^ b.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_generators_anticommute() {
        let sig = Signature::new(3, 0).unwrap();
        let (s, k) = blade_product(&sig, Blade::generator(1), Blade::generator(2));
        assert_eq!((s, k), (Sign::Plus, Blade::from_indices([1, 2])));
        let (s, k) = blade_product(&sig, Blade::generator(2), Blade::generator(1));
        assert_eq!((s, k), (Sign::Minus, Blade::from_indices([1, 2])));
    }

    #[test]
    fn minkowski_spatial_square() {
        let sig = Signature::new(1, 3).unwrap();
        let g1 = Blade::generator(1);
        assert_eq!(blade_product(&sig, g1, g1), (Sign::Minus, Blade::SCALAR));
        let g0 = Blade::generator(0);
        assert_eq!(blade_product(&sig, g0, g0), (Sign::Plus, Blade::SCALAR));
    }

    #[test]
    fn bivector_product_in_euclidean_four_space() {
        // e01 e02 = e0 e1 e0 e2 = -e0 e0 e1 e2 = -e12
        let sig = Signature::new(4, 0).unwrap();
        let r = blade_product(&sig, Blade::from_indices([0, 1]), Blade::from_indices([0, 2]));
        assert_eq!(r, (Sign::Minus, Blade::from_indices([1, 2])));
    }

    #[test]
    fn display() {
        assert_eq!(Blade::SCALAR.to_string(), "1");
        assert_eq!(Blade::from_indices([0, 1, 3]).to_string(), "e013");
        assert_eq!(Blade::volume(4).to_string(), "e0123");
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_i64(-1), Some(Sign::Minus));
        assert_eq!(Sign::from_i64(0), None);
    }
}
