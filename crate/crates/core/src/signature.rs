use std::fmt;

use crate::blade::Sign;
use crate::error::CliffordError;

/// Largest dimension handled with precomputed dense product tables.
pub const N_MAX: usize = 8;

/// Largest dimension accepted at all; tables above [`N_MAX`] are evaluated
/// lazily per blade pair.
pub const N_MAX_LAZY: usize = 12;

/// Ordered generator squares of a real Clifford algebra `Cl(p,q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    squares: Vec<Sign>,
}

impl Signature {
    /// `p` positive generators followed by `q` negative ones, `p + q <= N_MAX`.
    pub fn new(p: usize, q: usize) -> Result<Self, CliffordError> {
        Self::with_limit(p, q, N_MAX)
    }

    /// Like [`Signature::new`] with a caller-chosen dimension bound (at most
    /// [`N_MAX_LAZY`]).
    pub fn with_limit(p: usize, q: usize, limit: usize) -> Result<Self, CliffordError> {
        let max = limit.min(N_MAX_LAZY);
        let dim = p + q;
        if dim == 0 || dim > max {
            return Err(CliffordError::DimensionOutOfRange { dim, max });
        }
        let mut squares = vec![Sign::Plus; p];
        squares.extend(std::iter::repeat_n(Sign::Minus, q));
        Ok(Signature { squares })
    }

    /// Arbitrary ordering of squares, e.g. `(-,-,+,+)`.
    pub fn from_squares(squares: Vec<Sign>) -> Result<Self, CliffordError> {
        let dim = squares.len();
        if dim == 0 || dim > N_MAX_LAZY {
            return Err(CliffordError::DimensionOutOfRange { dim, max: N_MAX_LAZY });
        }
        Ok(Signature { squares })
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    pub fn p(&self) -> usize {
        self.squares.iter().filter(|s| **s == Sign::Plus).count()
    }

    pub fn q(&self) -> usize {
        self.dim() - self.p()
    }

    pub fn squares(&self) -> &[Sign] {
        &self.squares
    }

    pub fn square(&self, index: usize) -> Sign {
        self.squares[index]
    }

    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Bitmask of generators squaring to `-1`.
    pub fn negative_mask(&self) -> u32 {
        self.squares
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_minus())
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Every square flipped: the signature of the opposite algebra.
    pub fn flipped(&self) -> Signature {
        Signature { squares: self.squares.iter().map(|s| -*s).collect() }
    }

    /// Every square flipped except the preserved generator's.
    pub fn flipped_except(&self, preserved: usize) -> Signature {
        let squares = self
            .squares
            .iter()
            .enumerate()
            .map(|(i, s)| if i == preserved { *s } else { -*s })
            .collect();
        Signature { squares }
    }

    /// True when all `+1` squares precede all `-1` squares.
    pub fn is_standard_order(&self) -> bool {
        self.squares.windows(2).all(|w| !(w[0] == Sign::Minus && w[1] == Sign::Plus))
    }

    /// Squares as `(+---)`.
    pub fn pattern(&self) -> String {
        let body: String = self.squares.iter().map(|s| s.to_string()).collect();
        format!("({body})")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_standard_order() {
            write!(f, "Cl({},{})", self.p(), self.q())
        } else {
            write!(f, "Cl{}", self.pattern())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minkowski_and_euclidean() {
        use Sign::*;
        assert_eq!(Signature::new(1, 3).unwrap().squares(), &[Plus, Minus, Minus, Minus]);
        assert_eq!(Signature::new(4, 0).unwrap().squares(), &[Plus; 4]);
        assert_eq!(Signature::new(0, 1).unwrap().squares(), &[Minus]);
    }

    #[test]
    fn dimension_bounds() {
        assert!(matches!(
            Signature::new(0, 0),
            Err(CliffordError::DimensionOutOfRange { dim: 0, .. })
        ));
        assert!(Signature::new(5, 4).is_err());
        assert!(Signature::new(8, 0).is_ok());
        assert!(Signature::with_limit(6, 4, N_MAX_LAZY).is_ok());
        assert!(Signature::with_limit(7, 6, 99).is_err());
    }

    #[test]
    fn flips() {
        let m = Signature::new(1, 3).unwrap();
        let opposite = Signature::from_squares(vec![Sign::Minus, Sign::Plus, Sign::Plus, Sign::Plus]);
        assert_eq!(m.flipped(), opposite.unwrap());
        assert_ne!(m.flipped(), Signature::new(3, 1).unwrap());
        assert_eq!(m.flipped_except(0), Signature::new(4, 0).unwrap());
        assert_eq!(m.flipped_except(1).pattern(), "(--++)");
        assert_eq!(m.to_string(), "Cl(1,3)");
        assert_eq!(m.flipped().to_string(), "Cl(-+++)");
    }
}
