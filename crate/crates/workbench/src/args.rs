//! Parsers for the textual flag values: signatures and exact rationals.

use clifford_morph::{Rational, Sign, Signature, N_MAX};
use num_traits::Zero;

use crate::error::WorkbenchError;

/// `p,q` (positive squares first) or an explicit square pattern such as
/// `-+++` or `(+---)`.
pub fn parse_signature(text: &str) -> Result<Signature, WorkbenchError> {
    let t = text.trim();
    let usage = |why: &str| WorkbenchError::Usage(format!("invalid signature `{text}`: {why}"));
    if let Some((p, q)) = t.split_once(',') {
        let p: usize = p.trim().parse().map_err(|_| usage("p is not a count"))?;
        let q: usize = q.trim().parse().map_err(|_| usage("q is not a count"))?;
        if p + q == 0 {
            return Err(usage("dimension must be positive"));
        }
        return Signature::new(p, q).map_err(|e| usage(&e.to_string()));
    }
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    let squares = inner
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(usage("expected `p,q` or a pattern of + and -")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if squares.is_empty() {
        return Err(usage("dimension must be positive"));
    }
    if squares.len() > N_MAX {
        return Err(usage(&format!("dimension {} exceeds {N_MAX}", squares.len())));
    }
    Signature::from_squares(squares).map_err(|e| usage(&e.to_string()))
}

/// `a` or `a/b` with integer `a` and positive `b`.
pub fn parse_rational(text: &str) -> Result<Rational, WorkbenchError> {
    let usage = || WorkbenchError::Usage(format!("invalid rational `{text}`"));
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| usage())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| usage())?;
    if den.is_zero() || den < num_bigint::BigInt::zero() {
        return Err(usage());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(parse_signature("1,3").unwrap(), Signature::new(1, 3).unwrap());
        assert_eq!(parse_signature(" 4 , 0 ").unwrap(), Signature::new(4, 0).unwrap());
        assert_eq!(parse_signature("-+++").unwrap(), Signature::new(1, 3).unwrap().flipped());
        assert_eq!(parse_signature("(+---)").unwrap(), Signature::new(1, 3).unwrap());
        for bad in ["", "0,0", "a,1", "+*-", "9,0", "+++++++++"] {
            assert!(parse_signature(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), Rational::from_integer(7.into()));
        for bad in ["1/0", "1/-2", "x", ""] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
