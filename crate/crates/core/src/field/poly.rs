use std::collections::BTreeMap;
use std::fmt;

use crate::blade::Blade;
use crate::error::{CliffordError, FieldError};
use crate::morph::{table_product, ProductTable};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Exponent vector `(d_0, …, d_{n-1})` of `x_0^{d_0} ⋯ x_{n-1}^{d_{n-1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// `x_index`.
    pub fn coordinate(dim: usize, index: usize) -> Self {
        let mut e = vec![0; dim];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> S {
        self.0.iter().zip(point).fold(S::one(), |acc, (e, x)| {
            (0..*e).fold(acc, |acc, _| acc * x.clone())
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.0.iter().enumerate().filter(|(_, e)| **e > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A multivector field with polynomial coefficients:
/// `Φ(x) = Σ_d x^d M_d`, with no zero `M_d` stored.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyField<S> {
    sig: Signature,
    terms: BTreeMap<Monomial, Multivector<S>>,
}

impl<S: Scalar> PolyField<S> {
    pub fn zero(sig: &Signature) -> Self {
        PolyField { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(value: Multivector<S>) -> Self {
        let mut f = Self::zero(value.sig());
        f.add_term(Monomial::one(value.dim()), value);
        f
    }

    /// `x^exponents · value`.
    pub fn monomial(exponents: &[u32], value: Multivector<S>) -> Result<Self, FieldError> {
        if exponents.len() != value.dim() {
            return Err(FieldError::DimensionMismatch { left: exponents.len(), right: value.dim() });
        }
        let mut f = Self::zero(value.sig());
        f.add_term(Monomial::new(exponents.to_vec()), value);
        Ok(f)
    }

    /// The scalar field `x_index`.
    pub fn coordinate(sig: &Signature, index: usize) -> Self {
        let mut f = Self::zero(sig);
        f.add_term(Monomial::coordinate(sig.dim(), index), Multivector::one(sig));
        f
    }

    pub fn add_term(&mut self, monomial: Monomial, value: Multivector<S>) {
        assert_eq!(monomial.0.len(), self.sig.dim(), "monomial arity");
        let merged = match self.terms.remove(&monomial) {
            Some(existing) => existing + value,
            None => value,
        };
        if !merged.is_zero() {
            self.terms.insert(monomial, merged);
        }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
    }

    pub fn with_signature(&self, sig: &Signature) -> Result<Self, FieldError> {
        let mut out = Self::zero(sig);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.with_signature(sig)?);
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector<S>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_even(&self) -> bool {
        self.terms.values().all(Multivector::is_even)
    }

    pub fn is_homogeneous(&self, grade: usize) -> bool {
        self.terms.values().all(|m| m.is_homogeneous(grade))
    }

    /// Applies a linear map to every coefficient.
    pub fn map(&self, mut f: impl FnMut(&Multivector<S>) -> Multivector<S>) -> Self {
        let mut out = Self::zero(&self.sig);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    pub fn try_map<E>(
        &self,
        mut f: impl FnMut(&Multivector<S>) -> Result<Multivector<S>, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero(&self.sig);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v)?);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|m| m.scale(factor))
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self, CliffordError> {
        self.try_map(|m| m.grade_project(grade))
    }

    pub fn grade_involution(&self) -> Self {
        self.map(Multivector::grade_involution)
    }

    pub fn reverse(&self) -> Self {
        self.map(Multivector::reverse)
    }

    pub fn conjugate(&self) -> Self {
        self.map(Multivector::conjugate)
    }

    /// Coefficient of `blade` as a scalar polynomial field.
    pub fn component(&self, blade: Blade) -> Self {
        self.map(|m| Multivector::scalar(&self.sig, m.coeff(blade).clone()))
    }

    /// `∂_index`.
    pub fn partial(&self, index: usize) -> Result<Self, FieldError> {
        if index >= self.dim() {
            return Err(CliffordError::GeneratorOutOfRange { index, dim: self.dim() }.into());
        }
        let mut out = Self::zero(&self.sig);
        for (m, v) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut lowered = m.clone();
            lowered.0[index] -= 1;
            out.add_term(lowered, v.scale(&S::from_int(e as i64)));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[S]) -> Result<Multivector<S>, FieldError> {
        if point.len() != self.dim() {
            return Err(FieldError::DimensionMismatch { left: self.dim(), right: point.len() });
        }
        let mut acc = Multivector::zero(&self.sig);
        for (m, v) in &self.terms {
            acc += &v.scale(&m.eval(point));
        }
        Ok(acc)
    }

    /// Pointwise `table` product of two fields (polynomials multiply).
    pub fn table_product(
        table: &ProductTable,
        a: &PolyField<S>,
        b: &PolyField<S>,
    ) -> Result<Self, FieldError> {
        if a.dim() != b.dim() {
            return Err(FieldError::DimensionMismatch { left: a.dim(), right: b.dim() });
        }
        let mut out = Self::zero(&a.sig);
        for (ma, va) in &a.terms {
            for (mb, vb) in &b.terms {
                out.add_term(ma.times(mb), table_product(table, va, vb)?);
            }
        }
        Ok(out)
    }

    /// `value ∘ Φ` under `table`.
    pub fn mul_left(&self, table: &ProductTable, value: &Multivector<S>) -> Result<Self, FieldError> {
        Ok(self.try_map(|m| table_product(table, value, m))?)
    }

    /// `Φ ∘ value` under `table`.
    pub fn mul_right(&self, table: &ProductTable, value: &Multivector<S>) -> Result<Self, FieldError> {
        Ok(self.try_map(|m| table_product(table, m, value))?)
    }
}

impl<S: Scalar> std::ops::Add for &PolyField<S> {
    type Output = PolyField<S>;

    fn add(self, rhs: &PolyField<S>) -> PolyField<S> {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }
}

impl<S: Scalar> std::ops::Sub for &PolyField<S> {
    type Output = PolyField<S>;

    fn sub(self, rhs: &PolyField<S>) -> PolyField<S> {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(m.clone(), -v);
        }
        out
    }
}

impl<S: Scalar> std::ops::Neg for &PolyField<S> {
    type Output = PolyField<S>;

    fn neg(self) -> PolyField<S> {
        self.map(|m| -m)
    }
}

impl<S: Scalar> std::ops::Add for PolyField<S> {
    type Output = PolyField<S>;

    fn add(self, rhs: PolyField<S>) -> PolyField<S> {
        &self + &rhs
    }
}

impl<S: Scalar> std::ops::Sub for PolyField<S> {
    type Output = PolyField<S>;

    fn sub(self, rhs: PolyField<S>) -> PolyField<S> {
        &self - &rhs
    }
}

impl<S: Scalar> fmt::Display for PolyField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms
                .iter()
                .map(|(m, v)| if m.degree() == 0 { format!("({v})") } else { format!("{m}*({v})") })
                .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational as r, Rational};

    fn sig4() -> Signature {
        Signature::new(4, 0).unwrap()
    }

    fn blade(indices: &[usize]) -> Multivector<Rational> {
        Multivector::blade(&sig4(), Blade::from_indices(indices.iter().copied()), r(1))
    }

    #[test]
    fn derivative_examples() {
        let s = sig4();
        let x0 = PolyField::<Rational>::coordinate(&s, 0);
        assert_eq!(x0.partial(0).unwrap(), PolyField::constant(Multivector::one(&s)));

        let x0_e2 = PolyField::monomial(&[1, 0, 0, 0], blade(&[2])).unwrap();
        assert!(x0_e2.partial(1).unwrap().is_zero());

        let x2sq = PolyField::monomial(&[0, 0, 2, 0], blade(&[0, 1])).unwrap();
        let expected = PolyField::monomial(&[0, 0, 1, 0], blade(&[0, 1]).scale(&r(2))).unwrap();
        assert_eq!(x2sq.partial(2).unwrap(), expected);
        assert!(x2sq.partial(4).is_err());
    }

    #[test]
    fn zero_terms_are_not_stored() {
        let f = PolyField::monomial(&[1, 0, 0, 0], blade(&[1])).unwrap();
        let g = &f - &f;
        assert!(g.is_zero());
        assert_eq!(g.terms().count(), 0);
    }

    #[test]
    fn evaluation_is_linear() {
        let f = PolyField::monomial(&[2, 1, 0, 0], blade(&[1])).unwrap();
        let g = PolyField::monomial(&[0, 0, 0, 3], blade(&[0, 3])).unwrap();
        let point = [r(2), r(-1), Rational::new(1.into(), 3.into()), r(3)];
        let lhs = (&f + &g.scale(&r(5))).eval(&point).unwrap();
        let rhs = f.eval(&point).unwrap() + g.eval(&point).unwrap().scale(&r(5));
        assert_eq!(lhs, rhs);
        assert_eq!(f.eval(&point).unwrap(), blade(&[1]).scale(&r(-4)));
    }

    #[test]
    fn derivative_commutes_with_grade_projection() {
        let f = PolyField::monomial(&[1, 2, 0, 0], &blade(&[1]) + &blade(&[0, 2])).unwrap();
        for r in 0..=4 {
            assert_eq!(
                f.partial(1).unwrap().grade_project(r).unwrap(),
                f.grade_project(r).unwrap().partial(1).unwrap()
            );
        }
    }

    #[test]
    fn display() {
        let f = PolyField::monomial(&[1, 0, 2, 0], blade(&[1])).unwrap();
        assert_eq!(f.to_string(), "x0*x2^2*(e1)");
        assert_eq!(PolyField::<Rational>::zero(&sig4()).to_string(), "0");
    }
}
