//! Dense multivectors over a [`Scalar`] field and the basic operations of a
//! Clifford algebra: products, grade projection, involutions.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::blade::{blade_product, Blade, Sign};
use crate::error::CliffordError;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// The three grade-wise sign involutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `(-1)^{k(k-1)/2}` on grade `k`; an anti-automorphism.
    Reverse,
    /// `(-1)^k` on grade `k`; an automorphism.
    Grade,
    /// Clifford conjugation, the composition of the other two.
    Conjugate,
}

impl Involution {
    pub fn sign_for_grade(self, k: usize) -> Sign {
        match self {
            Involution::Reverse => Sign::from_parity((k * k.saturating_sub(1) / 2) % 2 == 1),
            Involution::Grade => Sign::from_parity(k % 2 == 1),
            Involution::Conjugate => {
                Involution::Reverse.sign_for_grade(k) * Involution::Grade.sign_for_grade(k)
            }
        }
    }
}

/// An element of `Cl(p,q)`: one coefficient per blade, indexed by mask.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    sig: Signature,
    coeffs: Vec<S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: &Signature) -> Self {
        Multivector { sig: sig.clone(), coeffs: vec![S::zero(); sig.blade_count()] }
    }

    pub fn scalar(sig: &Signature, value: S) -> Self {
        Self::blade(sig, Blade::SCALAR, value)
    }

    pub fn one(sig: &Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn blade(sig: &Signature, blade: Blade, value: S) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.index()] = value;
        mv
    }

    /// Unit generator `e_index`.
    pub fn generator(sig: &Signature, index: usize) -> Self {
        Self::blade(sig, Blade::generator(index), S::one())
    }

    pub fn from_coeffs(sig: &Signature, coeffs: Vec<S>) -> Result<Self, CliffordError> {
        if coeffs.len() != sig.blade_count() {
            return Err(CliffordError::CoefficientCount {
                expected: sig.blade_count(),
                actual: coeffs.len(),
            });
        }
        Ok(Multivector { sig: sig.clone(), coeffs })
    }

    /// Sums `value * blade` over the given terms; repeated blades accumulate.
    pub fn from_terms<I>(sig: &Signature, terms: I) -> Self
    where
        I: IntoIterator<Item = (Blade, S)>,
    {
        let mut mv = Self::zero(sig);
        for (blade, value) in terms {
            let slot = &mut mv.coeffs[blade.index()];
            *slot = slot.clone() + value;
        }
        mv
    }

    /// Vector `Σ c_μ e_μ`.
    pub fn vector(sig: &Signature, components: &[S]) -> Self {
        Self::from_terms(
            sig,
            components.iter().enumerate().map(|(i, c)| (Blade::generator(i), c.clone())),
        )
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Same coefficients, relabelled as an element of another algebra of the
    /// same dimension.
    pub fn with_signature(&self, sig: &Signature) -> Result<Self, CliffordError> {
        Self::from_coeffs(sig, self.coeffs.clone())
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &S {
        &self.coeffs[blade.index()]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: S) {
        self.coeffs[blade.index()] = value;
    }

    pub fn scalar_part(&self) -> &S {
        &self.coeffs[0]
    }

    /// Nonzero terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Blade(i as u32), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Sorted list of grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut grades: Vec<usize> = self.terms().map(|(b, _)| b.grade()).collect();
        grades.sort_unstable();
        grades.dedup();
        grades
    }

    /// Zero counts as homogeneous of every grade.
    pub fn is_homogeneous(&self, grade: usize) -> bool {
        self.terms().all(|(b, _)| b.grade() == grade)
    }

    pub fn is_even(&self) -> bool {
        self.terms().all(|(b, _)| b.is_even())
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|_, c| c.clone() * factor.clone())
    }

    /// Applies `f(blade, coeff)` to every coefficient, zeros included.
    pub fn map(&self, mut f: impl FnMut(Blade, &S) -> S) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(i, c)| f(Blade(i as u32), c)).collect();
        Multivector { sig: self.sig.clone(), coeffs }
    }

    fn check_same(&self, other: &Self) -> Result<(), CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of a blade-level rule. `rule` returns `None` to
    /// drop a pair.
    pub(crate) fn bilinear(
        &self,
        other: &Self,
        mut rule: impl FnMut(Blade, Blade) -> Option<(Sign, Blade)>,
    ) -> Self {
        let mut out = Self::zero(&self.sig);
        let rhs: Vec<(Blade, &S)> = other.terms().collect();
        for (a, ca) in self.terms() {
            for (b, cb) in &rhs {
                if let Some((sign, k)) = rule(a, *b) {
                    let prod = ca.clone() * (*cb).clone();
                    let slot = &mut out.coeffs[k.index()];
                    *slot = match sign {
                        Sign::Plus => slot.clone() + prod,
                        Sign::Minus => slot.clone() - prod,
                    };
                }
            }
        }
        out
    }

    /// The Clifford product `AB` of the signature both operands live in.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let sig = self.sig.clone();
        Ok(self.bilinear(other, |a, b| Some(blade_product(&sig, a, b))))
    }

    /// `⟨A⟩_r`.
    pub fn grade_project(&self, grade: usize) -> Result<Self, CliffordError> {
        if grade > self.dim() {
            return Err(CliffordError::GradeOutOfRange { grade, dim: self.dim() });
        }
        Ok(self.map(|b, c| if b.grade() == grade { c.clone() } else { S::zero() }))
    }

    /// Outer product: `⟨X_k Y_l⟩_{k+l}` extended bilinearly.
    pub fn wedge(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let sig = self.sig.clone();
        Ok(self.bilinear(other, |a, b| {
            let (s, k) = blade_product(&sig, a, b);
            (k.grade() == a.grade() + b.grade()).then_some((s, k))
        }))
    }

    /// Grade-lowering contraction `⟨X_k Y_l⟩_{|k-l|}` extended bilinearly.
    ///
    /// A scalar factor simply scales the other argument.
    pub fn contract(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let sig = self.sig.clone();
        Ok(self.bilinear(other, |a, b| {
            let (s, k) = blade_product(&sig, a, b);
            (k.grade() == a.grade().abs_diff(b.grade())).then_some((s, k))
        }))
    }

    /// Hestenes inner product: like [`Multivector::contract`] but zero
    /// whenever either factor is a scalar.
    pub fn inner(&self, other: &Self) -> Result<Self, CliffordError> {
        self.check_same(other)?;
        let sig = self.sig.clone();
        Ok(self.bilinear(other, |a, b| {
            if a.is_scalar() || b.is_scalar() {
                return None;
            }
            let (s, k) = blade_product(&sig, a, b);
            (k.grade() == a.grade().abs_diff(b.grade())).then_some((s, k))
        }))
    }

    pub fn involution(&self, kind: Involution) -> Self {
        self.map(|b, c| kind.sign_for_grade(b.grade()).apply(c.clone()))
    }

    pub fn reverse(&self) -> Self {
        self.involution(Involution::Reverse)
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::Grade)
    }

    pub fn conjugate(&self) -> Self {
        self.involution(Involution::Conjugate)
    }

    /// `(even, odd)` parts; `even + odd == self`.
    pub fn parity_split(&self) -> (Self, Self) {
        let even = self.map(|b, c| if b.is_even() { c.clone() } else { S::zero() });
        let odd = self.map(|b, c| if b.is_even() { S::zero() } else { c.clone() });
        (even, odd)
    }

    pub fn even_part(&self) -> Self {
        self.parity_split().0
    }

    pub fn odd_part(&self) -> Self {
        self.parity_split().1
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;

    /// Panics on signature mismatch; use the checked products for fallible code.
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        assert_eq!(self.sig, rhs.sig, "adding multivectors of different signatures");
        self.map(|b, c| c.clone() + rhs.coeffs[b.index()].clone())
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        assert_eq!(self.sig, rhs.sig, "subtracting multivectors of different signatures");
        self.map(|b, c| c.clone() - rhs.coeffs[b.index()].clone())
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: Multivector<S>) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: Multivector<S>) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> AddAssign<&Multivector<S>> for Multivector<S> {
    fn add_assign(&mut self, rhs: &Multivector<S>) {
        assert_eq!(self.sig, rhs.sig, "adding multivectors of different signatures");
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c = c.clone() + r.clone();
        }
    }
}

impl<S: Scalar> SubAssign<&Multivector<S>> for Multivector<S> {
    fn sub_assign(&mut self, rhs: &Multivector<S>) {
        assert_eq!(self.sig, rhs.sig, "subtracting multivectors of different signatures");
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c = c.clone() - r.clone();
        }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.map(|_, c| -c.clone())
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        -&self
    }
}

impl<S: Scalar> Mul<&S> for &Multivector<S> {
    type Output = Multivector<S>;

    fn mul(self, rhs: &S) -> Multivector<S> {
        self.scale(rhs)
    }
}

/// Renders as a signed blade sum, e.g. `1/2 + e0 - 3*e12`.
impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if blade.is_scalar() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{magnitude}*{blade}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn b(indices: &[usize]) -> Blade {
        Blade::from_indices(indices.iter().copied())
    }

    #[test]
    fn symmetric_product_of_euclidean_vectors() {
        // u = e0 + e1, w = e0 - e1; uw + wu = 2(u0 w0 + u1 w1) = 0
        let s = sig(4, 0);
        let u = Multivector::vector(&s, &[r(1), r(1), r(0), r(0)]);
        let w = Multivector::vector(&s, &[r(1), r(-1), r(0), r(0)]);
        let sym = u.geometric_product(&w).unwrap() + w.geometric_product(&u).unwrap();
        assert!(sym.is_zero());
    }

    #[test]
    fn unit_is_identity() {
        let s = sig(2, 1);
        let a = Multivector::from_terms(&s, [(b(&[0]), r(2)), (b(&[1, 2]), r(-3))]);
        let one = Multivector::one(&s);
        assert_eq!(a.geometric_product(&one).unwrap(), a);
        assert_eq!(one.geometric_product(&a).unwrap(), a);
    }

    #[test]
    fn minkowski_bivector_times_trivector() {
        // γ01 γ012 = γ0 γ1 γ0 γ1 γ2 = -γ0 γ0 γ1 γ1 γ2 = -(1)(-1) γ2 = γ2
        let s = sig(1, 3);
        let x = Multivector::<Rational>::blade(&s, b(&[0, 1]), r(1));
        let y = Multivector::blade(&s, b(&[0, 1, 2]), r(1));
        assert_eq!(x.geometric_product(&y).unwrap(), Multivector::blade(&s, b(&[2]), r(1)));
    }

    #[test]
    fn signature_mismatch() {
        let a = Multivector::<Rational>::one(&sig(1, 3));
        let c = Multivector::<Rational>::one(&sig(3, 1));
        assert!(matches!(a.geometric_product(&c), Err(CliffordError::SignatureMismatch { .. })));
        assert!(a.wedge(&c).is_err());
        assert!(a.contract(&c).is_err());
    }

    #[test]
    fn grade_projection() {
        let s = sig(3, 0);
        let a = Multivector::from_terms(&s, [(b(&[]), r(1)), (b(&[1]), r(1)), (b(&[1, 2]), r(1))]);
        assert_eq!(a.grade_project(1).unwrap(), Multivector::blade(&s, b(&[1]), r(1)));
        assert!(matches!(a.grade_project(4), Err(CliffordError::GradeOutOfRange { .. })));
        let mink = sig(1, 3);
        let g5 = Multivector::<Rational>::blade(&mink, Blade::volume(4), r(1));
        assert_eq!(g5.grade_project(4).unwrap(), g5);
    }

    #[test]
    fn wedge_examples() {
        let s = sig(3, 0);
        let e1 = Multivector::<Rational>::generator(&s, 1);
        let e2 = Multivector::<Rational>::generator(&s, 2);
        assert_eq!(e1.wedge(&e2).unwrap(), Multivector::blade(&s, b(&[1, 2]), r(1)));
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn contraction_examples() {
        let s = sig(4, 0);
        let e0 = Multivector::<Rational>::generator(&s, 0);
        let e01 = Multivector::blade(&s, b(&[0, 1]), r(1));
        let e02 = Multivector::blade(&s, b(&[0, 2]), r(1));
        assert_eq!(e0.contract(&e01).unwrap(), Multivector::generator(&s, 1));
        assert_eq!(e02.contract(&e0).unwrap(), -Multivector::generator(&s, 2));
        // a scalar just scales
        let three = Multivector::scalar(&s, r(3));
        let v = Multivector::vector(&s, &[r(1), r(2), r(0), r(0)]);
        assert_eq!(three.contract(&v).unwrap(), v.scale(&r(3)));
        // the Hestenes inner product drops scalar factors
        assert!(three.inner(&v).unwrap().is_zero());
        assert_eq!(e0.inner(&e01).unwrap(), Multivector::generator(&s, 1));
    }

    #[test]
    fn involution_examples() {
        let s = sig(1, 3);
        let g5 = Multivector::<Rational>::blade(&s, Blade::volume(4), r(1));
        assert_eq!(g5.reverse(), g5);
        let e1 = Multivector::<Rational>::generator(&s, 1);
        assert_eq!(e1.grade_involution(), -e1.clone());
        for f in Blade::all(4).filter(|b| b.grade() == 2) {
            let bv = Multivector::<Rational>::blade(&s, f, r(1));
            assert_eq!(bv.conjugate(), -bv.clone());
        }
        // conjugation is order independent
        let a = Multivector::from_terms(&s, Blade::all(4).map(|b| (b, r(b.0 as i64 + 1))));
        assert_eq!(a.reverse().grade_involution(), a.grade_involution().reverse());
        assert_eq!(a.conjugate(), a.reverse().grade_involution());
    }

    #[test]
    fn parity_split_examples() {
        let s = sig(3, 0);
        let a = Multivector::from_terms(&s, [(b(&[]), r(1)), (b(&[1]), r(1)), (b(&[1, 2]), r(1))]);
        let (even, odd) = a.parity_split();
        assert_eq!(even, Multivector::from_terms(&s, [(b(&[]), r(1)), (b(&[1, 2]), r(1))]));
        assert_eq!(odd, Multivector::blade(&s, b(&[1]), r(1)));

        let full = Multivector::from_terms(&s, Blade::all(3).map(|b| (b, r(1))));
        let even_blades: Vec<Blade> = full.even_part().terms().map(|(b, _)| b).collect();
        assert_eq!(even_blades, vec![b(&[]), b(&[0, 1]), b(&[0, 2]), b(&[1, 2])]);

        let hat = full.grade_involution();
        assert_eq!(hat.even_part(), full.even_part());
        assert_eq!(hat.odd_part(), -full.odd_part());
    }

    #[test]
    fn display_rendering() {
        let s = sig(3, 0);
        let half = Rational::new(1.into(), 2.into());
        let a = Multivector::from_terms(&s, [(b(&[]), half), (b(&[0]), r(1)), (b(&[1, 2]), r(-3))]);
        assert_eq!(a.to_string(), "1/2 + e0 - 3*e12");
        assert_eq!(Multivector::<Rational>::zero(&s).to_string(), "0");
        assert_eq!((-Multivector::<Rational>::generator(&s, 2)).to_string(), "-e2");
    }

    #[test]
    fn float_scalars_work_too() {
        let s = sig(2, 0);
        let e0 = Multivector::<f64>::generator(&s, 0);
        let e1 = Multivector::<f64>::generator(&s, 1);
        let e01 = e0.geometric_product(&e1).unwrap();
        assert_eq!(e01.geometric_product(&e01).unwrap(), Multivector::scalar(&s, -1.0));
    }
}
