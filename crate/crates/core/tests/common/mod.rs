#![allow(dead_code)]

use clifford_morph::field::PolyField;
use clifford_morph::{rational, Blade, Multivector, Rational, Signature};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn multivector(sig: Signature) -> impl Strategy<Value = Multivector<Rational>> {
    let count = sig.blade_count();
    prop::collection::vec(small_rational(), count)
        .prop_map(move |coeffs| Multivector::from_coeffs(&sig, coeffs).unwrap())
}

pub fn sparse_multivector(sig: Signature, max_terms: usize) -> impl Strategy<Value = Multivector<Rational>> {
    let count = sig.blade_count() as u32;
    prop::collection::vec((0..count, -3i64..=3), 1..=max_terms)
        .prop_map(move |terms| Multivector::from_terms(&sig, terms.into_iter().map(|(b, c)| (Blade(b), rational(c)))))
}

pub fn vector(sig: Signature) -> impl Strategy<Value = Multivector<Rational>> {
    let n = sig.dim();
    prop::collection::vec(small_rational(), n).prop_map(move |c| Multivector::vector(&sig, &c))
}

/// Polynomial field of total degree at most 3 over `sig`.
pub fn poly_field(sig: Signature, even_only: bool) -> impl Strategy<Value = PolyField<Rational>> {
    let n = sig.dim();
    let blades: Vec<Blade> = Blade::all(n).filter(|b| !even_only || b.is_even()).collect();
    let monomial = prop::collection::vec(0u32..=3, n).prop_filter("degree <= 3", |e| e.iter().sum::<u32>() <= 3);
    let term = (monomial, prop::sample::select(blades), -3i64..=3);
    prop::collection::vec(term, 1..=5).prop_map(move |terms| {
        let mut f = PolyField::zero(&sig);
        for (exps, blade, c) in terms {
            f = f + PolyField::monomial(&exps, Multivector::blade(&sig, blade, rational(c))).unwrap();
        }
        f
    })
}

pub fn minkowski() -> Signature {
    Signature::new(1, 3).unwrap()
}

pub fn euclidean4() -> Signature {
    Signature::new(4, 0).unwrap()
}
