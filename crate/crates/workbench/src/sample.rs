//! Seeded random inputs for the property checks.

use clifford_morph::field::PolyField;
use clifford_morph::{Blade, Multivector, Rational, Sign, Signature};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn small_rational(rng: &mut SuiteRng) -> Rational {
    let num: i64 = rng.random_range(-4..=4);
    let den: i64 = rng.random_range(1..=3);
    Rational::new(num.into(), den.into())
}

/// Up to `max_terms` random blades with small rational coefficients.
pub fn multivector(rng: &mut SuiteRng, sig: &Signature, max_terms: usize) -> Multivector<Rational> {
    let terms = rng.random_range(1..=max_terms);
    let count = sig.blade_count() as u32;
    Multivector::from_terms(sig, (0..terms).map(|_| (Blade(rng.random_range(0..count)), small_rational(rng))).collect::<Vec<_>>())
}

pub fn vector(rng: &mut SuiteRng, sig: &Signature) -> Multivector<Rational> {
    let comps: Vec<Rational> = (0..sig.dim()).map(|_| small_rational(rng)).collect();
    Multivector::vector(sig, &comps)
}

/// Polynomial field of total degree at most 3.
pub fn field(rng: &mut SuiteRng, sig: &Signature, even_only: bool) -> PolyField<Rational> {
    let blades: Vec<Blade> = Blade::all(sig.dim()).filter(|b| !even_only || b.is_even()).collect();
    let mut f = PolyField::zero(sig);
    for _ in 0..rng.random_range(1..=4) {
        let mut exps = vec![0u32; sig.dim()];
        for _ in 0..rng.random_range(0..=3) {
            exps[rng.random_range(0..sig.dim())] += 1;
        }
        let blade = blades[rng.random_range(0..blades.len())];
        let value = Multivector::blade(sig, blade, small_rational(rng));
        f = f + PolyField::monomial(&exps, value).expect("exponent count matches");
    }
    f
}

pub fn signature(rng: &mut SuiteRng, dim: usize) -> Signature {
    let squares = (0..dim).map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus }).collect();
    Signature::from_squares(squares).expect("dimension is small")
}
