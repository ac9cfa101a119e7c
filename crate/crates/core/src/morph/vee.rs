//! The vee product: a new bilinear product on an existing algebra that
//! reproduces the Clifford product of the signature with every generator
//! square flipped except one preserved generator `e_μ`.
//!
//! For blades `A_l`, `B_k`:
//!
//! ```text
//! A_l ∨ B_k = (-1)^{kl} [ B_k A_l - 2 (B_k · e_μ)(e^μ · A_l) ]
//! ```
//!
//! where every product on the right is the current table's product, `·` is
//! the grade-lowering inner product it induces (zero on scalars) and
//! `e^μ = s_μ e_μ` with `s_μ` the current square of `e_μ`.

use crate::blade::{Blade, Sign};
use crate::error::{CliffordError, MorphError};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::N_MAX;

use super::table::{Entry, LazyNode, ProductTable};

/// Up to two integer-weighted blades; the right-hand side of the vee formula
/// for a single blade pair.
type Combination = ([(i64, Blade); 2], usize);

fn vee_combination(base: &ProductTable, preserved: usize, a: Blade, b: Blade) -> Combination {
    let (l, k) = (a.grade(), b.grade());
    let e = Blade::generator(preserved);
    let raise = base.generator_squares()[preserved];

    let ba = base.entry(b, a);
    let mut terms = [(ba.sign.to_i64(), ba.blade), (0, Blade::SCALAR)];
    let mut len = 1;

    // (B_k · e_μ), grade k-1
    let left = (k >= 1).then(|| base.entry(b, e)).filter(|x| x.blade.grade() == k - 1);
    // (e^μ · A_l), grade l-1
    let right = (l >= 1).then(|| base.entry(e, a)).filter(|x| x.blade.grade() == l - 1);
    if let (Some(x), Some(y)) = (left, right) {
        let xy = base.entry(x.blade, y.blade);
        let sign = x.sign * y.sign * xy.sign * raise;
        let weight = -2 * sign.to_i64();
        if xy.blade == terms[0].1 {
            terms[0].0 += weight;
        } else {
            terms[1] = (weight, xy.blade);
            len = 2;
        }
    }
    if (k * l) % 2 == 1 {
        for t in terms.iter_mut() {
            t.0 = -t.0;
        }
    }
    (terms, len)
}

/// `A ∨ B` for two blades under `base`, as a general multivector (no
/// closure check).
pub fn vee_blades<S: Scalar>(
    base: &ProductTable,
    preserved: usize,
    a: Blade,
    b: Blade,
) -> Result<Multivector<S>, MorphError> {
    check_generator(base, preserved)?;
    let (terms, len) = vee_combination(base, preserved, a, b);
    let sig = base.signature();
    Ok(Multivector::from_terms(
        &sig,
        terms[..len].iter().map(|(w, blade)| (*blade, S::from_int(*w))),
    ))
}

/// Single structure constant of the vee product, or a closure violation.
pub(crate) fn vee_entry(
    base: &ProductTable,
    preserved: usize,
    a: Blade,
    b: Blade,
) -> Result<Entry, MorphError> {
    let (terms, len) = vee_combination(base, preserved, a, b);
    let nonzero: Vec<&(i64, Blade)> = terms[..len].iter().filter(|(w, _)| *w != 0).collect();
    match nonzero.as_slice() {
        [(w, blade)] if w.abs() == 1 => Ok(Entry::new(Sign::from_parity(*w < 0), *blade)),
        _ => Err(MorphError::ClosureViolation {
            a,
            b,
            detail: terms[..len]
                .iter()
                .map(|(w, blade)| format!("{w}*{blade}"))
                .collect::<Vec<_>>()
                .join(" + "),
        }),
    }
}

fn check_generator(base: &ProductTable, preserved: usize) -> Result<(), MorphError> {
    if preserved >= base.dim() {
        return Err(CliffordError::GeneratorOutOfRange { index: preserved, dim: base.dim() }.into());
    }
    Ok(())
}

/// The vee table of `base` preserving generator `preserved`.
pub fn vee_table(base: &ProductTable, preserved: usize) -> Result<ProductTable, MorphError> {
    check_generator(base, preserved)?;
    let provenance = format!("{} | vee({preserved})", base.provenance());
    let table = if base.dim() > N_MAX {
        let squares = expected_squares(base, preserved);
        // spot-check closure on the generator pairs; full closure is a theorem
        // for Clifford-like bases, and lookups re-check it
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                vee_entry(base, preserved, Blade::generator(i), Blade::generator(j))?;
            }
        }
        ProductTable::from_lazy(
            base.dim(),
            squares,
            provenance,
            LazyNode::Vee { prev: base.clone(), preserved },
        )
    } else {
        ProductTable::build_dense(base.dim(), provenance, |a, b| vee_entry(base, preserved, a, b))?
    };
    debug_assert_eq!(table.generator_squares(), expected_squares(base, preserved).as_slice());
    Ok(table)
}

fn expected_squares(base: &ProductTable, preserved: usize) -> Vec<Sign> {
    base.generator_squares()
        .iter()
        .enumerate()
        .map(|(i, s)| if i == preserved { *s } else { -*s })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::table::{base_table, verify_isomorphism};
    use crate::signature::{Signature, N_MAX_LAZY};
    use crate::Rational;

    fn euclid4() -> ProductTable {
        base_table(&Signature::new(4, 0).unwrap())
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn generator_squares_under_vee() {
        let t = euclid4();
        let sig = t.signature();
        let e0 = Blade::generator(0);
        assert_eq!(vee_blades::<Rational>(&t, 0, e0, e0).unwrap(), Multivector::one(&sig));
        for i in 1..4 {
            let ei = Blade::generator(i);
            assert_eq!(vee_blades::<Rational>(&t, 0, ei, ei).unwrap(), -Multivector::one(&sig));
        }
    }

    #[test]
    fn low_grade_examples() {
        let t = euclid4();
        let sig = t.signature();
        let e01 = Blade::from_indices([0, 1]);
        let e02 = Blade::from_indices([0, 2]);
        let e12 = Blade::from_indices([1, 2]);
        assert_eq!(
            vee_blades::<Rational>(&t, 0, Blade::generator(0), Blade::generator(1)).unwrap(),
            Multivector::blade(&sig, e01, r(1))
        );
        assert_eq!(
            vee_blades::<Rational>(&t, 0, e01, e02).unwrap(),
            Multivector::blade(&sig, e12, r(-1))
        );
    }

    #[test]
    fn vee_table_squares() {
        use Sign::*;
        let v = vee_table(&euclid4(), 0).unwrap();
        assert_eq!(v.generator_squares(), &[Plus, Minus, Minus, Minus]);
        assert_eq!(v.provenance(), "Cl(4,0) | vee(0)");
        let mink = base_table(&Signature::new(1, 3).unwrap());
        assert_eq!(vee_table(&mink, 0).unwrap().generator_squares(), &[Plus; 4]);
        assert_eq!(vee_table(&mink, 1).unwrap().generator_squares(), &[Minus, Minus, Plus, Plus]);
    }

    #[test]
    fn preserved_index_is_checked() {
        assert!(matches!(
            vee_table(&euclid4(), 4),
            Err(MorphError::Clifford(CliffordError::GeneratorOutOfRange { index: 4, dim: 4 }))
        ));
    }

    #[test]
    fn non_clifford_base_breaks_closure() {
        // a base whose e0 square is a scalar but whose e0·e01 contraction is
        // inconsistent with it: swap the sign of e0 * e01 only
        let t = base_table(&Signature::new(2, 0).unwrap());
        let mut entries: Vec<Entry> = t.entries().map(|(_, _, e)| e).collect();
        let (e0, e01) = (Blade::generator(0), Blade::from_indices([0, 1]));
        let idx = (e01.index() << 2) | e0.index();
        entries[idx].sign = -entries[idx].sign;
        let broken = ProductTable::from_dense_entries(2, "broken".into(), entries).unwrap();
        assert!(matches!(vee_table(&broken, 0), Err(MorphError::ClosureViolation { .. })));
    }

    #[test]
    fn lazy_vee_above_dense_limit() {
        let sig = Signature::with_limit(9, 1, N_MAX_LAZY).unwrap();
        let base = base_table(&sig);
        assert!(!base.is_dense());
        let v = vee_table(&base, 3).unwrap();
        let target = base_table(&sig.flipped_except(3));
        // a strided sample of pairs
        for a in (0..1024u32).step_by(37) {
            for b in (0..1024u32).step_by(29) {
                assert_eq!(v.entry(Blade(a), Blade(b)), target.entry(Blade(a), Blade(b)));
            }
        }
        assert_eq!(v.generator_squares(), target.generator_squares());
    }

    #[test]
    fn dense_vee_simulates_flipped_signature() {
        let v = vee_table(&euclid4(), 0).unwrap();
        let mink = base_table(&Signature::new(1, 3).unwrap());
        assert!(verify_isomorphism(&v, &mink).unwrap().equal);
    }
}
