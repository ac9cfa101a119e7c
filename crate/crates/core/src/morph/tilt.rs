//! The tilt product `A_l ∨_t B_k = (-1)^{kl} B_k A_l`, which realises the
//! opposite algebra and therefore flips every generator square.

use crate::blade::{Blade, Sign};
use crate::signature::N_MAX;

use super::table::{Entry, LazyNode, ProductTable};

pub(crate) fn tilt_entry(base: &ProductTable, a: Blade, b: Blade) -> Entry {
    let e = base.entry(b, a);
    let parity = Sign::from_parity((a.grade() * b.grade()) % 2 == 1);
    Entry::new(parity * e.sign, e.blade)
}

pub fn tilt_table(base: &ProductTable) -> ProductTable {
    let provenance = format!("{} | tilt", base.provenance());
    if base.dim() > N_MAX {
        let squares = base.generator_squares().iter().map(|s| -*s).collect();
        return ProductTable::from_lazy(
            base.dim(),
            squares,
            provenance,
            LazyNode::Tilt { prev: base.clone() },
        );
    }
    ProductTable::build_dense(base.dim(), provenance, |a, b| Ok(tilt_entry(base, a, b)))
        .expect("the opposite of a valid table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::table::{base_table, verify_isomorphism};
    use crate::signature::Signature;

    #[test]
    fn spatial_square_flips() {
        let mink = base_table(&Signature::new(1, 3).unwrap());
        let t = tilt_table(&mink);
        let g1 = Blade::generator(1);
        assert_eq!(t.entry(g1, g1), Entry::new(Sign::Plus, Blade::SCALAR));
        assert_eq!(t.generator_squares(), Signature::new(1, 3).unwrap().flipped().squares());
    }

    #[test]
    fn opposite_of_minkowski() {
        let sig = Signature::new(1, 3).unwrap();
        let t = tilt_table(&base_table(&sig));
        assert!(verify_isomorphism(&t, &base_table(&sig.flipped())).unwrap().equal);
        // the standard-order Cl(3,1) puts the negative square last instead
        assert!(!verify_isomorphism(&t, &base_table(&Signature::new(3, 1).unwrap())).unwrap().equal);
    }

    #[test]
    fn double_tilt_is_identity() {
        let base = base_table(&Signature::new(2, 3).unwrap());
        assert!(verify_isomorphism(&tilt_table(&tilt_table(&base)), &base).unwrap().equal);
        assert_eq!(tilt_table(&base).generator_squares(), &[Sign::Minus, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Plus]);
    }
}
