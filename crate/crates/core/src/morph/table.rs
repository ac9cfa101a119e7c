use std::sync::Arc;

use crate::blade::{blade_product, Blade, Sign};
use crate::error::MorphError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::{Signature, N_MAX};

use super::tilt::tilt_entry;
use super::vee::vee_entry;

/// One structure constant: `a * b = sign * blade`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub sign: Sign,
    pub blade: Blade,
}

impl Entry {
    pub fn new(sign: Sign, blade: Blade) -> Self {
        Entry { sign, blade }
    }
}

#[derive(Debug)]
pub(crate) enum LazyNode {
    Base(Signature),
    Vee { prev: ProductTable, preserved: usize },
    Tilt { prev: ProductTable },
}

#[derive(Clone, Debug)]
enum Store {
    Dense(Arc<[Entry]>),
    Lazy(Arc<LazyNode>),
}

/// A bilinear product on the blades of an `n`-dimensional algebra in which
/// every blade pair multiplies to a single signed blade.
///
/// Tables up to [`N_MAX`] generators are precomputed; larger ones evaluate each
/// pair on demand by replaying their construction. Tables are immutable and
/// cheap to clone.
#[derive(Clone, Debug)]
pub struct ProductTable {
    dim: usize,
    squares: Vec<Sign>,
    provenance: String,
    store: Store,
}

impl ProductTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blade_count(&self) -> usize {
        1 << self.dim
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.store, Store::Dense(_))
    }

    /// Squares of the generators under this product.
    pub fn generator_squares(&self) -> &[Sign] {
        &self.squares
    }

    /// The diagonal signature this product realises on its generators.
    pub fn signature(&self) -> Signature {
        Signature::from_squares(self.squares.clone()).expect("table dimension is validated")
    }

    /// Structure constant for `a * b`.
    pub fn entry(&self, a: Blade, b: Blade) -> Entry {
        match &self.store {
            Store::Dense(entries) => entries[(a.index() << self.dim) | b.index()],
            Store::Lazy(node) => match node.as_ref() {
                LazyNode::Base(sig) => {
                    let (sign, blade) = blade_product(sig, a, b);
                    Entry { sign, blade }
                }
                LazyNode::Vee { prev, preserved } => vee_entry(prev, *preserved, a, b)
                    .unwrap_or_else(|e| panic!("lazy vee table lost closure: {e}")),
                LazyNode::Tilt { prev } => tilt_entry(prev, a, b),
            },
        }
    }

    /// All entries in `(a, b)` lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Blade, Blade, Entry)> + '_ {
        let count = self.blade_count() as u32;
        (0..count).flat_map(move |a| {
            (0..count).map(move |b| (Blade(a), Blade(b), self.entry(Blade(a), Blade(b))))
        })
    }

    pub(crate) fn from_lazy(dim: usize, squares: Vec<Sign>, provenance: String, node: LazyNode) -> Self {
        ProductTable { dim, squares, provenance, store: Store::Lazy(Arc::new(node)) }
    }

    /// Builds a dense table from a per-pair rule, enforcing closure,
    /// unitality and scalar generator squares.
    pub(crate) fn build_dense(
        dim: usize,
        provenance: String,
        mut rule: impl FnMut(Blade, Blade) -> Result<Entry, MorphError>,
    ) -> Result<Self, MorphError> {
        let count = 1usize << dim;
        let mut entries = Vec::with_capacity(count * count);
        for a in 0..count as u32 {
            for b in 0..count as u32 {
                entries.push(rule(Blade(a), Blade(b))?);
            }
        }
        let table = Self::from_dense_entries(dim, provenance, entries)?;
        debug_assert!(
            table.sampled_associativity_holds(),
            "constructed table {} is not associative",
            table.provenance
        );
        Ok(table)
    }

    /// Wraps a full row-major entry list (`a` major, `b` minor). Checks
    /// shape, unitality and scalar generator squares only: a table read from
    /// a file may be corrupt, and finding where is the isomorphism check's job.
    pub fn from_dense_entries(
        dim: usize,
        provenance: String,
        entries: Vec<Entry>,
    ) -> Result<Self, MorphError> {
        if dim == 0 || dim > N_MAX {
            return Err(crate::error::CliffordError::DimensionOutOfRange { dim, max: N_MAX }.into());
        }
        let count = 1usize << dim;
        if entries.len() != count * count {
            return Err(MorphError::EntryCount { expected: count * count, actual: entries.len() });
        }
        for (i, e) in entries.iter().enumerate() {
            if e.blade.index() >= count {
                return Err(MorphError::ClosureViolation {
                    a: Blade((i >> dim) as u32),
                    b: Blade((i & (count - 1)) as u32),
                    detail: format!("result blade mask {} outside the algebra", e.blade.0),
                });
            }
        }
        for x in 0..count {
            let identity = Entry::new(Sign::Plus, Blade(x as u32));
            if entries[x] != identity {
                return Err(MorphError::NotUnital { a: Blade::SCALAR, b: Blade(x as u32) });
            }
            if entries[x << dim] != identity {
                return Err(MorphError::NotUnital { a: Blade(x as u32), b: Blade::SCALAR });
            }
        }
        let mut squares = Vec::with_capacity(dim);
        for mu in 0..dim {
            let g = Blade::generator(mu);
            let e = entries[(g.index() << dim) | g.index()];
            if !e.blade.is_scalar() {
                return Err(MorphError::NonScalarSquare { blade: g });
            }
            squares.push(e.sign);
        }
        Ok(ProductTable { dim, squares, provenance, store: Store::Dense(entries.into()) })
    }

    /// Blade-level associativity over a deterministic sample of triples
    /// (all triples when `n <= 4`).
    pub fn sampled_associativity_holds(&self) -> bool {
        let count = self.blade_count() as u64;
        let triples: Box<dyn Iterator<Item = (u64, u64, u64)>> = if self.dim <= 4 {
            Box::new((0..count).flat_map(move |a| {
                (0..count).flat_map(move |b| (0..count).map(move |c| (a, b, c)))
            }))
        } else {
            // a fixed LCG walk keeps this reproducible without an RNG dependency
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            Box::new((0..512).map(move |_| {
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 33) % count
                };
                (next(), next(), next())
            }))
        };
        for (a, b, c) in triples {
            let (a, b, c) = (Blade(a as u32), Blade(b as u32), Blade(c as u32));
            let ab = self.entry(a, b);
            let left = self.entry(ab.blade, c);
            let bc = self.entry(b, c);
            let right = self.entry(a, bc.blade);
            if left.blade != right.blade || ab.sign * left.sign != bc.sign * right.sign {
                return false;
            }
        }
        true
    }
}

/// Clifford product table of a signature.
pub fn base_table(sig: &Signature) -> ProductTable {
    let provenance = sig.to_string();
    if sig.dim() > N_MAX {
        return ProductTable::from_lazy(
            sig.dim(),
            sig.squares().to_vec(),
            provenance,
            LazyNode::Base(sig.clone()),
        );
    }
    ProductTable::build_dense(sig.dim(), provenance, |a, b| {
        let (sign, blade) = blade_product(sig, a, b);
        Ok(Entry { sign, blade })
    })
    .expect("Clifford products of a diagonal metric are closed")
}

/// Bilinear extension of `table` to multivectors. The result lives in the
/// same host algebra as `a`.
pub fn table_product<S: Scalar>(
    table: &ProductTable,
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, MorphError> {
    check_dims(table, a)?;
    check_dims(table, b)?;
    Ok(a.bilinear(b, |x, y| {
        let e = table.entry(x, y);
        Some((e.sign, e.blade))
    }))
}

/// Hestenes inner product induced by `table`: `⟨X_k ∘ Y_l⟩_{|k-l|}`, zero when
/// either factor is a scalar.
pub fn table_inner<S: Scalar>(
    table: &ProductTable,
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, MorphError> {
    check_dims(table, a)?;
    check_dims(table, b)?;
    Ok(a.bilinear(b, |x, y| {
        if x.is_scalar() || y.is_scalar() {
            return None;
        }
        let e = table.entry(x, y);
        (e.blade.grade() == x.grade().abs_diff(y.grade())).then_some((e.sign, e.blade))
    }))
}

/// Grade-raising part `⟨X_k ∘ Y_l⟩_{k+l}` of the table product.
pub fn table_wedge<S: Scalar>(
    table: &ProductTable,
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, MorphError> {
    graded(table, a, b, |k, l| k + l)
}

/// `⟨X_k ∘ Y_l⟩_{|k-l|}` of the table product; a scalar factor just scales.
pub fn table_contract<S: Scalar>(
    table: &ProductTable,
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, MorphError> {
    graded(table, a, b, usize::abs_diff)
}

fn graded<S: Scalar>(
    table: &ProductTable,
    a: &Multivector<S>,
    b: &Multivector<S>,
    target: impl Fn(usize, usize) -> usize,
) -> Result<Multivector<S>, MorphError> {
    check_dims(table, a)?;
    check_dims(table, b)?;
    Ok(a.bilinear(b, |x, y| {
        let e = table.entry(x, y);
        (e.blade.grade() == target(x.grade(), y.grade())).then_some((e.sign, e.blade))
    }))
}

fn check_dims<S: Scalar>(table: &ProductTable, a: &Multivector<S>) -> Result<(), MorphError> {
    if table.dim() != a.dim() {
        return Err(MorphError::DimensionMismatch { left: table.dim(), right: a.dim() });
    }
    Ok(())
}

/// First blade pair on which two tables disagree, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: Blade,
    pub b: Blade,
    pub left: Entry,
    pub right: Entry,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
    pub pairs_checked: usize,
}

/// Compares two tables entry by entry under the identity map on blades.
pub fn verify_isomorphism(
    left: &ProductTable,
    right: &ProductTable,
) -> Result<IsomorphismReport, MorphError> {
    if left.dim() != right.dim() {
        return Err(MorphError::DimensionMismatch { left: left.dim(), right: right.dim() });
    }
    let mut pairs_checked = 0;
    for (a, b, l) in left.entries() {
        pairs_checked += 1;
        let r = right.entry(a, b);
        if l != r {
            return Ok(IsomorphismReport {
                equal: false,
                first_mismatch: Some(Mismatch { a, b, left: l, right: r }),
                pairs_checked,
            });
        }
    }
    Ok(IsomorphismReport { equal: true, first_mismatch: None, pairs_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn g(i: usize) -> Blade {
        Blade::generator(i)
    }

    #[test]
    fn graded_parts_match_the_clifford_ones() {
        let sig = Signature::new(2, 2).unwrap();
        let t = base_table(&sig);
        let a = Multivector::<Rational>::from_coeffs(&sig, (0..16).map(|i| Rational::from_integer((i % 5 - 2).into())).collect()).unwrap();
        let b = Multivector::<Rational>::from_coeffs(&sig, (0..16).map(|i| Rational::from_integer((i % 3 - 1).into())).collect()).unwrap();
        assert_eq!(table_wedge(&t, &a, &b).unwrap(), a.wedge(&b).unwrap());
        assert_eq!(table_contract(&t, &a, &b).unwrap(), a.contract(&b).unwrap());
    }

    #[test]
    fn base_table_examples() {
        let m = base_table(&Signature::new(1, 3).unwrap());
        assert_eq!(m.entry(g(0), g(0)), Entry::new(Sign::Plus, Blade::SCALAR));
        for x in Blade::all(4) {
            assert_eq!(m.entry(Blade::SCALAR, x), Entry::new(Sign::Plus, x));
        }
        let e = base_table(&Signature::new(4, 0).unwrap());
        let e12 = Blade::from_indices([1, 2]);
        assert_eq!(e.entry(e12, e12), Entry::new(Sign::Minus, Blade::SCALAR));
        assert_eq!(e.provenance(), "Cl(4,0)");
    }

    #[test]
    fn squares_of_base_table() {
        use Sign::*;
        let t = base_table(&Signature::new(2, 2).unwrap());
        assert_eq!(t.generator_squares(), &[Plus, Plus, Minus, Minus]);
    }

    #[test]
    fn mismatch_is_reported_in_order() {
        let m = base_table(&Signature::new(1, 3).unwrap());
        let opposite = base_table(&Signature::new(1, 3).unwrap().flipped());
        let report = verify_isomorphism(&m, &opposite).unwrap();
        assert!(!report.equal);
        let mm = report.first_mismatch.unwrap();
        assert_eq!((mm.a, mm.b), (g(0), g(0)));
        assert!(verify_isomorphism(&m, &m).unwrap().equal);
        let small = base_table(&Signature::new(1, 1).unwrap());
        assert!(matches!(
            verify_isomorphism(&m, &small),
            Err(MorphError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn corrupted_entries_are_rejected_or_detected() {
        let t = base_table(&Signature::new(2, 0).unwrap());
        let mut entries: Vec<Entry> = t.entries().map(|(_, _, e)| e).collect();
        let mut bad_unit = entries.clone();
        bad_unit[1].sign = Sign::Minus;
        assert!(matches!(
            ProductTable::from_dense_entries(2, "bad".into(), bad_unit),
            Err(MorphError::NotUnital { .. })
        ));
        // flip e0 * e1: still a well-formed table shape, but no longer Cl(2,0)
        entries[(1 << 2) | 2].sign = Sign::Minus;
        let corrupt = ProductTable::from_dense_entries(2, "corrupt".into(), entries).unwrap();
        assert!(!corrupt.sampled_associativity_holds());
        let report = verify_isomorphism(&corrupt, &t).unwrap();
        assert_eq!(report.first_mismatch.map(|m| (m.a, m.b)), Some((g(0), g(1))));
    }

    #[test]
    fn table_product_matches_geometric_product() {
        let sig = Signature::new(2, 1).unwrap();
        let t = base_table(&sig);
        let a = Multivector::from_terms(&sig, Blade::all(3).map(|b| (b, Rational::from_integer((b.0 as i64 - 3).into()))));
        let b = Multivector::from_terms(&sig, Blade::all(3).map(|b| (b, Rational::from_integer((2 * b.0 as i64 + 1).into()))));
        assert_eq!(table_product(&t, &a, &b).unwrap(), a.geometric_product(&b).unwrap());
        let one = Multivector::one(&sig);
        assert_eq!(table_product(&t, &one, &b).unwrap(), b);
    }
}
