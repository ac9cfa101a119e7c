use crate::blade::Blade;
use crate::error::FieldError;
use crate::morph::{table_product, ProductTable};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

use super::dirac::{dirac, DiracContext, Side};
use super::poly::PolyField;

/// `Φ̃ ∘ I` with `I` the volume blade. Under the `Cl(1,3)` base table this is
/// the Minkowski star; under its vee table with `γ_0` preserved it is the
/// euclidean one.
pub fn hodge_star<S: Scalar>(table: &ProductTable, value: &Multivector<S>) -> Result<Multivector<S>, FieldError> {
    let volume = Multivector::blade(value.sig(), Blade::volume(value.dim()), S::one());
    Ok(table_product(table, &value.reverse(), &volume)?)
}

pub fn hodge_star_field<S: Scalar>(table: &ProductTable, field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    field.try_map(|m| hodge_star(table, m))
}

/// `γ_0 Φ γ_0` in the value's own Clifford product. Coordinates are left alone.
pub fn parity<S: Scalar>(value: &Multivector<S>) -> Result<Multivector<S>, FieldError> {
    if value.dim() != 4 {
        return Err(FieldError::UnsupportedDimension { expected: 4, actual: value.dim() });
    }
    let g0 = Multivector::generator(value.sig(), 0);
    Ok(g0.geometric_product(value)?.geometric_product(&g0)?)
}

pub fn parity_field<S: Scalar>(field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    field.try_map(parity)
}

/// `½(∇Φ + Φ̂∇⃖)`.
pub fn exterior_d<S: Scalar>(ctx: &DiracContext<S>, field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    let left = dirac(ctx, field, Side::Left)?;
    let right = dirac(ctx, &field.grade_involution(), Side::Right)?;
    Ok((left + right).scale(&S::half()))
}

/// `½(∇Φ − Φ̂∇⃖)`.
pub fn codifferential<S: Scalar>(ctx: &DiracContext<S>, field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    let left = dirac(ctx, field, Side::Left)?;
    let right = dirac(ctx, &field.grade_involution(), Side::Right)?;
    Ok((left - right).scale(&S::half()))
}
