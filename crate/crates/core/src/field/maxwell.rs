use crate::blade::{Blade, Sign};
use crate::error::FieldError;
use crate::linalg::nullspace;
use crate::morph::{base_table, vee_table, ProductTable};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

use super::dirac::DiracContext;
use super::hodge::{codifferential, exterior_d, hodge_star, parity};
use super::poly::PolyField;

fn check_two_form<S: Scalar>(f: &Multivector<S>) -> Result<(), FieldError> {
    if f.dim() != 4 {
        return Err(FieldError::UnsupportedDimension { expected: 4, actual: f.dim() });
    }
    if !f.is_homogeneous(2) {
        return Err(FieldError::NotTwoForm);
    }
    Ok(())
}

/// Splits `F = E + γ_5 B` with `E` anticommuting with `γ_0`; returns `(E, B)`.
pub fn em_split<S: Scalar>(f: &Multivector<S>) -> Result<(Multivector<S>, Multivector<S>), FieldError> {
    check_two_form(f)?;
    let pf = parity(f)?;
    let e = (f - &pf).scale(&S::half());
    let g5b = (f + &pf).scale(&S::half());
    let g5 = Multivector::blade(f.sig(), Blade::volume(4), S::one());
    let square = g5.geometric_product(&g5)?.scalar_part().clone();
    let g5_inv = g5.scale(&(S::one() / square));
    Ok((e, g5_inv.geometric_product(&g5b)?))
}

/// The euclidean star on the algebra of `f`.
fn euclidean_star<S: Scalar>(f: &Multivector<S>) -> Result<Multivector<S>, FieldError> {
    let vee = vee_table(&base_table(f.sig()), 0)?;
    hodge_star(&vee, f)
}

/// `F = sign · ⋆F`.
pub fn selfdual_check<S: Scalar>(f: &Multivector<S>, sign: Sign) -> Result<bool, FieldError> {
    check_two_form(f)?;
    Ok(*f == euclidean_star(f)?.scale(&S::from_sign(sign)))
}

/// `E = sign · B` in the electric/magnetic split.
pub fn split_condition<S: Scalar>(f: &Multivector<S>, sign: Sign) -> Result<bool, FieldError> {
    let (e, b) = em_split(f)?;
    Ok(e == b.scale(&S::from_sign(sign)))
}

/// Basis of the 2-forms of `host` with `star(F) = sign · F`, where `star` is
/// the Hodge star of `table`.
pub fn two_form_fixed_space<S: Scalar>(
    table: &ProductTable,
    host: &Signature,
    sign: Sign,
) -> Result<Vec<Multivector<S>>, FieldError> {
    if table.dim() != host.dim() {
        return Err(FieldError::DimensionMismatch { left: table.dim(), right: host.dim() });
    }
    let sig = host.clone();
    let blades: Vec<Blade> = Blade::all(sig.dim()).filter(|b| b.grade() == 2).collect();
    let images = blades
        .iter()
        .map(|&b| hodge_star(table, &Multivector::blade(&sig, b, S::one())))
        .collect::<Result<Vec<_>, _>>()?;
    let s = S::from_sign(sign);
    let matrix: Vec<Vec<S>> = blades
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            images
                .iter()
                .enumerate()
                .map(|(j, img)| {
                    let diag = if i == j { s.clone() } else { S::zero() };
                    img.coeff(row).clone() - diag
                })
                .collect()
        })
        .collect();
    Ok(nullspace(&matrix, blades.len())
        .into_iter()
        .map(|v| Multivector::from_terms(&sig, blades.iter().copied().zip(v)))
        .collect())
}

/// `(dF, δF)` under the context's operators.
pub fn maxwell_residual<S: Scalar>(
    ctx: &DiracContext<S>,
    f: &PolyField<S>,
) -> Result<(PolyField<S>, PolyField<S>), FieldError> {
    if !f.is_homogeneous(2) {
        return Err(FieldError::NotTwoForm);
    }
    Ok((exterior_d(ctx, f)?, codifferential(ctx, f)?))
}
