use crate::blade::{Blade, Sign};
use crate::error::FieldError;
use crate::morph::{base_table, table_inner, vee_table, ProductTable};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

use super::poly::PolyField;

const MINKOWSKI_SIGNS: [Sign; 4] = [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Minus];
const EUCLIDEAN_SIGNS: [Sign; 4] = [Sign::Plus; 4];

/// Product table plus the signs `s_μ` with `e^μ = s_μ e_μ`, and the mass and
/// charge entering the Dirac-Hestenes equation.
#[derive(Clone, Debug)]
pub struct DiracContext<S> {
    table: ProductTable,
    raising: Vec<Sign>,
    mass: S,
    charge: S,
}

impl<S: Scalar> DiracContext<S> {
    pub fn new(table: ProductTable, raising: Vec<Sign>, mass: S, charge: S) -> Result<Self, FieldError> {
        if raising.len() != table.dim() {
            return Err(FieldError::DimensionMismatch { left: table.dim(), right: raising.len() });
        }
        Ok(DiracContext { table, raising, mass, charge })
    }

    /// Spacetime algebra `Cl(1,3)` with `γ^μ = η^{μμ} γ_μ`.
    pub fn minkowski(mass: S, charge: S) -> Self {
        let table = base_table(&Signature::new(1, 3).expect("n = 4"));
        DiracContext { table, raising: MINKOWSKI_SIGNS.to_vec(), mass, charge }
    }

    /// `Cl(4,0)` carrying the vee product with `e_0` preserved, so the
    /// operator squares to the Minkowski wave operator. Indices are not raised.
    pub fn vee_euclidean(mass: S, charge: S) -> Self {
        let base = base_table(&Signature::new(4, 0).expect("n = 4"));
        let table = vee_table(&base, 0).expect("base tables are closed under vee");
        DiracContext { table, raising: EUCLIDEAN_SIGNS.to_vec(), mass, charge }
    }

    /// Plain `Cl(4,0)` Clifford product.
    pub fn euclidean(mass: S, charge: S) -> Self {
        let table = base_table(&Signature::new(4, 0).expect("n = 4"));
        DiracContext { table, raising: EUCLIDEAN_SIGNS.to_vec(), mass, charge }
    }

    /// `Cl(1,3)` carrying the vee product with `γ_0` preserved; Minkowski
    /// raising. This is the setting of the euclidean-flavoured `ď` and `δ̌`.
    pub fn euclidean_in_minkowski() -> Self {
        let base = base_table(&Signature::new(1, 3).expect("n = 4"));
        let table = vee_table(&base, 0).expect("base tables are closed under vee");
        DiracContext { table, raising: MINKOWSKI_SIGNS.to_vec(), mass: S::zero(), charge: S::zero() }
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn raising(&self) -> &[Sign] {
        &self.raising
    }

    pub fn mass(&self) -> &S {
        &self.mass
    }

    pub fn charge(&self) -> &S {
        &self.charge
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// `e^μ` as a multivector of `sig`.
    pub fn raised_generator(&self, sig: &Signature, index: usize) -> Multivector<S> {
        Multivector::blade(sig, Blade::generator(index), S::from_sign(self.raising[index]))
    }

    /// Vector `A = Σ a_ν e^ν` from scalar covariant components `a_ν`; only the
    /// scalar part of each component is read.
    pub fn potential(&self, components: &[PolyField<S>]) -> Result<PolyField<S>, FieldError> {
        if components.len() != self.dim() {
            return Err(FieldError::DimensionMismatch { left: self.dim(), right: components.len() });
        }
        let mut out = PolyField::zero(components[0].sig());
        for (nu, a) in components.iter().enumerate() {
            let e = self.raised_generator(a.sig(), nu);
            out = out + a.map(|m| e.scale(m.scalar_part()));
        }
        Ok(out)
    }

    fn check_field(&self, field: &PolyField<S>) -> Result<(), FieldError> {
        if field.dim() != self.dim() {
            return Err(FieldError::DimensionMismatch { left: self.dim(), right: field.dim() });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `∇Φ = Σ e^μ ∘ ∂_μΦ` or `Φ∇⃖ = Σ ∂_μΦ ∘ e^μ` under the context table.
pub fn dirac<S: Scalar>(ctx: &DiracContext<S>, field: &PolyField<S>, side: Side) -> Result<PolyField<S>, FieldError> {
    ctx.check_field(field)?;
    let mut out = PolyField::zero(field.sig());
    for mu in 0..ctx.dim() {
        let d = field.partial(mu)?;
        let e = ctx.raised_generator(field.sig(), mu);
        let term = match side {
            Side::Left => d.mul_left(&ctx.table, &e)?,
            Side::Right => d.mul_right(&ctx.table, &e)?,
        };
        out = out + term;
    }
    Ok(out)
}

/// `Σ s_μ ∂_μ²Φ` with `s_μ` the generator squares of the table.
pub fn wave_operator<S: Scalar>(ctx: &DiracContext<S>, field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    ctx.check_field(field)?;
    let mut out = PolyField::zero(field.sig());
    for (mu, s) in ctx.table.generator_squares().iter().enumerate() {
        let dd = field.partial(mu)?.partial(mu)?;
        out = out + dd.scale(&S::from_sign(*s));
    }
    Ok(out)
}

/// `∇∇Φ − □Φ`; identically zero for any table whose generators anticommute.
pub fn wave_check<S: Scalar>(ctx: &DiracContext<S>, field: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    let twice = dirac(ctx, &dirac(ctx, field, Side::Left)?, Side::Left)?;
    Ok(twice - wave_operator(ctx, field)?)
}

/// Which written form of the Dirac-Hestenes equation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiracForm {
    /// `∇ψ − mψγ_012 + eAψγ_12` in `Cl(1,3)` with raised indices.
    Minkowski,
    /// `e_0∂_0ψ + ∂_iψe_i − m e_12ψe_0 + e e_12(ψA − 2(ψ·e_0)A_0)` in `Cl(4,0)`.
    Vee,
    /// The Minkowski formula evaluated with the plain `Cl(4,0)` product.
    Euclidean,
}

impl DiracForm {
    pub fn name(self) -> &'static str {
        match self {
            DiracForm::Minkowski => "minkowski",
            DiracForm::Vee => "vee",
            DiracForm::Euclidean => "euclidean",
        }
    }

    /// Generator squares of the table and raising signs the form expects.
    fn expected(self) -> ([Sign; 4], [Sign; 4]) {
        match self {
            DiracForm::Minkowski => (MINKOWSKI_SIGNS, MINKOWSKI_SIGNS),
            DiracForm::Vee => (MINKOWSKI_SIGNS, EUCLIDEAN_SIGNS),
            DiracForm::Euclidean => (EUCLIDEAN_SIGNS, EUCLIDEAN_SIGNS),
        }
    }
}

pub(crate) fn check_form<S: Scalar>(ctx: &DiracContext<S>, form: DiracForm) -> Result<(), FieldError> {
    if ctx.dim() != 4 {
        return Err(FieldError::UnsupportedDimension { expected: 4, actual: ctx.dim() });
    }
    let (squares, raising) = form.expected();
    let wrong = |reason: String| FieldError::WrongTable { form: form.name(), reason };
    if ctx.table.generator_squares() != squares {
        return Err(wrong(format!("table generator squares are {:?}", sign_list(ctx.table.generator_squares()))));
    }
    if ctx.raising != raising {
        return Err(wrong(format!("raising signs are {:?}", sign_list(&ctx.raising))));
    }
    Ok(())
}

fn sign_list(signs: &[Sign]) -> Vec<i64> {
    signs.iter().map(|s| s.to_i64()).collect()
}

/// The product used by the expanded vee form: the opposite vee of the context
/// table, which is `Cl(4,0)` again.
pub(crate) fn euclidean_partner(ctx_table: &ProductTable) -> Result<ProductTable, FieldError> {
    Ok(vee_table(ctx_table, 0)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DhResidual<S> {
    pub residual: PolyField<S>,
    /// False when ψ has odd-grade parts; the formula is still evaluated.
    pub even_input: bool,
}

pub fn dh_residual<S: Scalar>(
    ctx: &DiracContext<S>,
    psi: &PolyField<S>,
    form: DiracForm,
    potential: Option<&PolyField<S>>,
) -> Result<DhResidual<S>, FieldError> {
    check_form(ctx, form)?;
    ctx.check_field(psi)?;
    if let Some(a) = potential {
        ctx.check_field(a)?;
    }
    let sig = psi.sig();
    let e012 = Multivector::blade(sig, Blade(0b0111), S::one());
    let e12 = Multivector::blade(sig, Blade(0b0110), S::one());
    let t = &ctx.table;
    let residual = match form {
        DiracForm::Minkowski | DiracForm::Euclidean => {
            let mut r = dirac(ctx, psi, Side::Left)? - psi.mul_right(t, &e012)?.scale(&ctx.mass);
            if let Some(a) = potential {
                let a_psi = PolyField::table_product(t, a, psi)?;
                r = r + a_psi.mul_right(t, &e12)?.scale(&ctx.charge);
            }
            r
        }
        DiracForm::Vee => {
            let euclid = euclidean_partner(t)?;
            let mut r = expanded_vee_dirac(&euclid, psi)? - expanded_vee_mass(&euclid, psi)?.scale(&ctx.mass);
            if let Some(a) = potential {
                r = r + expanded_vee_interaction(&euclid, psi, a)?.scale(&ctx.charge);
            }
            r
        }
    };
    Ok(DhResidual { residual, even_input: psi.is_even() })
}

/// `e_0∂_0ψ + Σ_i ∂_iψ e_i` under `product`.
pub fn expanded_vee_dirac<S: Scalar>(product: &ProductTable, psi: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    let sig = psi.sig();
    let mut out = psi.partial(0)?.mul_left(product, &Multivector::generator(sig, 0))?;
    for i in 1..psi.dim() {
        out = out + psi.partial(i)?.mul_right(product, &Multivector::generator(sig, i))?;
    }
    Ok(out)
}

/// `e_12 ψ e_0` under `product`.
pub fn expanded_vee_mass<S: Scalar>(product: &ProductTable, psi: &PolyField<S>) -> Result<PolyField<S>, FieldError> {
    let sig = psi.sig();
    let e12 = Multivector::blade(sig, Blade(0b0110), S::one());
    psi.mul_left(product, &e12)?.mul_right(product, &Multivector::generator(sig, 0))
}

/// `e_12(ψA − 2(ψ·e_0)A_0)` under `product`, with `A_0` the `e_0` component of `A`.
pub fn expanded_vee_interaction<S: Scalar>(
    product: &ProductTable,
    psi: &PolyField<S>,
    potential: &PolyField<S>,
) -> Result<PolyField<S>, FieldError> {
    let sig = psi.sig();
    let e0 = Multivector::generator(sig, 0);
    let e12 = Multivector::blade(sig, Blade(0b0110), S::one());
    let psi_a = PolyField::table_product(product, psi, potential)?;
    let psi_dot_e0 = psi.try_map(|m| table_inner(product, m, &e0))?;
    let a0 = potential.component(Blade::generator(0));
    let correction = PolyField::table_product(product, &psi_dot_e0, &a0)?.scale(&S::from_int(2));
    (psi_a - correction).mul_left(product, &e12)
}
