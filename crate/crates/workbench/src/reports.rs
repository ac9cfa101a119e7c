//! Reports for the `dirac` and `selfdual` commands.

use clifford_morph::field::*;
use clifford_morph::linalg::rank;
use clifford_morph::morph::{base_table, vee_table};
use clifford_morph::{Blade, Multivector, Rational, Sign, Signature};
use serde::Serialize;

use crate::error::WorkbenchError;
use crate::eval::render;

#[derive(Debug, Serialize)]
pub struct EquationRow {
    pub blade: String,
    pub minkowski: String,
    pub vee: String,
}

#[derive(Debug, Serialize)]
pub struct DiracReport {
    pub mass: String,
    pub charge: String,
    pub with_potential: bool,
    pub equations: Vec<EquationRow>,
    pub equivalent: bool,
    pub flipped_components: Vec<String>,
    pub flipped_equations: Vec<String>,
    pub control_equivalent: bool,
}

impl DiracReport {
    /// The expected outcome: the two written forms agree after recoding and
    /// the plain euclidean operator does not.
    pub fn passed(&self) -> bool {
        self.equivalent && !self.control_equivalent
    }

    pub fn human(&self) -> String {
        let potential = if self.with_potential { "on" } else { "off" };
        let mut out = format!("component systems, m = {}, e = {}, potential {potential}\n", self.mass, self.charge);
        let width = self.equations.iter().map(|r| r.minkowski.len()).max().unwrap_or(0).max(9);
        out.push_str(&format!("{:<6} {:<width$} | vee form\n", "blade", "minkowski"));
        for row in &self.equations {
            out.push_str(&format!("{:<6} {:<width$} | {}\n", row.blade, row.minkowski, row.vee));
        }
        if self.equivalent {
            out.push_str(&format!("recoding: flip u[{}]\n", self.flipped_components.join("], u[")));
            out.push_str(&format!("equation signs flipped: {}\n", listing(&self.flipped_equations)));
            out.push_str("verdict: equivalent\n");
        } else {
            out.push_str("verdict: not equivalent\n");
        }
        let control = if self.control_equivalent { "equivalent" } else { "not equivalent" };
        out.push_str(&format!("plain euclidean operator: {control}\n"));
        out
    }
}

fn listing(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn even_basis() -> Vec<Blade> {
    Blade::all(4).filter(|b| b.is_even()).collect()
}

pub fn dirac_report(mass: &Rational, charge: &Rational, with_potential: bool) -> Result<DiracReport, WorkbenchError> {
    let mink = DiracContext::minkowski(mass.clone(), charge.clone());
    let vee = DiracContext::vee_euclidean(mass.clone(), charge.clone());
    let plain = DiracContext::euclidean(mass.clone(), charge.clone());
    let basis = even_basis();
    let s1 = component_system(&mink, DiracForm::Minkowski, &basis, with_potential)?;
    let s2 = component_system(&vee, DiracForm::Vee, &basis, with_potential)?;
    let s3 = component_system(&plain, DiracForm::Euclidean, &basis, with_potential)?;

    let mut blades: Vec<Blade> = s1.equations().keys().chain(s2.equations().keys()).copied().collect();
    blades.sort();
    blades.dedup();
    let text = |s: &ComponentSystem<Rational>, b: Blade| s.equation(b).map_or_else(|| "0".to_string(), render_terms);
    let equations = blades
        .iter()
        .map(|&b| EquationRow { blade: b.to_string(), minkowski: text(&s1, b), vee: text(&s2, b) })
        .collect();

    let names = |v: Vec<Blade>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let recoding = find_recoding(&s1, &s2);
    Ok(DiracReport {
        mass: mass.to_string(),
        charge: charge.to_string(),
        with_potential,
        equations,
        equivalent: recoding.is_some(),
        flipped_components: recoding.as_ref().map_or_else(Vec::new, |r| names(r.flipped_components())),
        flipped_equations: recoding.as_ref().map_or_else(Vec::new, |r| names(r.flipped_equations())),
        control_equivalent: find_recoding(&s1, &s3).is_some(),
    })
}

#[derive(Debug, Serialize)]
pub struct DualField {
    pub f: String,
    pub e: String,
    pub b: String,
    pub star_fixed: bool,
    pub split_holds: bool,
    pub maxwell_vanishes: bool,
}

#[derive(Debug, Serialize)]
pub struct SelfDualReport {
    pub sign: i64,
    pub basis: Vec<DualField>,
    pub euclidean_fixed_dimension: usize,
    pub basis_spans_fixed_space: bool,
    pub minkowski_fixed_dimension: usize,
}

impl SelfDualReport {
    pub fn passed(&self) -> bool {
        self.basis.iter().all(|f| f.star_fixed && f.split_holds && f.maxwell_vanishes)
            && self.euclidean_fixed_dimension == 3
            && self.basis_spans_fixed_space
            && self.minkowski_fixed_dimension == 0
    }

    pub fn human(&self) -> String {
        let kind = if self.sign > 0 { "self-dual" } else { "anti-self-dual" };
        let sign = if self.sign > 0 { "+" } else { "-" };
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        let mut out = format!("{kind} family F = E {sign} e0123 E\n");
        for f in &self.basis {
            out.push_str(&format!(
                "F = {}: E = {}, B = {}; F = {sign}star(F) {}, E = {sign}B {}, maxwell {}\n",
                f.f,
                f.e,
                f.b,
                mark(f.star_fixed),
                mark(f.split_holds),
                mark(f.maxwell_vanishes)
            ));
        }
        out.push_str(&format!(
            "euclidean star fixed space: dimension {} ({})\n",
            self.euclidean_fixed_dimension,
            if self.basis_spans_fixed_space { "spanned by the family" } else { "NOT spanned by the family" }
        ));
        out.push_str(&format!(
            "minkowski star real fixed space: dimension {}{}\n",
            self.minkowski_fixed_dimension,
            if self.minkowski_fixed_dimension == 0 { " (only F = 0)" } else { "" }
        ));
        out.push_str(if self.passed() { "verdict: pass\n" } else { "verdict: FAIL\n" });
        out
    }
}

pub fn selfdual_report(sign: Sign) -> Result<SelfDualReport, WorkbenchError> {
    let sig = Signature::new(1, 3)?;
    let base = base_table(&sig);
    let vstar = vee_table(&base, 0)?;
    let ctx = DiracContext::<Rational>::euclidean_in_minkowski();
    let g5 = Multivector::blade(&sig, Blade::volume(4), Rational::from_integer(sign.to_i64().into()));

    let mut family = Vec::new();
    let mut basis = Vec::new();
    for i in 1..4 {
        let e = Multivector::blade(&sig, Blade::from_indices([0, i]), Rational::from_integer(1.into()));
        let f = &e + &g5.geometric_product(&e)?;
        let (split_e, split_b) = em_split(&f)?;
        let (d, delta) = maxwell_residual(&ctx, &PolyField::constant(f.clone()))?;
        basis.push(DualField {
            f: render(&f),
            e: render(&split_e),
            b: render(&split_b),
            star_fixed: selfdual_check(&f, sign)?,
            split_holds: split_condition(&f, sign)?,
            maxwell_vanishes: d.is_zero() && delta.is_zero(),
        });
        family.push(f);
    }

    let fixed = two_form_fixed_space::<Rational>(&vstar, &sig, sign)?;
    let rows: Vec<Vec<Rational>> = fixed.iter().chain(&family).map(|m| m.coeffs().to_vec()).collect();
    let family_rank = rank(&family.iter().map(|m| m.coeffs().to_vec()).collect::<Vec<_>>());
    let spans = family_rank == fixed.len() && rank(&rows) == fixed.len();
    let real = two_form_fixed_space::<Rational>(&base, &sig, sign)?;
    Ok(SelfDualReport {
        sign: sign.to_i64(),
        basis,
        euclidean_fixed_dimension: fixed.len(),
        basis_spans_fixed_space: spans,
        minkowski_fixed_dimension: real.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_verdicts() {
        for m in [0, 1] {
            let r = dirac_report(&Rational::from_integer(m.into()), &Rational::from_integer(0.into()), false).unwrap();
            assert!(r.passed());
            assert_eq!(r.flipped_components, ["e01", "e02", "e03", "e0123"]);
            assert_eq!(r.equations.len(), 8);
        }
        let r = dirac_report(&Rational::from_integer(1.into()), &Rational::from_integer(2.into()), true).unwrap();
        assert!(r.passed());
        assert_eq!(r.flipped_components, ["e01", "e02", "e03", "e0123"]);
    }

    #[test]
    fn both_families_pass() {
        for sign in [Sign::Plus, Sign::Minus] {
            let r = selfdual_report(sign).unwrap();
            assert!(r.passed(), "{}", r.human());
            assert_eq!(r.basis.len(), 3);
        }
        let r = selfdual_report(Sign::Plus).unwrap();
        assert_eq!(r.basis[0].f, "e01 + e23");
        assert_eq!(r.basis[0].b, "e01");
    }
}
