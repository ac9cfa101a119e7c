//! The invariant suite behind `verify`. Each check returns either a short
//! summary or the first counterexample it met.

use clifford_morph::field::*;
use clifford_morph::morph::{
    apply_plan, base_table, plan_signature_change, table_product, tilt_table, vee_table, verify_isomorphism, Entry,
    ProductTable,
};
use clifford_morph::{Blade, FieldError, Multivector, Rational, Sign, Signature};
use num_traits::One;
use serde::Serialize;

use crate::error::WorkbenchError;
use crate::eval::render;
use crate::sample::{self, SuiteRng};
use crate::table_doc;

pub struct SuiteConfig {
    pub sig: Signature,
    pub preserve: usize,
    pub seed: u64,
    /// `(name shown in reports, document text)`
    pub table_file: Option<(String, String)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub signature: String,
    pub preserve: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

type Outcome = Result<String, String>;

impl SuiteReport {
    pub fn human(&self) -> String {
        let mut out = format!("verify {} preserve={} seed={}\n", self.signature, self.preserve, self.seed);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:<22} {}\n", c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }

    pub fn structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn run(cfg: &SuiteConfig) -> Result<SuiteReport, WorkbenchError> {
    if cfg.preserve >= cfg.sig.dim() {
        return Err(WorkbenchError::Usage(format!("preserved index {} is out of range", cfg.preserve)));
    }
    let mut checks: Vec<(&'static str, Box<dyn Fn(&mut SuiteRng) -> Outcome + '_>)> = Vec::new();
    if let Some((name, text)) = &cfg.table_file {
        checks.push(("table-file", Box::new(move |_| table_file(name, text))));
    }
    checks.push(("vee-simulation", Box::new(|r| vee_simulation(cfg, r))));
    checks.push(("tilt-opposite", Box::new(|_| tilt_opposite(cfg))));
    checks.push(("involutivity", Box::new(|_| involutivity(cfg))));
    checks.push(("associativity", Box::new(|r| associativity(cfg, r))));
    checks.push(("structure-preservation", Box::new(|r| structure(cfg, r))));
    checks.push(("planner-soundness", Box::new(planner)));
    checks.push(("hodge-stars", Box::new(hodge)));
    checks.push(("exterior-calculus", Box::new(exterior)));
    checks.push(("wave-identities", Box::new(wave)));
    checks.push(("dirac-expanded-forms", Box::new(expanded_forms)));
    checks.push(("dirac-recoding", Box::new(recoding)));
    checks.push(("self-duality", Box::new(|_| self_duality())));

    let results = checks
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let mut rng = sample::rng(cfg.seed);
            rng.set_stream(i as u64);
            let (passed, detail) = match check(&mut rng) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name, passed, detail }
        })
        .collect::<Vec<_>>();
    Ok(SuiteReport {
        signature: cfg.sig.to_string(),
        preserve: cfg.preserve,
        seed: cfg.seed,
        passed: results.iter().all(|c| c.passed),
        checks: results,
    })
}

fn show_entry(e: Entry) -> String {
    let sign = if e.sign == Sign::Minus { "-" } else { "+" };
    format!("{sign}{}", e.blade)
}

fn same(left: &ProductTable, right: &ProductTable, label: &str) -> Result<usize, String> {
    let report = verify_isomorphism(left, right).map_err(|e| format!("{label}: {e}"))?;
    match report.first_mismatch {
        None => Ok(report.pairs_checked),
        Some(m) => Err(format!(
            "{label}: first mismatch at ({}, {}): {} vs {}",
            m.a,
            m.b,
            show_entry(m.left),
            show_entry(m.right)
        )),
    }
}

fn table_file(name: &str, text: &str) -> Outcome {
    let table = table_doc::read_table(text).map_err(|e| format!("{name}: {e}"))?;
    let squares = table_doc::declared_squares(text).map_err(|e| format!("{name}: {e}"))?;
    let sig = Signature::from_squares(squares).map_err(|e| format!("{name}: {e}"))?;
    let pairs = same(&table, &base_table(&sig), &format!("{name} vs {sig}"))?;
    Ok(format!("{name} equals {sig} on {pairs} pairs"))
}

fn standard_signatures(dim: usize) -> Vec<Signature> {
    (0..=dim).map(|p| Signature::new(p, dim - p).expect("small dimension")).collect()
}

fn vee_simulation(cfg: &SuiteConfig, rng: &mut SuiteRng) -> Outcome {
    let mut cases: Vec<(Signature, usize)> = (0..cfg.sig.dim()).map(|mu| (cfg.sig.clone(), mu)).collect();
    for sig in standard_signatures(4) {
        cases.extend((0..4).map(|mu| (sig.clone(), mu)));
    }
    for _ in 0..8 {
        cases.push((sample::signature(rng, 5), rand::Rng::random_range(rng, 0..5)));
    }
    let mut pairs = 0;
    for (sig, mu) in &cases {
        let vee = vee_table(&base_table(sig), *mu).map_err(|e| format!("{sig} vee({mu}): {e}"))?;
        pairs += same(&vee, &base_table(&sig.flipped_except(*mu)), &format!("{sig} vee({mu})"))?;
    }
    Ok(format!("{} tables, {pairs} pairs", cases.len()))
}

fn tilt_opposite(cfg: &SuiteConfig) -> Outcome {
    let mut sigs: Vec<Signature> = (2..=5).flat_map(standard_signatures).collect();
    sigs.push(cfg.sig.clone());
    let mut pairs = 0;
    for sig in &sigs {
        pairs += same(&tilt_table(&base_table(sig)), &base_table(&sig.flipped()), &format!("{sig} tilt"))?;
    }
    Ok(format!("{} tables, {pairs} pairs", sigs.len()))
}

fn involutivity(cfg: &SuiteConfig) -> Outcome {
    let mut sigs = standard_signatures(4);
    sigs.push(cfg.sig.clone());
    let mut count = 0;
    for sig in &sigs {
        let base = base_table(sig);
        same(&tilt_table(&tilt_table(&base)), &base, &format!("{sig} tilt twice"))?;
        count += 1;
        for mu in 0..sig.dim() {
            let once = vee_table(&base, mu).map_err(|e| e.to_string())?;
            let twice = vee_table(&once, mu).map_err(|e| e.to_string())?;
            same(&twice, &base, &format!("{sig} vee({mu}) twice"))?;
            count += 1;
        }
    }
    Ok(format!("{count} round trips"))
}

fn session_tables(cfg: &SuiteConfig) -> Result<Vec<ProductTable>, String> {
    let base = base_table(&cfg.sig);
    let vee = vee_table(&base, cfg.preserve).map_err(|e| e.to_string())?;
    let tilt = tilt_table(&base);
    let both = tilt_table(&vee);
    Ok(vec![base, vee, tilt, both])
}

fn associativity(cfg: &SuiteConfig, rng: &mut SuiteRng) -> Outcome {
    let terms = cfg.sig.blade_count().min(8);
    let tables = session_tables(cfg)?;
    for t in &tables {
        for _ in 0..100 {
            let a = sample::multivector(rng, &cfg.sig, terms);
            let b = sample::multivector(rng, &cfg.sig, terms);
            let c = sample::multivector(rng, &cfg.sig, terms);
            let m = |x: &Multivector<Rational>, y: &Multivector<Rational>| table_product(t, x, y).expect("same dim");
            if m(&m(&a, &b), &c) != m(&a, &m(&b, &c)) {
                return Err(format!("{}: ({}, {}, {})", t.provenance(), render(&a), render(&b), render(&c)));
            }
        }
    }
    Ok(format!("{} tables x 100 triples", tables.len()))
}

fn structure(cfg: &SuiteConfig, rng: &mut SuiteRng) -> Outcome {
    let base = base_table(&cfg.sig);
    let half = Rational::new(1.into(), 2.into());
    for mu in 0..cfg.sig.dim() {
        let vee = vee_table(&base, mu).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let u = sample::vector(rng, &cfg.sig);
            let v = sample::vector(rng, &cfg.sig);
            let lhs = (table_product(&vee, &u, &v).unwrap() - table_product(&vee, &v, &u).unwrap()).scale(&half);
            if lhs != u.wedge(&v).unwrap() {
                return Err(format!("vee({mu}): u = {}, v = {}", render(&u), render(&v)));
            }
        }
    }
    Ok(format!("{} products x 100 vector pairs", cfg.sig.dim()))
}

fn planner(rng: &mut SuiteRng) -> Outcome {
    let mut steps = 0;
    for n in [4, 5, 6] {
        for _ in 0..50 {
            let src = sample::signature(rng, n);
            let dst = sample::signature(rng, n);
            let plan = plan_signature_change(&src, &dst).map_err(|e| e.to_string())?;
            let table = apply_plan(&base_table(&src), &plan).map_err(|e| e.to_string())?;
            if table.generator_squares() != dst.squares() {
                return Err(format!("{src} -> {dst} via [{plan}] gives wrong squares"));
            }
            same(&table, &base_table(&dst), &format!("{src} -> {dst} via [{plan}]"))?;
            steps += plan.len();
        }
    }
    Ok(format!("150 plans, {steps} steps"))
}

fn minkowski() -> Signature {
    Signature::new(1, 3).expect("n = 4")
}

fn euclidean4() -> Signature {
    Signature::new(4, 0).expect("n = 4")
}

fn star_tables() -> (ProductTable, ProductTable) {
    let base = base_table(&minkowski());
    let vee = vee_table(&base, 0).expect("closed");
    (base, vee)
}

fn check<T: PartialEq>(lhs: T, rhs: T, what: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(what())
    }
}

fn hodge(rng: &mut SuiteRng) -> Outcome {
    let (star, vstar) = star_tables();
    let sig = minkowski();
    let fail = |e: FieldError| e.to_string();
    let mut inputs: Vec<Multivector<Rational>> = Blade::all(4).map(|b| Multivector::blade(&sig, b, Rational::one())).collect();
    inputs.extend((0..20).map(|_| sample::multivector(rng, &sig, 16)));
    for phi in &inputs {
        let lhs = hodge_star(&vstar, phi).map_err(fail)?;
        let rhs = -&parity(&hodge_star(&star, phi).map_err(fail)?).map_err(fail)?;
        check(lhs, rhs, || format!("star relation fails for {}", render(phi)))?;
    }
    let g5 = Multivector::blade(&sig, Blade::volume(4), Rational::one());
    let one = Multivector::<Rational>::one(&sig);
    check(table_product(&vstar, &g5, &g5).unwrap(), one.clone(), || "e0123 v e0123 != 1".into())?;
    check(g5.geometric_product(&g5).unwrap(), -&one, || "e0123 * e0123 != -1".into())?;
    for b in Blade::all(4).filter(|b| b.grade() == 2) {
        let f = Multivector::blade(&sig, b, Rational::one());
        let ss = hodge_star(&star, &hodge_star(&star, &f).map_err(fail)?).map_err(fail)?;
        check(ss, -&f, || format!("minkowski star twice on {b} is not -1"))?;
        let ee = hodge_star(&vstar, &hodge_star(&vstar, &f).map_err(fail)?).map_err(fail)?;
        check(ee, f.clone(), || format!("euclidean star twice on {b} is not +1"))?;
    }
    Ok(format!("{} multivectors, 6 two-forms", inputs.len()))
}

fn exterior(rng: &mut SuiteRng) -> Outcome {
    let (star, vstar) = star_tables();
    let sig = minkowski();
    let mink = DiracContext::<Rational>::minkowski(Rational::from_integer(0.into()), Rational::from_integer(0.into()));
    let mixed = DiracContext::<Rational>::euclidean_in_minkowski();
    let fail = |e: FieldError| e.to_string();
    for _ in 0..20 {
        let phi = sample::field(rng, &sig, false);
        let d = exterior_d(&mink, &phi).map_err(fail)?;
        check(exterior_d(&mink, &d).map_err(fail)?.is_zero(), true, || format!("d d != 0 on {phi}"))?;
        check(exterior_d(&mixed, &phi).map_err(fail)?, d, || format!("vee d != d on {phi}"))?;
        let star_d_star = |t: &ProductTable| -> Result<PolyField<Rational>, FieldError> {
            let s = hodge_star_field(t, &phi)?;
            hodge_star_field(t, &exterior_d(&mink, &s)?)
        };
        let euclid = codifferential(&mixed, &phi).map_err(fail)?;
        check(euclid, star_d_star(&vstar).map_err(fail)?, || format!("vee codifferential != (euclidean star) d (euclidean star) on {phi}"))?;
        let minkowskian = codifferential(&mink, &phi).map_err(fail)?;
        check(minkowskian, -&star_d_star(&star).map_err(fail)?, || format!("codifferential != -(star d star) on {phi}"))?;
    }
    let witness = PolyField::monomial(&[0, 1, 0, 0], Multivector::generator(&sig, 1)).map_err(fail)?;
    let delta = codifferential(&mink, &witness).map_err(fail)?;
    let vee_delta = codifferential(&mixed, &witness).map_err(fail)?;
    check(delta == vee_delta, false, || "codifferentials agree on the witness".into())?;
    Ok(format!("20 fields; witness x1*e1: {} vs {}", delta, vee_delta))
}

fn wave(rng: &mut SuiteRng) -> Outcome {
    let zero = || Rational::from_integer(0.into());
    let contexts = [
        ("vee", DiracContext::vee_euclidean(zero(), zero()), euclidean4()),
        ("euclidean", DiracContext::euclidean(zero(), zero()), euclidean4()),
        ("minkowski", DiracContext::minkowski(zero(), zero()), minkowski()),
    ];
    for (name, ctx, sig) in &contexts {
        for _ in 0..20 {
            let phi = sample::field(rng, sig, false);
            let r = wave_check(ctx, &phi).map_err(|e| e.to_string())?;
            check(r.is_zero(), true, || format!("{name}: residual {r} on {phi}"))?;
        }
    }
    Ok("3 contexts x 20 fields".into())
}

fn expanded_forms(rng: &mut SuiteRng) -> Outcome {
    let zero = Rational::from_integer(0.into());
    let ctx = DiracContext::vee_euclidean(zero.clone(), zero);
    let vee = ctx.table();
    let eu = vee_table(vee, 0).map_err(|e| e.to_string())?;
    let sig = euclidean4();
    let e012 = Multivector::blade(&sig, Blade(0b0111), Rational::one());
    let e12 = Multivector::blade(&sig, Blade(0b0110), Rational::one());
    let fail = |e: FieldError| e.to_string();
    for _ in 0..20 {
        let psi = sample::field(rng, &sig, true);
        let a = sample::field(rng, &sig, false).grade_project(1).map_err(|e| e.to_string())?;
        check(dirac(&ctx, &psi, Side::Left).map_err(fail)?, expanded_vee_dirac(&eu, &psi).map_err(fail)?, || {
            format!("operator expansion fails on {psi}")
        })?;
        check(psi.mul_right(vee, &e012).map_err(fail)?, expanded_vee_mass(&eu, &psi).map_err(fail)?, || {
            format!("mass expansion fails on {psi}")
        })?;
        let direct = PolyField::table_product(vee, &a, &psi).map_err(fail)?.mul_right(vee, &e12).map_err(fail)?;
        check(expanded_vee_interaction(&eu, &psi, &a).map_err(fail)?, direct, || {
            format!("interaction expansion fails on {psi} with A = {a}")
        })?;
    }
    Ok("20 even fields".into())
}

fn even_basis() -> Vec<Blade> {
    Blade::all(4).filter(|b| b.is_even()).collect()
}

fn recoding(rng: &mut SuiteRng) -> Outcome {
    let int = |n: i64| Rational::from_integer(n.into());
    let fail = |e: FieldError| e.to_string();
    let expected: Vec<Blade> = even_basis().into_iter().filter(|b| b.contains(0)).collect();
    for with_potential in [false, true] {
        let mink = DiracContext::minkowski(int(1), int(1));
        let vee = DiracContext::vee_euclidean(int(1), int(1));
        let s1 = component_system(&mink, DiracForm::Minkowski, &even_basis(), with_potential).map_err(fail)?;
        let s2 = component_system(&vee, DiracForm::Vee, &even_basis(), with_potential).map_err(fail)?;
        let rec = find_recoding(&s1, &s2).ok_or_else(|| format!("no recoding (potential: {with_potential})"))?;
        check(rec.flipped_components(), expected.clone(), || format!("recoding flips {:?}", rec.flipped_components()))?;

        let psi = sample::field(rng, &minkowski(), true);
        let comps: Vec<PolyField<Rational>> = (0..4)
            .map(|_| sample::field(rng, &minkowski(), false).grade_project(0).expect("grade 0"))
            .collect();
        let (a1, a2) = if with_potential {
            let c4: Vec<_> = comps.iter().map(|c| c.with_signature(&euclidean4()).expect("n = 4")).collect();
            (Some(mink.potential(&comps).map_err(fail)?), Some(vee.potential(&c4).map_err(fail)?))
        } else {
            (None, None)
        };
        let r1 = dh_residual(&mink, &psi, DiracForm::Minkowski, a1.as_ref()).map_err(fail)?.residual;
        let psi4 = rec.recode(&psi).with_signature(&euclidean4()).map_err(fail)?;
        let r2 = dh_residual(&vee, &psi4, DiracForm::Vee, a2.as_ref()).map_err(fail)?.residual;
        check(rec.recode_equations(&r1).with_signature(&euclidean4()).map_err(fail)?, r2, || {
            format!("recoded residuals differ for {psi}")
        })?;
    }
    let mink = DiracContext::minkowski(int(1), int(0));
    let plain = DiracContext::euclidean(int(1), int(0));
    let s1 = component_system(&mink, DiracForm::Minkowski, &even_basis(), false).map_err(fail)?;
    let s3 = component_system(&plain, DiracForm::Euclidean, &even_basis(), false).map_err(fail)?;
    check(find_recoding(&s1, &s3).is_none(), true, || "plain euclidean operator admits a recoding".into())?;
    let names: Vec<String> = expected.iter().map(ToString::to_string).collect();
    Ok(format!("flips {}; negative control has none", names.join(" ")))
}

fn self_duality() -> Outcome {
    let (star, vstar) = star_tables();
    let sig = minkowski();
    let fail = |e: FieldError| e.to_string();
    let ctx = DiracContext::<Rational>::euclidean_in_minkowski();
    for sign in [Sign::Plus, Sign::Minus] {
        let space = two_form_fixed_space::<Rational>(&vstar, &sig, sign).map_err(fail)?;
        check(space.len(), 3, || format!("euclidean fixed space for {sign} has dimension {}", space.len()))?;
        for f in &space {
            check(split_condition(f, sign).map_err(fail)?, true, || format!("E != {sign}B for {}", render(f)))?;
            let (d, delta) = maxwell_residual(&ctx, &PolyField::constant(f.clone())).map_err(fail)?;
            check(d.is_zero() && delta.is_zero(), true, || format!("constant {} is not a solution", render(f)))?;
        }
        let real = two_form_fixed_space::<Rational>(&star, &sig, sign).map_err(fail)?;
        check(real.len(), 0, || format!("minkowski star has real fixed points for {sign}"))?;
    }
    Ok("dimensions 3 and 3; minkowski fixed space {0}".into())
}
