//! Scalar component form of the Dirac-Hestenes equation: one linear PDE per
//! output blade, in the unknown coefficient functions of ψ.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::blade::{Blade, Sign};
use crate::error::FieldError;
use crate::morph::{base_table, table_inner, table_product, ProductTable};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

use super::dirac::{check_form, euclidean_partner, DiracContext, DiracForm};
use super::poly::PolyField;

/// What an unknown component `ψ_b` is hit with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    /// `∂_μ ψ_b`
    Derivative(usize),
    /// `ψ_b` itself (mass term)
    Mass,
    /// `a_ν ψ_b`, with `a_ν` a covariant potential component
    Potential(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term<S> {
    pub coeff: S,
    pub source: Blade,
    pub marker: Marker,
}

/// Equations keyed by output blade, each a sum of terms sorted by
/// `(source, marker)`. Equality is syntactic.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentSystem<S> {
    equations: BTreeMap<Blade, Vec<Term<S>>>,
}

impl<S: Scalar> ComponentSystem<S> {
    fn from_map(raw: BTreeMap<(Blade, Blade, Marker), S>) -> Self {
        let mut equations: BTreeMap<Blade, Vec<Term<S>>> = BTreeMap::new();
        for ((out, source, marker), coeff) in raw {
            if !coeff.is_zero() {
                equations.entry(out).or_default().push(Term { coeff, source, marker });
            }
        }
        ComponentSystem { equations }
    }

    pub fn equations(&self) -> &BTreeMap<Blade, Vec<Term<S>>> {
        &self.equations
    }

    pub fn equation(&self, out: Blade) -> Option<&[Term<S>]> {
        self.equations.get(&out).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Blades whose unknown component appears somewhere.
    pub fn sources(&self) -> BTreeSet<Blade> {
        self.equations.values().flatten().map(|t| t.source).collect()
    }

    /// Substitutes concrete component functions: ψ's blade coefficients and,
    /// when potential terms are present, the scalar fields `a_ν`.
    pub fn evaluate(&self, psi: &PolyField<S>, potential: Option<&[PolyField<S>]>) -> Result<PolyField<S>, FieldError> {
        let sig = psi.sig();
        let base = base_table(sig);
        let mut out = PolyField::zero(sig);
        for (blade, terms) in &self.equations {
            let unit = Multivector::blade(sig, *blade, S::one());
            let mut scalar = PolyField::zero(sig);
            for t in terms {
                let comp = psi.component(t.source);
                let value = match t.marker {
                    Marker::Derivative(mu) => comp.partial(mu)?,
                    Marker::Mass => comp,
                    Marker::Potential(nu) => {
                        let a = potential
                            .and_then(|p| p.get(nu))
                            .ok_or(FieldError::DimensionMismatch { left: nu + 1, right: potential.map_or(0, <[_]>::len) })?;
                        PolyField::table_product(&base, a, &comp)?
                    }
                };
                scalar = scalar + value.scale(&t.coeff);
            }
            out = out + scalar.map(|m| unit.scale(m.scalar_part()));
        }
        Ok(out)
    }
}

/// Right-hand side of one equation, e.g. `+d0u[1] -2*u[e012]`.
pub fn render_terms<S: Scalar>(terms: &[Term<S>]) -> String {
    let mut out = String::new();
    for t in terms {
        if !out.is_empty() {
            out.push(' ');
        }
        let (sign, mag) = if t.coeff.is_negative() { ('-', t.coeff.abs()) } else { ('+', t.coeff.clone()) };
        out.push(sign);
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        match t.marker {
            Marker::Derivative(mu) => out.push_str(&format!("d{mu}")),
            Marker::Mass => {}
            Marker::Potential(nu) => out.push_str(&format!("a{nu}")),
        }
        out.push_str(&format!("u[{}]", t.source));
    }
    out
}

impl<S: Scalar> fmt::Display for ComponentSystem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (out, terms) in &self.equations {
            writeln!(f, "{out}: {}", render_terms(terms))?;
        }
        Ok(())
    }
}

/// Symbolic expansion of `dh_residual` for `ψ = Σ_b u_b(x) b` over `basis`.
/// Mass and charge are folded into the coefficients.
pub fn component_system<S: Scalar>(
    ctx: &DiracContext<S>,
    form: DiracForm,
    basis: &[Blade],
    with_potential: bool,
) -> Result<ComponentSystem<S>, FieldError> {
    check_form(ctx, form)?;
    let n = ctx.dim();
    let sig = ctx.table().signature();
    let unit = |b: Blade| Multivector::<S>::blade(&sig, b, S::one());
    let e012 = unit(Blade(0b0111));
    let e12 = unit(Blade(0b0110));

    let mut raw: BTreeMap<(Blade, Blade, Marker), S> = BTreeMap::new();
    let mut push = |source: Blade, marker: Marker, value: Multivector<S>| {
        for (out, c) in value.terms() {
            let slot = raw.entry((out, source, marker)).or_insert_with(S::zero);
            *slot = slot.clone() + c.clone();
        }
    };

    let t = ctx.table();
    let euclid: Option<ProductTable> = match form {
        DiracForm::Vee => Some(euclidean_partner(t)?),
        _ => None,
    };
    for &b in basis {
        let psi = unit(b);
        match &euclid {
            None => {
                for mu in 0..n {
                    let e = ctx.raised_generator(&sig, mu);
                    push(b, Marker::Derivative(mu), table_product(t, &e, &psi)?);
                }
                push(b, Marker::Mass, table_product(t, &psi, &e012)?.scale(&-ctx.mass().clone()));
                if with_potential {
                    for nu in 0..n {
                        let a = ctx.raised_generator(&sig, nu);
                        let v = table_product(t, &table_product(t, &a, &psi)?, &e12)?;
                        push(b, Marker::Potential(nu), v.scale(ctx.charge()));
                    }
                }
            }
            Some(eu) => {
                push(b, Marker::Derivative(0), table_product(eu, &unit(Blade::generator(0)), &psi)?);
                for i in 1..n {
                    push(b, Marker::Derivative(i), table_product(eu, &psi, &unit(Blade::generator(i)))?);
                }
                let mass = table_product(eu, &table_product(eu, &e12, &psi)?, &unit(Blade::generator(0)))?;
                push(b, Marker::Mass, mass.scale(&-ctx.mass().clone()));
                if with_potential {
                    let dot = table_inner(eu, &psi, &unit(Blade::generator(0)))?;
                    for nu in 0..n {
                        let a = ctx.raised_generator(&sig, nu);
                        let mut inner = table_product(eu, &psi, &a)?;
                        if nu == 0 {
                            inner = inner - dot.scale(&S::from_int(2)).scale(a.coeff(Blade::generator(0)));
                        }
                        let v = table_product(eu, &e12, &inner)?;
                        push(b, Marker::Potential(nu), v.scale(ctx.charge()));
                    }
                }
            }
        }
    }
    Ok(ComponentSystem::from_map(raw))
}

/// Diagonal sign change `u_b ↦ c_b u_b` together with per-equation signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recoding {
    pub component_signs: BTreeMap<Blade, Sign>,
    pub equation_signs: BTreeMap<Blade, Sign>,
}

impl Recoding {
    pub fn flipped_components(&self) -> Vec<Blade> {
        self.component_signs.iter().filter(|(_, s)| s.is_minus()).map(|(b, _)| *b).collect()
    }

    pub fn flipped_equations(&self) -> Vec<Blade> {
        self.equation_signs.iter().filter(|(_, s)| s.is_minus()).map(|(b, _)| *b).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.flipped_components().is_empty() && self.flipped_equations().is_empty()
    }

    /// Applies the component signs to a field.
    pub fn recode<S: Scalar>(&self, field: &PolyField<S>) -> PolyField<S> {
        self.apply(field, &self.component_signs)
    }

    /// Applies the equation signs to a residual.
    pub fn recode_equations<S: Scalar>(&self, field: &PolyField<S>) -> PolyField<S> {
        self.apply(field, &self.equation_signs)
    }

    fn apply<S: Scalar>(&self, field: &PolyField<S>, signs: &BTreeMap<Blade, Sign>) -> PolyField<S> {
        field.map(|m| m.map(|b, c| signs.get(&b).copied().unwrap_or(Sign::Plus).apply(c.clone())))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Component(Blade),
    Equation(Blade),
}

/// Finds `c_b, s_o ∈ {±1}` with `c_b · S1[o] = s_o · S2[o]` term by term, or
/// `None`. Each connected group of unknowns is normalised so that its
/// smallest component blade keeps sign `+1`.
pub fn find_recoding<S: Scalar>(s1: &ComponentSystem<S>, s2: &ComponentSystem<S>) -> Option<Recoding> {
    if s1.equations.keys().ne(s2.equations.keys()) {
        return None;
    }
    // Edge (component, equation, parity): c_b · s_o = (-1)^parity.
    let mut adjacency: BTreeMap<Node, Vec<(Node, bool)>> = BTreeMap::new();
    for (out, t1) in &s1.equations {
        let t2 = &s2.equations[out];
        if t1.len() != t2.len() {
            return None;
        }
        for (a, b) in t1.iter().zip(t2) {
            if a.source != b.source || a.marker != b.marker || a.coeff.abs() != b.coeff.abs() {
                return None;
            }
            let parity = a.coeff.is_negative() != b.coeff.is_negative();
            let (c, e) = (Node::Component(a.source), Node::Equation(*out));
            adjacency.entry(c).or_default().push((e, parity));
            adjacency.entry(e).or_default().push((c, parity));
        }
    }
    for out in s1.equations.keys() {
        adjacency.entry(Node::Equation(*out)).or_default();
    }

    let mut assigned: BTreeMap<Node, bool> = BTreeMap::new();
    let nodes: Vec<Node> = adjacency.keys().copied().collect();
    for start in nodes {
        if assigned.contains_key(&start) {
            continue;
        }
        assigned.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            let here = assigned[&node];
            for &(next, parity) in &adjacency[&node] {
                let want = here ^ parity;
                match assigned.get(&next) {
                    Some(&have) if have != want => return None,
                    Some(_) => {}
                    None => {
                        assigned.insert(next, want);
                        queue.push_back(next);
                    }
                }
            }
        }
    }

    let mut recoding = Recoding { component_signs: BTreeMap::new(), equation_signs: BTreeMap::new() };
    for (node, minus) in assigned {
        let sign = Sign::from_parity(minus);
        match node {
            Node::Component(b) => recoding.component_signs.insert(b, sign),
            Node::Equation(b) => recoding.equation_signs.insert(b, sign),
        };
    }
    Some(recoding)
}
