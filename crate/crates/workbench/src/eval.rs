use std::cell::OnceCell;

use clifford_morph::field::hodge_star;
use clifford_morph::morph::{base_table, table_contract, table_product, table_wedge, tilt_table, vee_table, ProductTable};
use clifford_morph::{Multivector, Rational, Signature};
use num_traits::{One, Signed, Zero};

use crate::error::WorkbenchError;
use crate::expr::{BinaryOp, Expr, UnaryOp};

/// Evaluation context: the product behind `*`, and the vee and tilt products
/// derived from it.
pub struct Session {
    sig: Signature,
    preserve: usize,
    product: ProductTable,
    vee: OnceCell<ProductTable>,
    tilt: OnceCell<ProductTable>,
}

impl Session {
    pub fn new(sig: Signature, preserve: usize) -> Result<Self, WorkbenchError> {
        let product = base_table(&sig);
        Self::with_product(sig, preserve, product)
    }

    /// Evaluates `*` with an arbitrary table of the signature's dimension.
    pub fn with_product(sig: Signature, preserve: usize, product: ProductTable) -> Result<Self, WorkbenchError> {
        if preserve >= sig.dim() {
            return Err(WorkbenchError::Usage(format!(
                "preserved index {preserve} is out of range for {} generators",
                sig.dim()
            )));
        }
        if product.dim() != sig.dim() {
            return Err(WorkbenchError::Usage(format!(
                "table has {} generators, signature has {}",
                product.dim(),
                sig.dim()
            )));
        }
        Ok(Session { sig, preserve, product, vee: OnceCell::new(), tilt: OnceCell::new() })
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.dim()
    }

    pub fn product(&self) -> &ProductTable {
        &self.product
    }

    pub fn vee(&self) -> &ProductTable {
        self.vee.get_or_init(|| {
            vee_table(&self.product, self.preserve).expect("session tables are closed under vee")
        })
    }

    pub fn tilt(&self) -> &ProductTable {
        self.tilt.get_or_init(|| tilt_table(&self.product))
    }

    pub fn eval(&self, expr: &Expr) -> Multivector<Rational> {
        let mul = |t: &ProductTable, a: &Multivector<Rational>, b: &Multivector<Rational>| {
            table_product(t, a, b).expect("operands share the session dimension")
        };
        match expr {
            Expr::Number(r) => Multivector::scalar(&self.sig, r.clone()),
            Expr::Blade(b) => Multivector::blade(&self.sig, *b, Rational::one()),
            Expr::Unary(op, inner) => {
                let x = self.eval(inner);
                match op {
                    UnaryOp::Reverse => x.reverse(),
                    UnaryOp::GradeInvolution => x.grade_involution(),
                    UnaryOp::Conjugate => x.conjugate(),
                    UnaryOp::Star => hodge_star(&self.product, &x).expect("operand shares the session dimension"),
                }
            }
            Expr::Grade(inner, k) => self.eval(inner).grade_project(*k).expect("parser bounds the grade"),
            Expr::Binary(op, a, b) => {
                let (x, y) = (self.eval(a), self.eval(b));
                match op {
                    BinaryOp::Add => x + y,
                    BinaryOp::Sub => x - y,
                    BinaryOp::Product => mul(&self.product, &x, &y),
                    BinaryOp::Wedge => table_wedge(&self.product, &x, &y).expect("same dimension"),
                    BinaryOp::Contract => table_contract(&self.product, &x, &y).expect("same dimension"),
                    BinaryOp::Vee => mul(self.vee(), &x, &y),
                    BinaryOp::Tilt => mul(self.tilt(), &x, &y),
                }
            }
        }
    }

    pub fn eval_str(&self, text: &str) -> Result<Multivector<Rational>, WorkbenchError> {
        let expr = crate::expr::parse(text, self.dim())?;
        Ok(self.eval(&expr))
    }
}

/// Signed blade sum that parses back to the same value, e.g.
/// `-1/2 + e0 - 3*e12`.
pub fn render(value: &Multivector<Rational>) -> String {
    let mut out = String::new();
    for (blade, c) in value.terms() {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if blade.is_scalar() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() && !(negative && out.len() == 1) {
            out.push_str(&blade.to_string());
        } else {
            out.push_str(&format!("{mag}*{blade}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Exact coefficients as `(blade, "num/den")` pairs for structured output.
pub fn coefficient_pairs(value: &Multivector<Rational>) -> Vec<(String, String)> {
    value.terms().filter(|(_, c)| !c.is_zero()).map(|(b, c)| (b.to_string(), c.to_string())).collect()
}
