//! Expression language over multivectors.
//!
//! ```text
//! expr     := term (("+"|"-") term)*
//! term     := unary (("*"|"^"|"."|"v"|"t") unary)*
//! unary    := ("rev"|"gi"|"conj"|"star") "(" expr ")" | "grade" "(" expr "," int ")" | atom
//! atom     := rational | blade | "(" expr ")"
//! blade    := "e" digit+
//! rational := "-"? int ("/" posint)?
//! ```
//!
//! All binary operators inside a term share one precedence level and
//! associate to the left. Mixing different ones without parentheses is
//! rejected: `e1 ^ e2 * e3` is an error, `(e1 ^ e2) * e3` and `e1 v e2 v e3`
//! are fine.

use std::fmt;

use clifford_morph::{Blade, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

const MAX_DEPTH: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryOp {
    Reverse,
    GradeInvolution,
    Conjugate,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Product,
    Wedge,
    Contract,
    Vee,
    Tilt,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Product => "*",
            BinaryOp::Wedge => "^",
            BinaryOp::Contract => ".",
            BinaryOp::Vee => "v",
            BinaryOp::Tilt => "t",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    Blade(Blade),
    Unary(UnaryOp, Box<Expr>),
    Grade(Box<Expr>, usize),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found `{found}`")]
    UnexpectedToken { expected: &'static str, found: String },
    #[error("expected {expected}, found end of input")]
    UnexpectedEnd { expected: &'static str },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("blade `{0}` needs strictly increasing indices")]
    NonIncreasingBlade(String),
    #[error("blade `{blade}` uses index {index}, but the algebra has {dim} generators")]
    IndexOutOfRange { blade: String, index: usize, dim: usize },
    #[error("grade {grade} exceeds dimension {dim}")]
    GradeOutOfRange { grade: String, dim: usize },
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("`{second}` follows `{first}` in one term; add parentheses")]
    MixedOperators { first: &'static str, second: &'static str },
    #[error("expression nested deeper than {MAX_DEPTH} levels")]
    TooDeep,
}

/// A diagnostic pinned to a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => f.write_str(s),
            Tok::Sym(c) => write!(f, "{c}"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() || c.is_ascii_alphabetic() {
            let numeric = c.is_ascii_digit();
            let mut word = String::new();
            while let Some(&(_, d)) = chars.peek() {
                let fits = if numeric { d.is_ascii_digit() } else { d.is_ascii_alphanumeric() };
                if !fits {
                    break;
                }
                word.push(d);
                chars.next();
            }
            out.push((pos, if numeric { Tok::Int(word) } else { Tok::Ident(word) }));
        } else if "+-*^./(),".contains(c) {
            out.push((pos, Tok::Sym(c)));
            chars.next();
        } else {
            return Err(ParseError { position: pos, kind: ParseErrorKind::UnexpectedChar(c) });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    dim: usize,
    depth: usize,
}

/// Parses `text` for an algebra with `dim` generators.
pub fn parse(text: &str, dim: usize) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, at: 0, end: text.len(), dim, depth: 0 };
    let expr = p.expr()?;
    match p.peek() {
        None => Ok(expr),
        Some(t) => Err(p.error(ParseErrorKind::UnexpectedToken { expected: "an operator or end of input", found: t.to_string() })),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.position(), kind }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(ParseErrorKind::UnexpectedToken { expected, found: t.to_string() }),
            None => self.error(ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect_sym(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error(ParseErrorKind::TooDeep));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.descend()?;
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Sym('+')) => BinaryOp::Add,
                Some(Tok::Sym('-')) => BinaryOp::Sub,
                _ => break,
            };
            self.at += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        let mut first: Option<BinaryOp> = None;
        loop {
            let op = match self.peek() {
                Some(Tok::Sym('*')) => BinaryOp::Product,
                Some(Tok::Sym('^')) => BinaryOp::Wedge,
                Some(Tok::Sym('.')) => BinaryOp::Contract,
                Some(Tok::Ident(w)) if w == "v" => BinaryOp::Vee,
                Some(Tok::Ident(w)) if w == "t" => BinaryOp::Tilt,
                _ => break,
            };
            match first {
                Some(f) if f != op => {
                    return Err(self.error(ParseErrorKind::MixedOperators { first: f.symbol(), second: op.symbol() }))
                }
                _ => first = Some(op),
            }
            self.at += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let op = match self.peek() {
            Some(Tok::Ident(w)) => match w.as_str() {
                "rev" => Some(UnaryOp::Reverse),
                "gi" => Some(UnaryOp::GradeInvolution),
                "conj" => Some(UnaryOp::Conjugate),
                "star" => Some(UnaryOp::Star),
                "grade" => {
                    self.at += 1;
                    self.expect_sym('(', "`(`")?;
                    let inner = self.expr()?;
                    self.expect_sym(',', "`,`")?;
                    let k = self.grade_index()?;
                    self.expect_sym(')', "`)`")?;
                    return Ok(Expr::Grade(Box::new(inner), k));
                }
                _ => None,
            },
            _ => None,
        };
        match op {
            Some(op) => {
                self.at += 1;
                self.expect_sym('(', "`(`")?;
                let inner = self.expr()?;
                self.expect_sym(')', "`)`")?;
                Ok(Expr::Unary(op, Box::new(inner)))
            }
            None => self.atom(),
        }
    }

    fn grade_index(&mut self) -> Result<usize, ParseError> {
        let pos = self.position();
        match self.next() {
            Some(Tok::Int(digits)) => match digits.parse::<usize>() {
                Ok(k) if k <= self.dim => Ok(k),
                _ => Err(ParseError { position: pos, kind: ParseErrorKind::GradeOutOfRange { grade: digits, dim: self.dim } }),
            },
            _ => {
                self.at -= 1;
                Err(self.unexpected("a grade"))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.position();
        match self.next() {
            Some(Tok::Sym('(')) => {
                let inner = self.expr()?;
                self.expect_sym(')', "`)`")?;
                Ok(inner)
            }
            Some(Tok::Sym('-')) => match self.next() {
                Some(Tok::Int(digits)) => Ok(Expr::Number(-self.rational_tail(&digits)?)),
                _ => {
                    self.at -= 1;
                    Err(self.unexpected("a number after `-`"))
                }
            },
            Some(Tok::Int(digits)) => Ok(Expr::Number(self.rational_tail(&digits)?)),
            Some(Tok::Ident(word)) => self.blade(&word, pos),
            _ => {
                self.at -= 1;
                Err(self.unexpected("a number, blade or `(`"))
            }
        }
    }

    fn rational_tail(&mut self, digits: &str) -> Result<Rational, ParseError> {
        let num: BigInt = digits.parse().expect("lexer yields digit runs");
        if self.peek() != Some(&Tok::Sym('/')) {
            return Ok(Rational::from_integer(num));
        }
        self.at += 1;
        let pos = self.position();
        match self.next() {
            Some(Tok::Int(d)) => {
                let den: BigInt = d.parse().expect("lexer yields digit runs");
                if den.is_zero() {
                    return Err(ParseError { position: pos, kind: ParseErrorKind::ZeroDenominator });
                }
                Ok(Rational::new(num, den))
            }
            _ => {
                self.at -= 1;
                Err(self.unexpected("a positive denominator"))
            }
        }
    }

    fn blade(&mut self, word: &str, pos: usize) -> Result<Expr, ParseError> {
        let err = |kind| Err(ParseError { position: pos, kind });
        let Some(digits) = word.strip_prefix('e').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())) else {
            return err(ParseErrorKind::UnknownIdentifier(word.to_string()));
        };
        let mut mask = 0u32;
        let mut last: Option<usize> = None;
        for b in digits.bytes() {
            let index = (b - b'0') as usize;
            if last.is_some_and(|l| index <= l) {
                return err(ParseErrorKind::NonIncreasingBlade(word.to_string()));
            }
            if index >= self.dim {
                return err(ParseErrorKind::IndexOutOfRange { blade: word.to_string(), index, dim: self.dim });
            }
            last = Some(index);
            mask |= 1 << index;
        }
        Ok(Expr::Blade(Blade(mask)))
    }
}
