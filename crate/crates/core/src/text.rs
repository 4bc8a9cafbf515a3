//! Tokenizer and expression parser shared by the rational-function and
//! polynomial grammars.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" uint)?
//! atom   := uint | ident | "(" expr ")"
//! ident  := [a-z] [a-z0-9_]*
//! ```
//!
//! Whitespace is ignored between tokens. Exponents are capped at
//! [`MAX_EXPONENT`] and nesting at [`MAX_DEPTH`] so that untrusted input
//! cannot exhaust memory or stack.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub const MAX_EXPONENT: u32 = 256;
pub const MAX_DEPTH: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Ident(String, usize),
    Neg(Box<Expr>),
    /// `first ± rest[0] ± rest[1] ...`; `true` marks subtraction.
    Sum(Box<Expr>, Vec<(bool, Expr)>),
    /// `first */ rest[0] */ ...`; `Some(offset)` marks division.
    Product(Box<Expr>, Vec<(Option<usize>, Expr)>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub(crate) fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..i];
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => return Err(parse_error(start, format!("unexpected character {:?}", c as char))),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(parse_error(self.offset(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        self.enter()?;
        let first = self.term()?;
        let mut rest = Vec::new();
        loop {
            let minus = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            rest.push((minus, self.term()?));
        }
        self.depth -= 1;
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Sum(Box::new(first), rest)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let first = self.unary()?;
        let mut rest = Vec::new();
        loop {
            let div = match self.peek() {
                Some(Tok::Star) => None,
                Some(Tok::Slash) => Some(self.offset()),
                _ => break,
            };
            self.pos += 1;
            rest.push((div, self.unary()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Product(Box::new(first), rest)
        })
    }

    fn unary(&mut self) -> Result<Expr> {
        self.enter()?;
        let e = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.unary()?))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.offset();
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let inner = nested_exponent(&base);
                    let e = u32::try_from(n.clone())
                        .ok()
                        .filter(|e| e.saturating_mul(inner) <= MAX_EXPONENT)
                        .ok_or_else(|| parse_error(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
                    self.pos += 1;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(parse_error(at, "expected non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Int(n), _)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some((Tok::Ident(s), o)) => {
                self.pos += 1;
                Ok(Expr::Ident(s, o))
            }
            Some((Tok::LParen, _)) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(parse_error(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(parse_error(at, "expected a number, identifier or '('")),
            None => Err(parse_error(at, "unexpected end of input")),
        }
    }
}

/// Largest product of exponents along any path of nested powers.
fn nested_exponent(e: &Expr) -> u32 {
    match e {
        Expr::Int(_) | Expr::Ident(..) => 1,
        Expr::Neg(a) => nested_exponent(a),
        Expr::Pow(a, k) => nested_exponent(a).saturating_mul((*k).max(1)),
        Expr::Sum(a, rest) => rest
            .iter()
            .map(|(_, e)| nested_exponent(e))
            .fold(nested_exponent(a), u32::max),
        Expr::Product(a, rest) => rest
            .iter()
            .map(|(_, e)| nested_exponent(e))
            .fold(nested_exponent(a), u32::max),
    }
}

/// Parses `src` into an expression tree.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        depth: 0,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_error(p.offset(), "trailing input"));
    }
    Ok(e)
}

/// Evaluates an expression tree in a concrete algebra.
pub(crate) trait Evaluate: Sized {
    fn lit_int(n: &BigInt) -> Self;
    fn lit_ident(name: &str, offset: usize) -> Result<Self>;
    fn op_neg(self) -> Self;
    fn op_add(self, rhs: Self) -> Self;
    fn op_sub(self, rhs: Self) -> Self;
    fn op_mul(self, rhs: Self) -> Result<Self>;
    fn op_div(self, rhs: Self, offset: usize) -> Result<Self>;
    fn op_pow(self, e: u32) -> Result<Self>;

    fn eval(expr: &Expr) -> Result<Self> {
        Ok(match expr {
            Expr::Int(n) => Self::lit_int(n),
            Expr::Ident(s, o) => Self::lit_ident(s, *o)?,
            Expr::Neg(a) => Self::eval(a)?.op_neg(),
            Expr::Sum(first, rest) => {
                let mut acc = Self::eval(first)?;
                for (minus, e) in rest {
                    let v = Self::eval(e)?;
                    acc = if *minus { acc.op_sub(v) } else { acc.op_add(v) };
                }
                acc
            }
            Expr::Product(first, rest) => {
                let mut acc = Self::eval(first)?;
                for (div, e) in rest {
                    let v = Self::eval(e)?;
                    acc = match div {
                        Some(o) => acc.op_div(v, *o)?,
                        None => acc.op_mul(v)?,
                    };
                }
                acc
            }
            Expr::Pow(a, e) => Self::eval(a)?.op_pow(*e)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("1+2*t^2").unwrap();
        match e {
            Expr::Sum(_, rest) => assert!(matches!(rest[0], (false, Expr::Product(_, _)))),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let e = parse_expr("-t^2").unwrap();
        assert!(matches!(e, Expr::Neg(inner) if matches!(*inner, Expr::Pow(_, 2))));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expr("").is_err());
        assert!(parse_expr("(1+t").is_err());
        assert!(parse_expr("1+").is_err());
        assert!(parse_expr("t^999999").is_err());
        assert!(parse_expr("((t^16)^16)^2").is_err());
        assert!(parse_expr("(t^16)^16").is_ok());
        assert!(parse_expr("t^-1").is_err());
        assert!(parse_expr("1 $ 2").is_err());
        assert!(parse_expr("1 2").is_err());
        assert!(parse_expr(&"(".repeat(1000)).is_err());
        assert!(parse_expr(&"-".repeat(1000)).is_err());
        // long flat chains are fine
        assert!(parse_expr("1+".repeat(10_000).trim_end_matches('+')).is_ok());
    }
}
