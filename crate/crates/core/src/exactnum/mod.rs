//! Exact coefficient arithmetic: Q, Q[t], Q(t) and the t-adic valuation.

mod tpoly;
mod trational;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use tpoly::TPoly;
pub use trational::{TRational, Valuation};

use crate::error::Result;
use crate::text::{self, parse_error, Evaluate};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn parse_rational(src: &str) -> Result<Rational> {
    Rational::eval(&text::parse_expr(src)?)
}

impl Evaluate for Rational {
    fn lit_int(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn lit_ident(name: &str, offset: usize) -> Result<Self> {
        Err(parse_error(offset, format!("unexpected symbol {name:?} in a rational")))
    }

    fn op_neg(self) -> Self {
        -self
    }

    fn op_add(self, rhs: Self) -> Self {
        self + rhs
    }

    fn op_sub(self, rhs: Self) -> Self {
        self - rhs
    }

    fn op_mul(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs)
    }

    fn op_div(self, rhs: Self, offset: usize) -> Result<Self> {
        if num_traits::Zero::is_zero(&rhs) {
            return Err(parse_error(offset, "division by zero"));
        }
        Ok(self / rhs)
    }

    fn op_pow(self, e: u32) -> Result<Self> {
        Ok(num_traits::pow(self, e as usize))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Q(t)")]
    RationalFunctions,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Rationals => "Q",
            FieldTag::RationalFunctions => "Q(t)",
        })
    }
}

/// A coefficient field usable by the polynomial and linear-algebra layers.
///
/// Method names avoid the `std::ops` names so both can be in scope.
pub trait Coeff: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const FIELD: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: Rational) -> Self;
    /// The transcendental `t`, when the field has one.
    fn generator() -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    fn quotient(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse())
    }
    /// Value at `t = t0`; `None` at a pole.
    fn specialize(&self, t0: &Rational) -> Option<Rational>;
    fn as_rational(&self) -> Option<Rational>;
    fn is_atomic(&self) -> bool;
    fn parse_text(src: &str) -> Result<Self>;
    /// Multiplies `v` by a nonzero scalar so every entry is a polynomial in
    /// `t` (no-op over Q).
    fn clear_denominators(v: &mut [Self]);
    fn to_trational(&self) -> TRational;
}

impl Coeff for Rational {
    const FIELD: FieldTag = FieldTag::Rationals;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn generator() -> Option<Self> {
        None
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn quotient(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn specialize(&self, _t0: &Rational) -> Option<Rational> {
        Some(self.clone())
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_atomic(&self) -> bool {
        true
    }
    fn parse_text(src: &str) -> Result<Self> {
        parse_rational(src)
    }
    fn clear_denominators(_v: &mut [Self]) {}
    fn to_trational(&self) -> TRational {
        TRational::from_rational(self.clone())
    }
}

impl Coeff for TRational {
    const FIELD: FieldTag = FieldTag::RationalFunctions;

    fn zero() -> Self {
        TRational::zero()
    }
    fn one() -> Self {
        TRational::one()
    }
    fn from_rational(r: Rational) -> Self {
        TRational::from_rational(r)
    }
    fn generator() -> Option<Self> {
        Some(TRational::t())
    }
    fn is_zero(&self) -> bool {
        TRational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        TRational::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn specialize(&self, t0: &Rational) -> Option<Rational> {
        self.eval(t0)
    }
    fn as_rational(&self) -> Option<Rational> {
        TRational::as_rational(self)
    }
    fn is_atomic(&self) -> bool {
        TRational::is_atomic(self)
    }
    fn parse_text(src: &str) -> Result<Self> {
        TRational::parse(src)
    }
    fn clear_denominators(v: &mut [Self]) {
        let mut l = TPoly::one();
        for x in v.iter() {
            if !x.denom().is_one() {
                let g = l.gcd(x.denom());
                l = l.mul(&x.denom().div_rem(&g).0);
            }
        }
        if !l.is_one() {
            let l = TRational::from_poly(l);
            for x in v.iter_mut() {
                *x = &*x * &l;
            }
        }
    }
    fn to_trational(&self) -> TRational {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-6/4").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("(1/2+1/3)^2").unwrap(), rational(25, 36));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("t").is_err());
    }

    #[test]
    fn clearing_denominators_gives_polynomials() {
        let mut v = vec![
            TRational::parse("1/(1-t)").unwrap(),
            TRational::parse("t/(t^2-1)").unwrap(),
            TRational::parse("3").unwrap(),
        ];
        TRational::clear_denominators(&mut v);
        assert!(v.iter().all(|x| x.is_polynomial()));
        assert!(v.iter().all(|x| !x.is_zero()));
    }
}
