use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::tpoly::{term_text, TPoly};
use super::Rational;
use crate::error::{Error, Result};
use crate::text::{self, parse_error, Evaluate};

/// t-adic valuation. `Infinite` is the valuation of zero and compares above
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// An element of Q(t) in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TRational {
    num: TPoly,
    den: TPoly,
}

impl TRational {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(TPoly::t())
    }

    pub fn from_poly(num: TPoly) -> Self {
        Self {
            num,
            den: TPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_one() || !self.num.is_constant() {
            return None;
        }
        Some(self.num.lowest_coeff().cloned().unwrap_or_else(Rational::zero))
    }

    /// `ord_t(num) - ord_t(den)`.
    pub fn tval(&self) -> Valuation {
        match (self.num.order(), self.den.order()) {
            (Some(a), Some(b)) => Valuation::Finite(a as i64 - b as i64),
            _ => Valuation::Infinite,
        }
    }

    /// Coefficient of `t^tval` in the Laurent expansion at `t = 0`.
    pub fn tinitial(&self) -> Result<Rational> {
        match (self.num.lowest_coeff(), self.den.lowest_coeff()) {
            (Some(a), Some(b)) => Ok(a / b),
            _ => Err(Error::InitialOfZero),
        }
    }

    /// Multiplies by `t^k` for any integer `k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        if k > 0 {
            let k = k as u32;
            let d = self.den.order().unwrap().min(k);
            Self {
                num: self.num.shift_up(k - d),
                den: self.den.shift_down(d),
            }
        } else {
            let k = (-k) as u32;
            let d = self.num.order().unwrap().min(k);
            Self {
                num: self.num.shift_down(d),
                den: self.den.shift_up(k - d),
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coeff().unwrap().recip();
        Ok(Self {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&rhs.den))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    /// Canonical text with integer coefficients, e.g. `(2*t^2+t^3)/(t-1)`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Whether the text form can be followed by `*factor` without
    /// parentheses and still parse as a single coefficient.
    pub fn is_atomic(&self) -> bool {
        !self.den.is_one() || self.num.terms().len() <= 1
    }

    pub fn parse(src: &str) -> Result<Self> {
        let e = text::parse_expr(src)?;
        <Self as Evaluate>::eval(&e)
    }
}

impl Default for TRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &TRational {
    type Output = TRational;
    fn add(self, rhs: Self) -> TRational {
        self.add_ref(rhs)
    }
}

impl Sub for &TRational {
    type Output = TRational;
    fn sub(self, rhs: Self) -> TRational {
        self.add_ref(&-rhs)
    }
}

impl Mul for &TRational {
    type Output = TRational;
    fn mul(self, rhs: Self) -> TRational {
        self.mul_ref(rhs)
    }
}

impl Neg for &TRational {
    type Output = TRational;
    fn neg(self) -> TRational {
        TRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

fn write_int_poly(f: &mut fmt::Formatter<'_>, terms: &[(u32, BigInt)]) -> fmt::Result {
    for (i, (e, c)) in terms.iter().enumerate() {
        if c.is_negative() {
            f.write_str("-")?;
        } else if i > 0 {
            f.write_str("+")?;
        }
        f.write_str(&term_text(*e, &Rational::from_integer(c.abs())))?;
    }
    Ok(())
}

impl fmt::Display for TRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Scale num and den by one rational so both become integer
        // polynomials with joint content 1 and positive leading den entry.
        let (sn, n) = self.num.integer_form();
        let (sd, d) = self.den.integer_form();
        let ratio = sn / sd;
        let (rn, rd) = (ratio.numer().clone(), ratio.denom().clone());
        let n: Vec<(u32, BigInt)> = n.into_iter().map(|(e, c)| (e, c * &rn)).collect();
        let d: Vec<(u32, BigInt)> = d.into_iter().map(|(e, c)| (e, c * &rd)).collect();
        let den_is_one = d.len() == 1 && d[0].0 == 0 && d[0].1.is_one();
        if den_is_one {
            return write_int_poly(f, &n);
        }
        if n.len() > 1 {
            f.write_str("(")?;
            write_int_poly(f, &n)?;
            f.write_str(")")?;
        } else {
            write_int_poly(f, &n)?;
        }
        f.write_str("/")?;
        if d.len() > 1 || d[0].1 != BigInt::one() && d[0].0 > 0 {
            f.write_str("(")?;
            write_int_poly(f, &d)?;
            f.write_str(")")
        } else {
            write_int_poly(f, &d)
        }
    }
}

impl std::str::FromStr for TRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Evaluate for TRational {
    fn lit_int(n: &BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n.clone()))
    }

    fn lit_ident(name: &str, offset: usize) -> Result<Self> {
        if name == "t" {
            Ok(Self::t())
        } else {
            Err(parse_error(offset, format!("unknown symbol {name:?}; only t is allowed")))
        }
    }

    fn op_neg(self) -> Self {
        -&self
    }

    fn op_add(self, rhs: Self) -> Self {
        &self + &rhs
    }

    fn op_sub(self, rhs: Self) -> Self {
        &self - &rhs
    }

    fn op_mul(self, rhs: Self) -> Result<Self> {
        Ok(&self * &rhs)
    }

    fn op_div(self, rhs: Self, offset: usize) -> Result<Self> {
        let inv = rhs
            .inv()
            .map_err(|_| parse_error(offset, "division by zero"))?;
        Ok(&self * &inv)
    }

    fn op_pow(self, e: u32) -> Result<Self> {
        Ok(Self::normalized(self.num.pow(e), self.den.pow(e)))
    }
}
