use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::var::Var;
use super::Multidegree;
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, Rational};
use crate::text::{self, parse_error, Evaluate};

/// Products whose naive term count exceeds this are refused by the parser.
const PARSE_TERM_BUDGET: usize = 1 << 20;

/// Sparse multivariate polynomial. Terms are sorted strictly descending in
/// the monomial order; no coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(x) => *x = x.plus(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms
            .binary_search_by(|(x, _)| m.cmp(x))
            .map_or_else(|_| C::zero(), |i| self.terms[i].1.clone())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.plus(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { terms: out }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect(),
        }
    }

    /// Multiplies by a monomial; order is preserved so no re-sort happens.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_monomial(m).scale(c);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.times(cb);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.plus(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..k {
            result = Polynomial::mul(&result, self);
        }
        result
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Evaluates at rational values for the variables and `t = t0`.
    /// Returns `None` if a coefficient has a pole at `t0`.
    pub fn evaluate(&self, point: &impl Fn(Var) -> Rational, t0: &Rational) -> Option<Rational> {
        let mut acc = Rational::from_integer(0.into());
        for (m, c) in &self.terms {
            let mut v = c.specialize(t0)?;
            for (x, e) in m.powers() {
                v *= num_traits::pow(point(*x), *e as usize);
            }
            acc += v;
        }
        Some(acc)
    }

    /// The common Z⁷-degree of all terms of a p-polynomial.
    pub fn multidegree(&self) -> Result<Option<Multidegree>> {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.multidegree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inverse()),
            _ => self.clone(),
        }
    }

    pub fn parse(src: &str) -> Result<Self> {
        <Self as Evaluate>::eval(&text::parse_expr(src)?)
    }
}

impl<C: Coeff> Evaluate for Polynomial<C> {
    fn lit_int(n: &BigInt) -> Self {
        Self::constant(C::from_rational(Rational::from_integer(n.clone())))
    }

    fn lit_ident(name: &str, offset: usize) -> Result<Self> {
        if name == "t" {
            return C::generator()
                .map(Self::constant)
                .ok_or_else(|| parse_error(offset, "t is not in the coefficient field"));
        }
        Ok(Self::var(Var::parse(name, offset)?))
    }

    fn op_neg(self) -> Self {
        Polynomial::neg(&self)
    }

    fn op_add(self, rhs: Self) -> Self {
        Polynomial::add(&self, &rhs)
    }

    fn op_sub(self, rhs: Self) -> Self {
        Polynomial::sub(&self, &rhs)
    }

    fn op_mul(self, rhs: Self) -> Result<Self> {
        if self.len().saturating_mul(rhs.len()) > PARSE_TERM_BUDGET {
            return Err(parse_error(0, "product too large"));
        }
        Ok(Polynomial::mul(&self, &rhs))
    }

    fn op_div(self, rhs: Self, offset: usize) -> Result<Self> {
        match rhs.as_constant() {
            Some(c) if !c.is_zero() => Ok(self.scale(&c.inverse())),
            Some(_) => Err(parse_error(offset, "division by zero")),
            None => Err(parse_error(offset, "division by a non-constant polynomial")),
        }
    }

    fn op_pow(self, e: u32) -> Result<Self> {
        let mut result = Self::one();
        for _ in 0..e {
            result = Evaluate::op_mul(result, self.clone())?;
        }
        Ok(result)
    }
}

impl<C: Coeff> std::str::FromStr for Polynomial<C> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    /// Canonical text: terms in descending order, e.g.
    /// `p_3*p_456-p_4*p_356+(t^2-1)*p_5*p_346`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.is_one() {
                let s = c.to_string();
                if c.is_atomic() { s } else { format!("({s})") }
            } else if c.is_one() {
                m.to_string()
            } else if c.negated().is_one() {
                format!("-{m}")
            } else if c.is_atomic() {
                format!("{c}*{m}")
            } else {
                format!("({c})*{m}")
            };
            if i > 0 && !body.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}
