use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Univariate polynomial in `t` over Q, stored sparsely with strictly
/// increasing exponents and no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TPoly {
    terms: Vec<(u32, Rational)>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn t() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining repeats and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut v: Vec<(u32, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(u32, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    fn from_dense(coeffs: Vec<Rational>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        Self { terms }
    }

    fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.degree().map_or(0, |d| d as usize + 1)];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Order of vanishing at `t = 0`.
    pub fn order(&self) -> Option<u32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Divides by `t^k`; the caller guarantees `k <= order`.
    pub fn shift_down(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect(),
        }
    }

    pub fn shift_up(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
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
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return rhs.scale(c).shift_up(*e);
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return self.scale(c).shift_up(*e);
        }
        let len = (self.degree().unwrap() + rhs.degree().unwrap()) as usize + 1;
        let mut acc = vec![Rational::zero(); len];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb) as usize] += ca * cb;
            }
        }
        Self::from_dense(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Euclidean division over Q. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        if self.is_zero() || self.degree().unwrap() < dd {
            return (Self::zero(), self.clone());
        }
        if d.terms.len() == 1 && d.terms[0].0 <= self.order().unwrap() {
            let inv = d.terms[0].1.recip();
            return (self.scale(&inv).shift_down(d.terms[0].0), Self::zero());
        }
        let mut r = self.to_dense();
        let dv = d.to_dense();
        let lc_inv = dv[dd as usize].recip();
        let mut q = vec![Rational::zero(); r.len() - dd as usize];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd as usize] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in dv.iter().enumerate() {
                if !dc.is_zero() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd as usize);
        (Self::from_dense(q), Self::from_dense(r))
    }

    /// Makes the leading coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    ///
    /// Rational coefficients are cleared first; the Euclidean remainder
    /// sequence then runs over Z[t] with each remainder reduced to its
    /// primitive part, which keeps coefficients small.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        // t-adic part splits off without any arithmetic.
        let k = self.order().unwrap().min(rhs.order().unwrap());
        let (a, b) = (self.shift_down(self.order().unwrap()), rhs.shift_down(rhs.order().unwrap()));
        if a.is_constant() || b.is_constant() {
            return Self::monomial(k, Rational::one());
        }
        let (mut a, mut b) = (primitive_part(&a), primitive_part(&b));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_empty() { Vec::new() } else { primitive_vec(r) };
            if b.is_empty() {
                break;
            }
        }
        let g = if b.is_empty() { a } else { vec![BigInt::one()] };
        let g = Self::from_dense(g.into_iter().map(Rational::from_integer).collect()).monic();
        g.shift_up(k)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last = self.degree().unwrap_or(0);
        for (e, c) in self.terms.iter().rev() {
            acc *= pow_rational(t, last - e);
            acc += c;
            last = *e;
        }
        acc * pow_rational(t, last)
    }

    /// Returns `(scale, integer coefficients)` with `self = scale * Σ c_i t^i`
    /// and the integer coefficient vector primitive with positive leading entry.
    pub fn integer_form(&self) -> (Rational, Vec<(u32, BigInt)>) {
        if self.is_zero() {
            return (Rational::one(), Vec::new());
        }
        let lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let ints: Vec<(u32, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, (c * Rational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if ints.last().unwrap().1.is_negative() {
            g = -g;
        }
        let ints = ints.into_iter().map(|(e, c)| (e, c / &g)).collect();
        (Rational::new(g, lcm), ints)
    }
}

fn pow_rational(t: &Rational, k: u32) -> Rational {
    num_traits::pow(t.clone(), k as usize)
}

fn primitive_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

fn primitive_part(p: &TPoly) -> Vec<BigInt> {
    let (_, ints) = p.integer_form();
    let mut dense = vec![BigInt::zero(); p.degree().unwrap() as usize + 1];
    for (e, c) in ints {
        dense[e as usize] = c;
    }
    dense
}

/// Pseudo-remainder of dense integer polynomials, trailing zeros trimmed.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for TPoly {
    /// Prints with rational coefficients in increasing degree, e.g. `1-1/2*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let body = term_text(*e, &c.abs());
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

/// Text of `|c| * t^e` with `c` positive.
pub(crate) fn term_text(e: u32, c: &Rational) -> String {
    let power = match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    };
    if e == 0 {
        c.to_string()
    } else if c.is_one() {
        power
    } else {
        format!("{c}*{power}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(coeffs: &[i64]) -> TPoly {
        TPoly::from_terms(coeffs.iter().enumerate().map(|(e, c)| (e as u32, q(*c))))
    }

    #[test]
    fn gcd_of_products() {
        // (t-1)(t+2) and (t-1)(t^2+1)
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[1, 0, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[0, 0, 3]).gcd(&p(&[0, 5, 1])), p(&[0, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), TPoly::from_terms([(0, Rational::new(1.into(), 2.into())), (1, q(1))]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, -1])), TPoly::one());
    }

    #[test]
    fn division_roundtrip() {
        let a = p(&[3, 0, -2, 5, 1]);
        let d = p(&[1, 2]);
        let (qq, r) = a.div_rem(&d);
        assert_eq!(qq.mul(&d).add(&r), a);
        assert!(r.degree().is_none_or(|x| x < 1));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 2, 3]).eval(&q(2)), q(17));
        assert_eq!(p(&[0, 0, 1]).eval(&q(3)), q(9));
        assert_eq!(TPoly::zero().eval(&q(3)), q(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1]).to_string(), "1-t");
        assert_eq!(p(&[0, 0, 2, 1]).to_string(), "2*t^2+t^3");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }
}
