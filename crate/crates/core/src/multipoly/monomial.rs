use std::cmp::Ordering;
use std::fmt;

use super::degree::Multidegree;
use super::var::Var;
use crate::error::{Error, Result};

/// A power product, stored as `(variable, exponent)` pairs sorted by
/// variable with every exponent positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: Vec<(Var, u32)> = powers.into_iter().filter(|(_, e)| *e > 0).collect();
        v.sort_by_key(|(x, _)| *x);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some((lx, le)) if *lx == x => *le += e,
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    /// Product of the given variables (with repetition).
    pub fn product_of(vars: impl IntoIterator<Item = Var>) -> Self {
        Self::from_powers(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |(x, _)| *x)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (*v, e * k)).collect())
    }

    /// Indices of the p-variables as a multiset (sorted, with repetition).
    pub fn p_factors(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (v, e) in &self.0 {
            let i = v.p_index().ok_or_else(|| Error::NotPVariable(v.to_string()))?;
            out.extend(std::iter::repeat_n(i, *e as usize));
        }
        Ok(out)
    }

    /// Z⁷-degree of a p-monomial: `Σ e_σ · (e₀ + Σ_{i∈σ} e_i)`.
    pub fn multidegree(&self) -> Result<Multidegree> {
        let mut d = Multidegree::zero();
        for (v, e) in &self.0 {
            match v {
                Var::P(s) => d = d + Multidegree::of_subset(*s).scaled(*e as i32),
                other => return Err(Error::NotPVariable(other.to_string())),
            }
        }
        Ok(d)
    }
}

impl Ord for Monomial {
    /// Graded, then lexicographic on the fixed variable order: at the first
    /// variable where exponents differ, the larger exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for (x, y) in a.iter().zip(b.iter()) {
                match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match x.1.cmp(&y.1) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    },
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_earlier_variables_first() {
        let a = Monomial::product_of([Var::p(&[3]), Var::p(&[4, 5, 6])]);
        let b = Monomial::product_of([Var::p(&[4]), Var::p(&[3, 5, 6])]);
        let c = Monomial::product_of([Var::p(&[1]), Var::p(&[1])]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::var(Var::p(&[6])) < a);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    #[test]
    fn multidegree_examples() {
        let m = Monomial::product_of([Var::p(&[3]), Var::p(&[4, 5, 6])]);
        assert_eq!(m.multidegree().unwrap(), Multidegree::new([2, 0, 0, 1, 1, 1, 1]));
        assert_eq!(
            Monomial::var(Var::p(&[1])).multidegree().unwrap(),
            Multidegree::new([1, 1, 0, 0, 0, 0, 0])
        );
        let m = Monomial::product_of([Var::p(&[1, 2, 3]), Var::p(&[1, 2, 4, 5, 6])]);
        assert_eq!(m.multidegree().unwrap(), Multidegree::new([2, 2, 2, 1, 1, 1, 1]));
        assert!(Monomial::var(Var::X(1)).multidegree().is_err());
    }
}
