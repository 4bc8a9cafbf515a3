use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::Coeff;
use crate::multipoly::{odd_subsets, Monomial, Multidegree, Polynomial, Var};

/// All p-monomials of one p-degree and one Z⁷-degree, sorted descending in
/// the monomial order so that echelon pivots are leading monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeFiber {
    degree: Multidegree,
    monomials: Vec<Monomial>,
}

impl DegreeFiber {
    /// Panics if the monomials are not all of the given degree.
    pub fn new(degree: Multidegree, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_by(|a, b| b.cmp(a));
        monomials.dedup();
        assert!(monomials
            .iter()
            .all(|m| m.multidegree().ok() == Some(degree)));
        Self { degree, monomials }
    }

    pub fn degree(&self) -> Multidegree {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search_by(|x| m.cmp(x)).ok()
    }

    /// Coefficient vector of `f` in this fiber's monomial basis.
    pub fn coordinates<C: Coeff>(&self, f: &Polynomial<C>) -> Result<Vec<C>> {
        let mut v = vec![C::zero(); self.len()];
        for (m, c) in f.terms() {
            let i = self.index_of(m).ok_or(Error::Inhomogeneous)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn polynomial<C: Coeff>(&self, v: &[C]) -> Polynomial<C> {
        Polynomial::from_terms(
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// Every nonempty fiber of p-degree `d`, ordered by multidegree.
pub fn fibers(d: u32) -> Vec<DegreeFiber> {
    let vars: Vec<Var> = odd_subsets().iter().map(|s| Var::P(*s)).collect();
    let mut groups: BTreeMap<Multidegree, Vec<Monomial>> = BTreeMap::new();
    let mut idx = vec![0usize; d as usize];
    loop {
        let m = Monomial::product_of(idx.iter().map(|&i| vars[i]));
        let deg = m.multidegree().expect("p-monomial");
        groups.entry(deg).or_default().push(m);
        // Next nondecreasing index tuple.
        let Some(k) = (0..idx.len()).rev().find(|&k| idx[k] + 1 < vars.len()) else {
            break;
        };
        idx[k] += 1;
        for j in k + 1..idx.len() {
            idx[j] = idx[k];
        }
    }
    groups
        .into_iter()
        .map(|(deg, ms)| DegreeFiber::new(deg, ms))
        .collect()
}

/// The fibers of `p_σ p_τ`, σ ≤ τ.
pub fn quadric_fibers() -> Vec<DegreeFiber> {
    fibers(2)
}
