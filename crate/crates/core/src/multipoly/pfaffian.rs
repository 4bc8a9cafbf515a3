use std::collections::HashSet;

use super::poly::Polynomial;
use super::ringmap::RingMap;
use super::var::{odd_subsets, Subset, Var};
use crate::error::{Error, Result};
use crate::exactnum::Coeff;

/// A bijection from odd to even subsets of `{1..6}`, stored in canonical
/// odd-subset order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewSpec {
    targets: Vec<Subset>,
}

impl SkewSpec {
    pub fn new(targets: Vec<Subset>) -> Result<Self> {
        if targets.len() != 32 {
            return Err(Error::InvalidBijection(format!("expected 32 images, got {}", targets.len())));
        }
        if let Some(s) = targets.iter().find(|s| s.is_odd()) {
            return Err(Error::InvalidBijection(format!("image {{{s}}} is not even")));
        }
        let distinct: HashSet<Subset> = targets.iter().copied().collect();
        if distinct.len() != 32 {
            return Err(Error::InvalidBijection("not injective".into()));
        }
        Ok(Self { targets })
    }

    /// `σ ↦ σ Δ {i}`.
    pub fn toggle(i: u8) -> Self {
        Self::new(odd_subsets().iter().map(|s| s.toggle(i)).collect()).expect("toggle is a bijection")
    }

    pub fn target(&self, s: Subset) -> Subset {
        self.targets[s.p_index().expect("odd subset")]
    }
}

impl Default for SkewSpec {
    fn default() -> Self {
        Self::toggle(6)
    }
}

/// The generic skew-symmetric 6×6 matrix with entries `a_ij` above the
/// diagonal.
pub fn generic_skew<C: Coeff>() -> Vec<Vec<Polynomial<C>>> {
    (1..=6u8)
        .map(|i| {
            (1..=6u8)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => Polynomial::var(Var::A(i, j)),
                    std::cmp::Ordering::Greater => Polynomial::var(Var::A(j, i)).neg(),
                    std::cmp::Ordering::Equal => Polynomial::zero(),
                })
                .collect()
        })
        .collect()
}

/// Pfaffian of the principal submatrix on `rows` (0-based, increasing), by
/// expansion along the first row. The empty pfaffian is 1.
pub fn pfaffian<C: Coeff>(a: &[Vec<Polynomial<C>>], rows: &[usize]) -> Result<Polynomial<C>> {
    if rows.len() % 2 == 1 {
        return Err(Error::OddPfaffian(rows.iter().map(|r| r + 1).collect()));
    }
    Ok(pf_rec(a, rows))
}

fn pf_rec<C: Coeff>(a: &[Vec<Polynomial<C>>], rows: &[usize]) -> Polynomial<C> {
    if rows.is_empty() {
        return Polynomial::one();
    }
    let first = rows[0];
    let mut acc = Polynomial::zero();
    for (k, &j) in rows.iter().enumerate().skip(1) {
        let rest: Vec<usize> = rows[1..].iter().copied().filter(|&r| r != j).collect();
        let term = a[first][j].mul(&pf_rec(a, &rest));
        // k is the 0-based position of j; the sign is (-1)^(k+1).
        acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `p_σ ↦` the principal subpfaffian of the generic skew matrix on the
/// even subset paired with σ.
pub fn pfaffian_image_map<C: Coeff>(spec: &SkewSpec) -> RingMap<C> {
    let a = generic_skew::<C>();
    let images = odd_subsets()
        .iter()
        .map(|s| {
            let rows: Vec<usize> = spec.target(*s).elements().map(|i| i as usize - 1).collect();
            pf_rec(&a, &rows)
        })
        .collect();
    RingMap::new("pfaffians", images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    type P = Polynomial<Rational>;

    #[test]
    fn small_pfaffians() {
        let a = generic_skew::<Rational>();
        assert_eq!(pfaffian(&a, &[0, 1]).unwrap(), "a_12".parse::<P>().unwrap());
        assert_eq!(
            pfaffian(&a, &[0, 1, 2, 3]).unwrap(),
            "a_12*a_34 - a_13*a_24 + a_14*a_23".parse::<P>().unwrap()
        );
        assert!(pfaffian(&a, &[]).unwrap().is_one());
        assert_eq!(pfaffian(&a, &[0, 1, 2]), Err(Error::OddPfaffian(vec![1, 2, 3])));
    }

    #[test]
    fn default_bijection_images() {
        let psi = pfaffian_image_map::<Rational>(&SkewSpec::default());
        assert!(psi.image(Subset::from_elements(&[6])).is_one());
        assert_eq!(psi.image(Subset::from_elements(&[1])), &"a_16".parse::<P>().unwrap());
        assert_eq!(psi.image(Subset::from_elements(&[1, 2, 3, 4, 5])).len(), 15);
    }

    #[test]
    fn invalid_bijections() {
        let mut t: Vec<Subset> = odd_subsets().iter().map(|s| s.toggle(6)).collect();
        t[1] = t[0];
        assert!(SkewSpec::new(t.clone()).is_err());
        t[1] = Subset::from_elements(&[1]);
        assert!(SkewSpec::new(t).is_err());
        assert!(SkewSpec::new(vec![]).is_err());
    }
}
