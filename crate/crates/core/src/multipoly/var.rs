use std::cmp::Ordering;
use std::fmt;
use std::sync::LazyLock;

use crate::error::Result;
use crate::text::parse_error;

/// A subset of `{1,…,6}` as a bitmask (bit `i-1` for element `i`).
///
/// Subsets order by cardinality first, then lexicographically on their
/// sorted element lists, so `p_1 < … < p_6 < p_123 < p_124 < … < p_23456`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subset(u8);

impl Subset {
    pub const EMPTY: Subset = Subset(0);
    pub const FULL: Subset = Subset(0b11_1111);

    pub fn from_bits(bits: u8) -> Option<Self> {
        (bits & !Self::FULL.0 == 0).then_some(Subset(bits))
    }

    /// Panics if an element is outside `1..=6`.
    pub fn from_elements(elems: &[u8]) -> Self {
        let mut bits = 0u8;
        for &e in elems {
            assert!((1..=6).contains(&e), "subset element {e} out of range");
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u8) -> bool {
        (1..=6).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        (1..=6u8).filter(move |i| self.0 & (1 << (i - 1)) != 0)
    }

    /// Symmetric difference with `{i}`.
    pub fn toggle(self, i: u8) -> Self {
        Subset(self.0 ^ (1 << (i - 1)))
    }

    pub fn is_odd(self) -> bool {
        self.len() % 2 == 1
    }

    /// Image under a permutation of `{1..6}` given as `perm[i-1] = π(i)`.
    pub fn permuted(self, perm: &[u8; 6]) -> Self {
        Subset::from_elements(&self.elements().map(|i| perm[i as usize - 1]).collect::<Vec<_>>())
    }

    /// Index among the 32 odd subsets in canonical order.
    pub fn p_index(self) -> Option<usize> {
        P_INDEX[self.0 as usize]
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.elements() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

static ODD: LazyLock<Vec<Subset>> = LazyLock::new(|| {
    let mut v: Vec<Subset> = (0u8..64).map(Subset).filter(|s| s.is_odd()).collect();
    v.sort();
    v
});

static P_INDEX: LazyLock<[Option<usize>; 64]> = LazyLock::new(|| {
    let mut idx = [None; 64];
    for (i, s) in ODD.iter().enumerate() {
        idx[s.0 as usize] = Some(i);
    }
    idx
});

/// The 32 odd subsets of `{1,…,6}` in canonical order.
pub fn odd_subsets() -> &'static [Subset] {
    &ODD
}

/// Polynomial ring variables.
///
/// Variant order is the global variable order; within `P` the subset
/// order applies. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    /// `p_σ` for an odd subset σ.
    P(Subset),
    /// Generic matrix entry `x_i_j`, row `i` in 1..=5, column `j` in 1..=6.
    Entry(u8, u8),
    X(u8),
    Y(u8),
    U(u8),
    V(u8),
    /// Skew-symmetric matrix entry `a_ij`, `i < j`.
    A(u8, u8),
}

impl Var {
    pub fn p(elems: &[u8]) -> Self {
        let s = Subset::from_elements(elems);
        assert!(s.is_odd(), "p-variables are indexed by odd subsets");
        Var::P(s)
    }

    pub fn p_index(self) -> Option<usize> {
        match self {
            Var::P(s) => s.p_index(),
            _ => None,
        }
    }

    pub fn parse(name: &str, offset: usize) -> Result<Self> {
        let bad = || parse_error(offset, format!("unknown variable {name:?}"));
        let (head, rest) = name.split_once('_').ok_or_else(bad)?;
        let digits: Vec<u8> = rest
            .split('_')
            .flat_map(|part| part.bytes())
            .map(|b| if b.is_ascii_digit() { Ok(b - b'0') } else { Err(bad()) })
            .collect::<Result<_>>()?;
        let parts = rest.split('_').count();
        let in6 = |d: u8| (1..=6).contains(&d);
        match (head, parts, digits.as_slice()) {
            ("p", 1, ds) if !ds.is_empty() && ds.iter().all(|d| in6(*d)) && ds.windows(2).all(|w| w[0] < w[1]) && ds.len() % 2 == 1 => {
                Ok(Var::P(Subset::from_elements(ds)))
            }
            ("x", 2, &[i, j]) if (1..=5).contains(&i) && in6(j) => Ok(Var::Entry(i, j)),
            ("x", 1, &[i]) if in6(i) => Ok(Var::X(i)),
            ("y", 1, &[i]) if in6(i) => Ok(Var::Y(i)),
            ("u", 1, &[i]) if in6(i) => Ok(Var::U(i)),
            ("v", 1, &[i]) if in6(i) => Ok(Var::V(i)),
            ("a", 1, &[i, j]) if in6(i) && in6(j) && i < j => Ok(Var::A(i, j)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::P(s) => write!(f, "p_{s}"),
            Var::Entry(i, j) => write!(f, "x_{i}_{j}"),
            Var::X(i) => write!(f, "x_{i}"),
            Var::Y(i) => write!(f, "y_{i}"),
            Var::U(i) => write!(f, "u_{i}"),
            Var::V(i) => write!(f, "v_{i}"),
            Var::A(i, j) => write!(f, "a_{i}{j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let odd = odd_subsets();
        assert_eq!(odd.len(), 32);
        let names: Vec<String> = odd.iter().map(|s| s.to_string()).collect();
        assert_eq!(&names[..7], ["1", "2", "3", "4", "5", "6", "123"]);
        assert_eq!(names[7], "124");
        assert_eq!(names[25], "456");
        assert_eq!(names[26], "12345");
        assert_eq!(names[31], "23456");
        for (i, s) in odd.iter().enumerate() {
            assert_eq!(s.p_index(), Some(i));
        }
        assert_eq!(Subset::from_elements(&[1, 2]).p_index(), None);
    }

    #[test]
    fn parse_names() {
        for name in ["p_123", "x_2_3", "x_4", "y_6", "u_1", "v_2", "a_16"] {
            assert_eq!(Var::parse(name, 0).unwrap().to_string(), name);
        }
        for bad in ["p_12", "p_321", "p_7", "x_6_1", "x_0", "a_21", "q_1", "p_", "p_1_3", "x_1x"] {
            assert!(Var::parse(bad, 0).is_err(), "{bad}");
        }
    }
}
