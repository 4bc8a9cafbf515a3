use std::fmt;
use std::ops::{Add, Sub};

use serde::{Serialize, Serializer};

use super::var::Subset;

/// A vector in Z⁷ with the e₀ component first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Multidegree([i32; 7]);

impl Multidegree {
    pub fn new(entries: [i32; 7]) -> Self {
        Multidegree(entries)
    }

    pub fn zero() -> Self {
        Multidegree([0; 7])
    }

    /// `e₀ + Σ_{i∈σ} e_i`.
    pub fn of_subset(s: Subset) -> Self {
        let mut d = [0; 7];
        d[0] = 1;
        for i in s.elements() {
            d[i as usize] = 1;
        }
        Multidegree(d)
    }

    pub fn entries(&self) -> [i32; 7] {
        self.0
    }

    /// Total p-degree (the e₀ component).
    pub fn p_degree(&self) -> i32 {
        self.0[0]
    }

    pub fn scaled(self, k: i32) -> Self {
        Multidegree(self.0.map(|x| x * k))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| *x >= 0)
    }

    /// Applies a relabelling of `{1..6}`: component `i` moves to `perm[i-1]`.
    pub fn permuted(&self, perm: &[u8; 6]) -> Self {
        let mut d = [0; 7];
        d[0] = self.0[0];
        for i in 1..=6 {
            d[perm[i - 1] as usize] = self.0[i];
        }
        Multidegree(d)
    }
}

impl Add for Multidegree {
    type Output = Multidegree;
    fn add(self, rhs: Self) -> Self {
        let mut d = self.0;
        for (x, y) in d.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Multidegree(d)
    }
}

impl Sub for Multidegree {
    type Output = Multidegree;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.scaled(-1)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.0;
        write!(f, "({}, {},{},{},{},{},{})", d[0], d[1], d[2], d[3], d[4], d[5], d[6])
    }
}

impl Serialize for Multidegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl std::str::FromStr for Multidegree {
    type Err = crate::error::Error;

    /// Accepts `(2, 0,0,1,1,1,1)`, `2,0,0,1,1,1,1` and similar.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let bad = || crate::text::parse_error(0, format!("bad multidegree {s:?}"));
        if parts.len() != 7 {
            return Err(bad());
        }
        let mut d = [0; 7];
        for (x, p) in d.iter_mut().zip(parts) {
            *x = p.parse().map_err(|_| bad())?;
        }
        Ok(Multidegree(d))
    }
}
