//! Dense exact linear algebra over a `Coeff` field, plus rank computations
//! modulo a prime for cheap rank lower bounds.

use crate::exactnum::{Coeff, Rational};

/// A row space kept in reduced row-echelon form: every pivot is 1, pivot
/// columns are zero in all other rows, rows sorted by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<C> {
    ncols: usize,
    rows: Vec<Vec<C>>,
    pivots: Vec<usize>,
}

impl<C: Coeff> Echelon<C> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = Vec<C>>) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<C>> {
        self.rows
    }

    /// Remainder of `row` after eliminating every pivot column.
    pub fn reduce(&self, mut row: Vec<C>) -> Vec<C> {
        assert_eq!(row.len(), self.ncols);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        row
    }

    pub fn contains(&self, row: &[C]) -> bool {
        self.reduce(row.to_vec()).iter().all(C::is_zero)
    }

    /// Adds `row` to the space; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<C>) -> bool {
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].inverse();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Basis of `{c : A c = 0}` where `A` has this row space, in reduced
    /// row-echelon form.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.ncols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![C::zero(); self.ncols];
            v[f] = C::one();
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                if !r[f].is_zero() {
                    v[p] = r[f].negated();
                }
            }
            out.push(v);
        }
        rref(out, self.ncols)
    }

    /// Whether both spaces are equal.
    pub fn same_space(&self, other: &Self) -> bool {
        self.ncols == other.ncols && self.pivots == other.pivots && self.rows == other.rows
    }
}

/// Reduced row-echelon basis of the span of `rows`.
pub fn rref<C: Coeff>(rows: Vec<Vec<C>>, ncols: usize) -> Vec<Vec<C>> {
    Echelon::from_rows(ncols, rows).into_rows()
}

pub fn rank<C: Coeff>(rows: Vec<Vec<C>>, ncols: usize) -> usize {
    Echelon::from_rows(ncols, rows).rank()
}

/// Arithmetic modulo the Mersenne prime 2⁶¹ − 1.
pub mod modp {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive};

    use super::Rational;

    pub const P: u64 = (1 << 61) - 1;

    pub fn add(a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= P {
            s - P
        } else {
            s
        }
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    pub fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Panics on zero.
    pub fn inv(a: u64) -> u64 {
        assert!(a != 0, "inverse of zero mod p");
        pow(a, P - 2)
    }

    pub fn from_int(n: &BigInt) -> u64 {
        let m: BigInt = n.abs() % BigInt::from(P);
        let m = m.to_u64().expect("reduced below p");
        if n.is_negative() {
            sub(0, m)
        } else {
            m
        }
    }

    /// `None` when the denominator vanishes mod p.
    pub fn from_rational(r: &Rational) -> Option<u64> {
        let d = from_int(r.denom());
        (d != 0).then(|| mul(from_int(r.numer()), inv(d)))
    }

    /// Rank over F_p; never exceeds the rank over Q of any integral lift.
    pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let iv = inv(rows[rank][c]);
            for x in rows[rank].iter_mut() {
                *x = mul(*x, iv);
            }
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[c] != 0 {
                    let f = row[c];
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = sub(*x, mul(f, *y));
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rational, TRational};

    fn q(n: i64) -> Rational {
        rational(n, 1)
    }

    #[test]
    fn rref_and_nullspace() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        let e = Echelon::from_rows(3, rows);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.rows(), &[vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]]);
        assert_eq!(e.nullspace(), vec![vec![q(1), q(1), q(-1)]]);
        assert!(e.contains(&[q(1), q(1), q(2)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn rref_over_rational_functions() {
        let t = TRational::t();
        let one = TRational::one();
        let rows = vec![vec![t.clone(), one.clone()], vec![&t * &t, t.clone()]];
        assert_eq!(rank(rows, 2), 1);
    }

    #[test]
    fn modular_rank_matches_small_cases() {
        assert_eq!(modp::rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(modp::rank(vec![vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(modp::from_rational(&rational(-1, 2)).map(|x| modp::mul(x, 2)), Some(modp::P - 1));
    }
}
