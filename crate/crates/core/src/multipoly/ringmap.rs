use std::collections::HashMap;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::var::{odd_subsets, Subset, Var};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, Rational};

/// A 2×6 matrix of scalars `((u_1..u_6),(v_1..v_6))` with nonzero 2×2 minors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMatrix<C> {
    rows: [[C; 6]; 2],
}

impl<C: Coeff> PointMatrix<C> {
    pub fn new(rows: [[C; 6]; 2]) -> Result<Self> {
        for i in 0..6 {
            for j in i + 1..6 {
                let m = rows[0][i].times(&rows[1][j]).minus(&rows[0][j].times(&rows[1][i]));
                if m.is_zero() {
                    return Err(Error::DegeneratePoints(i + 1, j + 1));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn u(&self, j: usize) -> &C {
        &self.rows[0][j - 1]
    }

    pub fn v(&self, j: usize) -> &C {
        &self.rows[1][j - 1]
    }

    pub fn rows(&self) -> &[[C; 6]; 2] {
        &self.rows
    }
}

/// Which 5×6 matrix the odd minors are taken of.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatrixSpec<C> {
    /// Independent variables `x_i_j`.
    Generic,
    /// Columns `(u²x, uy, uvx, vy, v²x)` with symbols `u_j, v_j, x_j, y_j`.
    Symbolic,
    /// The symbolic matrix with `u, v` replaced by field elements.
    AtPoints(PointMatrix<C>),
}

impl<C: Coeff> MatrixSpec<C> {
    pub fn at_points(rows: [[C; 6]; 2]) -> Result<Self> {
        Ok(MatrixSpec::AtPoints(PointMatrix::new(rows)?))
    }

    /// The 5×6 matrix of polynomial entries.
    pub fn entries(&self) -> Vec<Vec<Polynomial<C>>> {
        let var = |v| Polynomial::<C>::var(v);
        (1..=5u8)
            .map(|i| {
                (1..=6u8)
                    .map(|j| match self {
                        MatrixSpec::Generic => var(Var::Entry(i, j)),
                        MatrixSpec::Symbolic => {
                            let (u, v) = (var(Var::U(j)), var(Var::V(j)));
                            let (x, y) = (var(Var::X(j)), var(Var::Y(j)));
                            match i {
                                1 => u.mul(&u).mul(&x),
                                2 => u.mul(&y),
                                3 => u.mul(&v).mul(&x),
                                4 => v.mul(&y),
                                _ => v.mul(&v).mul(&x),
                            }
                        }
                        MatrixSpec::AtPoints(pm) => {
                            let (u, v) = (pm.u(j as usize), pm.v(j as usize));
                            let (c, w) = match i {
                                1 => (u.times(u), Var::X(j)),
                                2 => (u.clone(), Var::Y(j)),
                                3 => (u.times(v), Var::X(j)),
                                4 => (v.clone(), Var::Y(j)),
                                _ => (v.times(v), Var::X(j)),
                            };
                            Polynomial::term(Monomial::var(w), c)
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// A ring map from the 32-variable p-ring, given by the images of the
/// p-variables (indexed in canonical odd-subset order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMap<C> {
    name: String,
    images: Vec<Polynomial<C>>,
}

impl<C: Coeff> RingMap<C> {
    /// Panics unless exactly 32 images are supplied.
    pub fn new(name: impl Into<String>, images: Vec<Polynomial<C>>) -> Self {
        assert_eq!(images.len(), 32, "a ring map needs one image per odd subset");
        Self {
            name: name.into(),
            images,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn images(&self) -> &[Polynomial<C>] {
        &self.images
    }

    pub fn image(&self, s: Subset) -> &Polynomial<C> {
        &self.images[s.p_index().expect("odd subset")]
    }

    pub fn is_monomial(&self) -> bool {
        self.images.iter().all(|p| p.len() == 1)
    }

    /// Image of a product of p-variables given by canonical indices.
    pub fn image_of_factors(&self, factors: &[usize]) -> Polynomial<C> {
        let mut acc = Polynomial::one();
        for &i in factors {
            acc = acc.mul(&self.images[i]);
        }
        acc
    }

    /// Substitutes the images into `f` and expands.
    pub fn apply(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        let mut acc = Polynomial::zero();
        let mut cache: HashMap<Monomial, Polynomial<C>> = HashMap::new();
        for (m, c) in f.terms() {
            let img = match cache.get(m) {
                Some(p) => p.clone(),
                None => {
                    let p = self.image_of_factors(&m.p_factors()?);
                    cache.insert(m.clone(), p.clone());
                    p
                }
            };
            acc = acc.add(&img.scale(c));
        }
        Ok(acc)
    }

    /// Values of the 32 images at a point; `None` at a pole in `t`.
    pub fn evaluate_images(&self, point: &impl Fn(Var) -> Rational, t0: &Rational) -> Option<Vec<Rational>> {
        self.images.iter().map(|p| p.evaluate(point, t0)).collect()
    }
}

/// `p_σ ↦` the minor with columns σ (increasing) and rows `1..|σ|`.
pub fn minor_image_map<C: Coeff>(spec: &MatrixSpec<C>) -> RingMap<C> {
    let entries = spec.entries();
    let mut memo = HashMap::new();
    let images = odd_subsets()
        .iter()
        .map(|s| {
            let cols: Vec<usize> = s.elements().map(|j| j as usize - 1).collect();
            det_cofactor(&entries, 0, &cols, &mut memo)
        })
        .collect();
    let name = match spec {
        MatrixSpec::Generic => "minors(generic)",
        MatrixSpec::Symbolic => "minors(symbolic)",
        MatrixSpec::AtPoints(_) => "minors(U)",
    };
    RingMap::new(name, images)
}

/// Determinant of rows `row..row+cols.len()` on the given columns, by
/// Laplace expansion along the first row. Sub-determinants are memoized on
/// `(row, column mask)`.
fn det_cofactor<C: Coeff>(
    m: &[Vec<Polynomial<C>>],
    row: usize,
    cols: &[usize],
    memo: &mut HashMap<(usize, u64), Polynomial<C>>,
) -> Polynomial<C> {
    if cols.is_empty() {
        return Polynomial::one();
    }
    let mask = cols.iter().fold(0u64, |acc, c| acc | (1 << c));
    if let Some(p) = memo.get(&(row, mask)) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = det_cofactor(m, row + 1, &rest, memo);
        let term = m[row][c].mul(&sub);
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    memo.insert((row, mask), acc.clone());
    acc
}

/// Determinant of a square matrix of polynomials.
pub fn determinant<C: Coeff>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    let cols: Vec<usize> = (0..m.len()).collect();
    det_cofactor(m, 0, &cols, &mut HashMap::new())
}

/// Fraction-free (Bareiss) determinant of a square matrix over a field.
pub fn det_bareiss<C: Coeff>(mut a: Vec<Vec<C>>) -> C {
    let n = a.len();
    if n == 0 {
        return C::one();
    }
    let mut sign = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = v.quotient(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.negated()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rational, TRational};

    #[test]
    fn generic_singleton_minor() {
        let phi = minor_image_map::<Rational>(&MatrixSpec::Generic);
        assert_eq!(phi.image(Subset::from_elements(&[1])), &Polynomial::var(Var::Entry(1, 1)));
        let p123 = phi.image(Subset::from_elements(&[1, 2, 3]));
        assert_eq!(p123.len(), 6);
        assert_eq!(phi.image(Subset::from_elements(&[1, 2, 3, 4, 5])).len(), 120);
    }

    #[test]
    fn symbolic_singleton_minor() {
        let phi = minor_image_map::<Rational>(&MatrixSpec::Symbolic);
        let expected: Polynomial<Rational> = "u_1^2*x_1".parse().unwrap();
        assert_eq!(phi.image(Subset::from_elements(&[1])), &expected);
    }

    #[test]
    fn rank_one_points_rejected() {
        let row = [1, 2, 3, 4, 5, 6].map(TRational::from_int);
        let row2 = [2, 4, 6, 8, 10, 12].map(TRational::from_int);
        assert_eq!(
            MatrixSpec::at_points([row, row2]).unwrap_err(),
            Error::DegeneratePoints(1, 2)
        );
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m: Vec<Vec<Rational>> = vec![
            vec![rational(2, 1), rational(-1, 3), rational(0, 1)],
            vec![rational(1, 1), rational(0, 1), rational(5, 2)],
            vec![rational(0, 1), rational(4, 1), rational(1, 1)],
        ];
        let poly: Vec<Vec<Polynomial<Rational>>> = m
            .iter()
            .map(|r| r.iter().map(|c| Polynomial::constant(c.clone())).collect())
            .collect();
        assert_eq!(Polynomial::constant(det_bareiss(m)), determinant(&poly));
        assert_eq!(det_bareiss::<Rational>(vec![vec![rational(0, 1), rational(1, 1)], vec![rational(1, 1), rational(0, 1)]]), rational(-1, 1));
    }
}
