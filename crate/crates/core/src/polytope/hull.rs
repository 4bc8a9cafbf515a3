use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{affine_rank, PointConfig};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::linalg::Echelon;

/// `⟨normal, x⟩ ≤ offset` for every point, with equality exactly on
/// `incident`. The normal lies in the direction space of the affine span
/// and is a primitive integer vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigInt,
    incident: Vec<usize>,
}

impl Facet {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn incident(&self) -> &[usize] {
        &self.incident
    }

    /// `offset − ⟨normal, x⟩`; nonnegative on the polytope.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        let dot = self
            .normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (n, v)| acc + Rational::from_integer(n.clone()) * v);
        Rational::from_integer(self.offset.clone()) - dot
    }
}

/// A working facet in the local chart.
#[derive(Clone, Debug)]
struct Plane {
    normal: Vec<Rational>,
    offset: Rational,
    incident: Vec<usize>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Hyperplane through `pts` (affinely of dimension d−1 in Q^d), oriented so
/// that `interior` is strictly below it.
fn plane_through(pts: &[&[Rational]], interior: &[Rational]) -> (Vec<Rational>, Rational) {
    let d = interior.len();
    let base = pts[0];
    let e = Echelon::from_rows(d, pts[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()));
    let mut normal = e.nullspace().into_iter().next().expect("codimension one");
    let mut offset = dot(&normal, base);
    if dot(&normal, interior) > offset {
        normal.iter_mut().for_each(|c| *c = -c.clone());
        offset = -offset;
    }
    (normal, offset)
}

fn same_plane(a: &(Vec<Rational>, Rational), b: &Plane) -> bool {
    // Both are oriented the same way; compare after scaling by a pivot.
    let Some(k) = a.0.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if b.normal[k].is_zero() {
        return false;
    }
    let r = &b.normal[k] / &a.0[k];
    r > Rational::zero()
        && a.0.iter().zip(&b.normal).all(|(x, y)| x * &r == *y)
        && &a.1 * &r == b.offset
}

/// Facets of the convex hull within the affine span, inserting points in
/// input order (beneath-beyond).
pub fn hull(config: &PointConfig) -> Result<Vec<Facet>> {
    let dirs = config.directions();
    let d = dirs.rank();
    if d == 0 {
        return Err(Error::DegenerateHull { span: 0, needed: 1 });
    }
    // Local coordinates: the pivot columns of the direction basis.
    let chart: Vec<usize> = dirs.pivots().to_vec();
    let local: Vec<Vec<Rational>> = config
        .points()
        .iter()
        .map(|p| chart.iter().map(|&c| p[c].clone()).collect())
        .collect();

    // Initial simplex from the first affinely independent points.
    let mut simplex = vec![0usize];
    let mut span = Echelon::new(d);
    for (k, p) in local.iter().enumerate().skip(1) {
        if simplex.len() == d + 1 {
            break;
        }
        if span.insert(p.iter().zip(&local[0]).map(|(a, b)| a - b).collect()) {
            simplex.push(k);
        }
    }
    let inv = Rational::new(BigInt::one(), BigInt::from(d + 1));
    let interior: Vec<Rational> = (0..d)
        .map(|c| simplex.iter().fold(Rational::zero(), |acc, &k| acc + &local[k][c]) * &inv)
        .collect();

    let mut inserted: Vec<usize> = simplex.clone();
    let mut planes: Vec<Plane> = simplex
        .iter()
        .map(|&skip| {
            let rest: Vec<usize> = simplex.iter().copied().filter(|&k| k != skip).collect();
            let pts: Vec<&[Rational]> = rest.iter().map(|&k| local[k].as_slice()).collect();
            let (normal, offset) = plane_through(&pts, &interior);
            Plane {
                normal,
                offset,
                incident: rest,
            }
        })
        .collect();

    for q in 0..local.len() {
        if simplex.contains(&q) {
            continue;
        }
        let x = &local[q];
        let side: Vec<std::cmp::Ordering> = planes
            .iter()
            .map(|p| dot(&p.normal, x).cmp(&p.offset))
            .collect();
        let visible: Vec<usize> = (0..planes.len()).filter(|&i| side[i].is_gt()).collect();
        inserted.push(q);
        if visible.is_empty() {
            for (p, s) in planes.iter_mut().zip(&side) {
                if s.is_eq() {
                    p.incident.push(q);
                }
            }
            continue;
        }
        // Horizon ridges: visible ∩ non-visible faces of dimension d−2.
        let mut fresh: Vec<Plane> = Vec::new();
        for &v in &visible {
            for (h, s) in side.iter().enumerate() {
                if s.is_gt() {
                    continue;
                }
                let ridge: Vec<usize> = planes[v]
                    .incident
                    .iter()
                    .copied()
                    .filter(|k| planes[h].incident.contains(k))
                    .collect();
                let pts: Vec<&[Rational]> = ridge.iter().map(|&k| local[k].as_slice()).collect();
                if d >= 2 && affine_rank(&pts) != Some(d - 2) {
                    continue;
                }
                if d == 1 && !ridge.is_empty() {
                    continue;
                }
                let mut through = pts.clone();
                through.push(x);
                let plane = plane_through(&through, &interior);
                if s.is_eq() && same_plane(&plane, &planes[h]) {
                    continue;
                }
                if let Some(f) = fresh.iter_mut().find(|f| same_plane(&plane, f)) {
                    for k in ridge {
                        if !f.incident.contains(&k) {
                            f.incident.push(k);
                        }
                    }
                } else {
                    let mut incident = ridge;
                    incident.push(q);
                    fresh.push(Plane {
                        normal: plane.0,
                        offset: plane.1,
                        incident,
                    });
                }
            }
        }
        for (p, s) in planes.iter_mut().zip(&side) {
            if s.is_eq() {
                p.incident.push(q);
            }
        }
        let mut keep = Vec::with_capacity(planes.len());
        for (i, p) in planes.into_iter().enumerate() {
            if !side[i].is_gt() {
                keep.push(p);
            }
        }
        planes = keep;
        for mut f in fresh {
            // Earlier points on the new hyperplane that were not on the ridge.
            f.incident = inserted
                .iter()
                .copied()
                .filter(|&k| dot(&f.normal, &local[k]) == f.offset)
                .collect();
            planes.push(f);
        }
    }

    let mut facets: Vec<Facet> = planes.iter().map(|p| ambient_facet(config, &dirs, &chart, p)).collect();
    facets.sort_by(|a, b| a.incident.cmp(&b.incident));
    Ok(facets)
}

/// Lifts a local plane to the ambient space: project the chart normal onto
/// the direction space, scale to a primitive integer vector, and recompute
/// the incidences over all points.
fn ambient_facet(config: &PointConfig, dirs: &Echelon<Rational>, chart: &[usize], p: &Plane) -> Facet {
    let n = config.ambient_dimension();
    let mut lifted = vec![Rational::zero(); n];
    for (c, v) in chart.iter().zip(&p.normal) {
        lifted[*c] = v.clone();
    }
    let projected = project(dirs.rows(), &lifted);
    let lcm = projected
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = projected.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let normal: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    let anchor = &config.points()[p.incident[0]];
    let offset = normal
        .iter()
        .zip(anchor)
        .fold(Rational::zero(), |acc, (a, b)| acc + Rational::from_integer(a.clone()) * b);
    debug_assert!(offset.is_integer() || !anchor.iter().all(Rational::is_integer));
    let mut facet = Facet {
        normal,
        offset: offset.to_integer(),
        incident: Vec::new(),
    };
    if !offset.is_integer() {
        // Rational points: scale so that the offset is integral too.
        let s = offset.denom().clone();
        facet.normal.iter_mut().for_each(|c| *c *= &s);
        facet.offset = (offset * Rational::from_integer(s)).to_integer();
        let g = facet.normal.iter().fold(facet.offset.abs(), |acc, c| acc.gcd(c));
        facet.normal.iter_mut().for_each(|c| *c /= &g);
        facet.offset /= &g;
    }
    facet.incident = (0..config.len())
        .filter(|&k| facet.slack(&config.points()[k]).is_zero())
        .collect();
    facet
}

/// Orthogonal projection of `v` onto the row space of `basis`.
fn project(basis: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    let k = basis.len();
    // Solve (B Bᵀ) c = B v, then return Bᵀ c.
    let mut rows: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut r: Vec<Rational> = (0..k).map(|j| dot(&basis[i], &basis[j])).collect();
            r.push(dot(&basis[i], v));
            r
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !rows[r][col].is_zero()).expect("Gram matrix is invertible");
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..k {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=k {
                    let sub = &f * &rows[col][c];
                    rows[r][c] -= sub;
                }
            }
        }
    }
    let coeffs: Vec<Rational> = rows.iter().map(|r| r[k].clone()).collect();
    (0..v.len())
        .map(|j| {
            basis
                .iter()
                .zip(&coeffs)
                .fold(Rational::zero(), |acc, (b, c)| acc + &b[j] * c)
        })
        .collect()
}
