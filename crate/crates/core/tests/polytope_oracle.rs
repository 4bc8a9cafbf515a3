//! Facets by brute force: every d-subset of points that spans a hyperplane
//! (within the affine span) is tested against all points.

use std::collections::BTreeSet;

use coxideal::polytope::{grading_points, hull, product_of_simplices, FaceLattice, PointConfig};

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Integer kernel vector of an r×(r+1) integer matrix of full rank, by
/// cofactors (Cramer); `None` if the rank is deficient.
fn kernel_vector(m: &[Vec<i128>]) -> Option<Vec<i128>> {
    let r = m.len();
    let det = |cols: &[usize]| -> i128 {
        // Fraction-free Bareiss on the selected columns.
        let mut a: Vec<Vec<i128>> = m.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..r {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..r).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..r {
                for j in k + 1..r {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[r - 1][r - 1]
    };
    let v: Vec<i128> = (0..=r)
        .map(|skip| {
            let cols: Vec<usize> = (0..=r).filter(|&c| c != skip).collect();
            let s = if skip % 2 == 0 { 1 } else { -1 };
            s * det(&cols)
        })
        .collect();
    if v.iter().all(|&x| x == 0) {
        return None;
    }
    let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
    Some(v.into_iter().map(|x| x / g).collect())
}

/// Incident sets of all facets, given points in a full-dimensional chart.
fn brute_force_facets(pts: &[Vec<i128>]) -> BTreeSet<Vec<usize>> {
    let d = pts[0].len();
    let n = pts.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut pick: Vec<usize> = (0..d).collect();
    loop {
        let covered = found.iter().any(|f| pick.iter().all(|k| f.binary_search(k).is_ok()));
        if !covered {
            // a·x − b = 0 on the picked points: rows (x, −1).
            let rows: Vec<Vec<i128>> = pick
                .iter()
                .map(|&k| pts[k].iter().copied().chain([-1]).collect())
                .collect();
            if let Some(ab) = kernel_vector(&rows) {
                let value = |x: &[i128]| x.iter().zip(&ab).map(|(a, b)| a * b).sum::<i128>() - ab[d];
                let vals: Vec<i128> = pts.iter().map(|p| value(p)).collect();
                if vals.iter().all(|&v| v <= 0) || vals.iter().all(|&v| v >= 0) {
                    found.insert((0..n).filter(|&k| vals[k] == 0).collect());
                }
            }
        }
        // Next d-combination.
        let Some(i) = (0..d).rev().find(|&i| pick[i] < n - d + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..d {
            pick[j] = pick[j - 1] + 1;
        }
    }
    found
}

fn integer_chart(cfg: &PointConfig, coords: &[usize]) -> Vec<Vec<i128>> {
    cfg.points()
        .iter()
        .map(|p| coords.iter().map(|&c| i128::try_from(p[c].to_integer()).unwrap()).collect())
        .collect()
}

fn library_facets(cfg: &PointConfig) -> BTreeSet<Vec<usize>> {
    hull(cfg).unwrap().iter().map(|f| f.incident().to_vec()).collect()
}

/// f-vector from a facet list by intersection closure and cardinality-free
/// dimension: the length of the longest chain of faces below each face.
fn closure_f_vector(facets: &BTreeSet<Vec<usize>>, d: usize) -> Vec<usize> {
    let mut faces: BTreeSet<Vec<usize>> = facets.clone();
    loop {
        let mut added = false;
        let snapshot: Vec<Vec<usize>> = faces.iter().cloned().collect();
        for a in &snapshot {
            for f in facets {
                let meet: Vec<usize> = a.iter().copied().filter(|k| f.binary_search(k).is_ok()).collect();
                if !meet.is_empty() && faces.insert(meet) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let all: Vec<Vec<usize>> = faces.into_iter().collect();
    let mut height = vec![0usize; all.len()];
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by_key(|&i| all[i].len());
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if all[j].len() < all[i].len() && all[j].iter().all(|k| all[i].binary_search(k).is_ok()) {
                height[i] = height[i].max(height[j] + 1);
            }
        }
    }
    let mut f = vec![0; d];
    for h in height {
        f[h] += 1;
    }
    f
}

#[test]
fn demicube_facets_match_brute_force() {
    let cfg = grading_points();
    // All points have first coordinate 1; coordinates 1..=6 chart the span.
    let pts = integer_chart(&cfg, &[1, 2, 3, 4, 5, 6]);
    let oracle = brute_force_facets(&pts);
    assert_eq!(library_facets(&cfg), oracle);
    assert_eq!(oracle.len(), 44);
    let f = closure_f_vector(&oracle, 6);
    assert_eq!(f, vec![32, 240, 640, 640, 252, 44]);
    assert_eq!(FaceLattice::new(&cfg, &hull(&cfg).unwrap()).f_vector(), f);
}

#[test]
fn product_of_simplices_matches_brute_force() {
    let cfg = product_of_simplices();
    // Σx_0..3 = 1 and Σx_4..7 = 1, so dropping one coordinate from each
    // block charts the 6-dimensional span.
    let pts = integer_chart(&cfg, &[0, 1, 2, 4, 5, 6]);
    let oracle = brute_force_facets(&pts);
    assert_eq!(library_facets(&cfg), oracle);
    assert_eq!(closure_f_vector(&oracle, 6), vec![12, 54, 110, 108, 52, 12]);
}

#[test]
fn demicube_lattice_is_symmetric() {
    let cfg = grading_points();
    let lattice = FaceLattice::new(&cfg, &hull(&cfg).unwrap());
    let index_of = |p: &[coxideal::exactnum::Rational]| cfg.points().iter().position(|q| q == p).unwrap();
    for perm in [[1u8, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]] {
        let image: Vec<usize> = cfg
            .points()
            .iter()
            .map(|p| {
                let mut q = p.clone();
                for i in 0..6 {
                    q[1 + perm[i] as usize] = p[1 + i].clone();
                }
                index_of(&q)
            })
            .collect();
        for k in 0..6 {
            let faces: BTreeSet<Vec<usize>> = lattice.faces(k).iter().cloned().collect();
            for face in &faces {
                let mut moved: Vec<usize> = face.iter().map(|&i| image[i]).collect();
                moved.sort();
                assert!(faces.contains(&moved));
            }
        }
    }
}
