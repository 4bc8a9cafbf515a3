//! Exact convex hulls, face lattices and f-vectors of small point sets.

mod hull;
mod lattice;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::linalg::Echelon;
use crate::multipoly::odd_subsets;

pub use hull::{hull, Facet};
pub use lattice::FaceLattice;

/// Distinct rational points of one ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if points.is_empty() || points.iter().any(|p| p.len() != dim) {
            return Err(Error::BadPointConfig);
        }
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::BadPointConfig);
        }
        Ok(Self { dim, points })
    }

    pub fn from_integers(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::new(dim, pts)
    }

    pub fn ambient_dimension(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Reduced basis of the differences `p_k − p_0`.
    pub(crate) fn directions(&self) -> Echelon<Rational> {
        let base = &self.points[0];
        Echelon::from_rows(
            self.dim,
            self.points[1..]
                .iter()
                .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()),
        )
    }

    pub fn affine_dimension(&self) -> usize {
        self.directions().rank()
    }

    pub fn subset(&self, indices: &[usize]) -> Vec<&[Rational]> {
        indices.iter().map(|&i| self.points[i].as_slice()).collect()
    }
}

/// Affine dimension of a set of points; `None` when empty.
pub fn affine_rank(points: &[&[Rational]]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let e = Echelon::from_rows(
        first.len(),
        rest.iter().map(|p| p.iter().zip(*first).map(|(a, b)| a - b).collect()),
    );
    Some(e.rank())
}

/// `deg(p_σ) = e₀ + Σ_{i∈σ} e_i` in canonical subset order.
pub fn grading_points() -> PointConfig {
    let pts: Vec<Vec<i64>> = odd_subsets()
        .iter()
        .map(|s| {
            let mut v = vec![0; 7];
            v[0] = 1;
            for i in s.elements() {
                v[i as usize] = 1;
            }
            v
        })
        .collect();
    PointConfig::from_integers(7, &pts).expect("distinct grading points")
}

/// Vertices of `[0,1]^d` in binary counting order.
pub fn cube(d: usize) -> PointConfig {
    let pts: Vec<Vec<i64>> = (0..1u32 << d)
        .map(|m| (0..d).map(|i| i64::from((m >> i) & 1)).collect())
        .collect();
    PointConfig::from_integers(d, &pts).expect("distinct cube vertices")
}

/// The points `e_i ⊕ e_j` of `R⁴ ⊕ R⁴` with `i ≠ j`.
pub fn product_of_simplices() -> PointConfig {
    let mut pts = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let mut v = vec![0; 8];
                v[i] = 1;
                v[4 + j] = 1;
                pts.push(v);
            }
        }
    }
    PointConfig::from_integers(8, &pts).expect("distinct points")
}

/// Named point configurations available to the command line.
pub fn preset(name: &str) -> Option<PointConfig> {
    match name {
        "cube" => Some(cube(3)),
        "prodsimplex" => Some(product_of_simplices()),
        "demicube" | "grading" => Some(grading_points()),
        _ => None,
    }
}

/// `(f₀, …, f_{d−1})` of the convex hull.
pub fn f_vector(points: &PointConfig) -> Result<Vec<usize>> {
    Ok(FaceLattice::new(points, &hull(points)?).f_vector())
}

fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// Facets and f-vector as a JSON document.
pub fn report_json(points: &PointConfig, facets: &[Facet], lattice: &FaceLattice) -> Value {
    json!({
        "points": points.len(),
        "ambient_dimension": points.ambient_dimension(),
        "dimension": lattice.dimension(),
        "f_vector": lattice.f_vector(),
        "euler": lattice.euler_holds(),
        "facets": facets
            .iter()
            .map(|f| json!({
                "normal": f.normal().iter().map(int_value).collect::<Vec<_>>(),
                "offset": int_value(f.offset()),
                "incident": f.incident(),
            }))
            .collect::<Vec<_>>(),
    })
}
