use std::collections::BTreeSet;

use super::{affine_rank, Facet, PointConfig};

/// Faces as sets of incident point indices, closed under intersection and
/// grouped by dimension. The empty face and the polytope itself are not
/// stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceLattice {
    dimension: usize,
    faces: Vec<Vec<Vec<usize>>>,
}

impl FaceLattice {
    pub fn new(points: &PointConfig, facets: &[Facet]) -> Self {
        let dimension = points.affine_dimension();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            if seen.insert(f.incident().to_vec()) {
                frontier.push(f.incident().to_vec());
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for face in &frontier {
                for f in facets {
                    let meet: Vec<usize> = face
                        .iter()
                        .copied()
                        .filter(|k| f.incident().binary_search(k).is_ok())
                        .collect();
                    if !meet.is_empty() && seen.insert(meet.clone()) {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }
        let mut faces = vec![Vec::new(); dimension];
        for face in seen {
            let r = affine_rank(&points.subset(&face)).expect("nonempty face");
            faces[r].push(face);
        }
        Self { dimension, faces }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Faces of dimension `k`, each a sorted list of point indices.
    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        &self.faces[k]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Points that are vertices of the hull.
    pub fn vertices(&self) -> Vec<usize> {
        self.faces.first().map_or_else(Vec::new, |v| v.iter().map(|f| f[0]).collect())
    }

    /// `Σ (−1)^i f_i = 1 − (−1)^d`.
    pub fn euler_holds(&self) -> bool {
        let d = self.dimension as i64;
        let lhs: i64 = self
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        lhs == 1 - if d % 2 == 0 { 1 } else { -1 }
    }
}
