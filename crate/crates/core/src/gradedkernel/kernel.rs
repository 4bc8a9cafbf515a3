use std::collections::HashMap;

use rayon::prelude::*;

use super::fiber::{fibers, DegreeFiber};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, FieldTag};
use crate::linalg::Echelon;
use crate::multipoly::{Monomial, Multidegree, Polynomial, RingMap};

/// A canonical basis (reduced row-echelon form over the fiber's monomial
/// order) of a subspace of one fiber.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelBasis<C> {
    fiber: DegreeFiber,
    vectors: Vec<Vec<C>>,
}

impl<C: Coeff> KernelBasis<C> {
    /// Echelonizes `vectors`; they need not be independent.
    pub fn new(fiber: DegreeFiber, vectors: Vec<Vec<C>>) -> Self {
        let vectors = crate::linalg::rref(vectors, fiber.len());
        Self { fiber, vectors }
    }

    pub fn fiber(&self) -> &DegreeFiber {
        &self.fiber
    }

    pub fn degree(&self) -> Multidegree {
        self.fiber.degree()
    }

    pub fn vectors(&self) -> &[Vec<C>] {
        &self.vectors
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.vectors.iter().map(|v| self.fiber.polynomial(v)).collect()
    }

    pub fn echelon(&self) -> Echelon<C> {
        Echelon::from_rows(self.fiber.len(), self.vectors.iter().cloned())
    }

    pub fn contains_vector(&self, v: &[C]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool> {
        Ok(self.contains_vector(&self.fiber.coordinates(f)?))
    }

    /// Equality as subspaces (the stored bases are canonical).
    pub fn same_space(&self, other: &Self) -> bool {
        self.fiber == other.fiber && self.vectors == other.vectors
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> KernelBasis<D> {
        let vectors = self.vectors.iter().map(|v| v.iter().map(&f).collect()).collect();
        KernelBasis::new(self.fiber.clone(), vectors)
    }
}

/// Images of fiber monomials as coefficient rows indexed by target monomial.
fn image_rows<C: Coeff>(map: &RingMap<C>, fiber: &DegreeFiber) -> Vec<Vec<C>> {
    let n = fiber.len();
    let mut rows: HashMap<Monomial, Vec<C>> = HashMap::new();
    for (j, m) in fiber.monomials().iter().enumerate() {
        let img = map.image_of_factors(&m.p_factors().expect("fiber of p-monomials"));
        for (tm, c) in img.into_terms() {
            rows.entry(tm).or_insert_with(|| vec![C::zero(); n])[j] = c;
        }
    }
    let mut rows: Vec<(Monomial, Vec<C>)> = rows.into_iter().collect();
    // Sparse rows first keeps the echelon entries small.
    rows.sort_by(|a, b| {
        let za = a.1.iter().filter(|c| !c.is_zero()).count();
        let zb = b.1.iter().filter(|c| !c.is_zero()).count();
        za.cmp(&zb).then_with(|| b.0.cmp(&a.0))
    });
    rows.into_iter().map(|(_, r)| r).collect()
}

/// The kernel of `map` restricted to one fiber.
pub fn kernel_at_degree<C: Coeff>(map: &RingMap<C>, fiber: &DegreeFiber) -> KernelBasis<C> {
    let mut e = Echelon::new(fiber.len());
    for row in image_rows(map, fiber) {
        e.insert(row);
        if e.is_full() {
            break;
        }
    }
    KernelBasis {
        fiber: fiber.clone(),
        vectors: e.nullspace(),
    }
}

/// Per-multidegree kernels of a ring map up to a p-degree bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedKernelReport<C> {
    map: String,
    degree_bound: u32,
    entries: Vec<KernelBasis<C>>,
}

impl<C: Coeff> GradedKernelReport<C> {
    /// Drops zero-dimensional entries and sorts by (p-degree, multidegree).
    pub fn new(map: impl Into<String>, degree_bound: u32, entries: Vec<KernelBasis<C>>) -> Self {
        let mut entries: Vec<KernelBasis<C>> = entries.into_iter().filter(|e| e.dimension() > 0).collect();
        entries.sort_by_key(|e| e.degree());
        Self {
            map: map.into(),
            degree_bound,
            entries,
        }
    }

    pub fn map_name(&self) -> &str {
        &self.map
    }

    pub fn field(&self) -> FieldTag {
        C::FIELD
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn entries(&self) -> &[KernelBasis<C>] {
        &self.entries
    }

    pub fn total_dimension(&self) -> usize {
        self.entries.iter().map(KernelBasis::dimension).sum()
    }

    pub fn entry(&self, d: Multidegree) -> Option<&KernelBasis<C>> {
        self.entries
            .binary_search_by_key(&d, |e| e.degree())
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn dimension_at(&self, d: Multidegree) -> usize {
        self.entry(d).map_or(0, KernelBasis::dimension)
    }

    /// Entries of the given p-degree.
    pub fn of_p_degree(&self, k: i32) -> impl Iterator<Item = &KernelBasis<C>> {
        self.entries.iter().filter(move |e| e.degree().p_degree() == k)
    }

    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.entries.iter().flat_map(KernelBasis::polynomials).collect()
    }

    /// Whether `f` lies in the reported space at its multidegree.
    pub fn membership(&self, f: &Polynomial<C>) -> Result<bool> {
        let Some(d) = f.multidegree()? else {
            return Ok(true);
        };
        let k = d.p_degree() as u32;
        if k > self.degree_bound {
            return Err(Error::BeyondDegreeBound {
                degree: k,
                bound: self.degree_bound,
            });
        }
        match self.entry(d) {
            Some(e) => e.contains(f),
            None => Ok(false),
        }
    }

    /// Keeps only the entries accepted by `keep`.
    pub fn filtered(&self, keep: impl Fn(&KernelBasis<C>) -> bool) -> Self {
        Self {
            map: self.map.clone(),
            degree_bound: self.degree_bound,
            entries: self.entries.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }
}

/// Kernels over every fiber of p-degree `1..=d`. Degree 3 goes through the
/// certified product construction of [`super::minimality`].
pub fn generator_profile<C: Coeff>(map: &RingMap<C>, d: u32) -> GradedKernelReport<C> {
    let mut entries: Vec<KernelBasis<C>> = Vec::new();
    for k in 1..=d.min(2) {
        let fs = fibers(k);
        let ks: Vec<KernelBasis<C>> = fs.par_iter().map(|f| kernel_at_degree(map, f)).collect();
        entries.extend(ks);
    }
    let mut report = GradedKernelReport::new(map.name(), d.min(2), entries);
    if d >= 3 {
        let cubic = super::minimality::degree3_analysis(map, &report, true);
        let mut entries = report.entries.clone();
        entries.extend(cubic.kernels.into_iter().flatten());
        report = GradedKernelReport::new(map.name(), 3, entries);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::multipoly::{minor_image_map, MatrixSpec, Var};

    #[test]
    fn single_square_has_no_kernel() {
        let phi = minor_image_map::<Rational>(&MatrixSpec::Generic);
        let f = DegreeFiber::new(
            Multidegree::new([2, 2, 0, 0, 0, 0, 0]),
            vec![Monomial::from_powers([(Var::p(&[1]), 2)])],
        );
        assert_eq!(kernel_at_degree(&phi, &f).dimension(), 0);
    }
}
