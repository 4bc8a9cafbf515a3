//! Solving `J = I + u*I` for `u`, where `(u*f)(p) = f(u_σ p_σ)`.
//!
//! For every degree-2 fiber, `u*g` must lie in `J` for each I-generator `g`,
//! which gives one equation `Σ_m λ_m c_m u^m = 0` per functional `λ`
//! vanishing on `J`. A fiber of `p_σ p_τ` has `|σ| + |τ|` constant, so the
//! equations come in layers:
//!
//! * `|σ|+|τ| = 4`: linear in the triple unknowns once the singletons are
//!   fixed to 1 (the grading torus allows this);
//! * `6`: linear in the five-set unknowns plus a quadratic form in triples;
//! * `8`: bilinear in triples and five-sets.
//!
//! `u = 1` always satisfies the equations, so the linear solutions for the
//! triples form a space containing the all-ones vector. Eliminating the
//! five-sets from the six-layer leaves quadrics on that space. A plane gives
//! a line meeting them in one more point; a 4-space whose quadrics cut out a
//! twisted cubic is parametrized exactly through their linear syzygies. The
//! five-sets then solve a linear system. Solutions need not be unique beyond
//! the grading torus, so candidates are verified fiber by fiber.
//!
//! A fiber where some J-vector uses a monomial outside the support of the
//! I-space can never satisfy `J = I + u*I`, since scaling preserves supports.
//! Such fibers contribute no equations and are reported by the verifier.
//!
//! The `_with` variants take the summand being scaled separately, solving
//! `J = B + u*S` for reports `B` and `S` over the same fibers.

use std::fmt;

use serde::Serialize;

use super::kernel::{GradedKernelReport, KernelBasis};
use crate::exactnum::Coeff;
use crate::linalg::Echelon;
use crate::multipoly::{odd_subsets, Multidegree, Subset, Var};

/// One nonzero scalar per p-variable, in canonical subset order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalingVector<C> {
    components: Vec<C>,
}

impl<C: Coeff> ScalingVector<C> {
    /// `None` if some component is zero or the length is not 32.
    pub fn new(components: Vec<C>) -> Option<Self> {
        (components.len() == 32 && components.iter().all(|c| !c.is_zero())).then_some(Self { components })
    }

    pub fn ones() -> Self {
        Self {
            components: vec![C::one(); 32],
        }
    }

    pub fn components(&self) -> &[C] {
        &self.components
    }

    pub fn get(&self, s: Subset) -> &C {
        &self.components[s.p_index().expect("odd subset")]
    }

    pub fn is_ones(&self) -> bool {
        self.components.iter().all(C::is_one)
    }

    /// `u*` applied to a vector over the fiber of `basis`.
    pub fn scale_vector(&self, basis: &KernelBasis<C>, v: &[C]) -> Vec<C> {
        basis
            .fiber()
            .monomials()
            .iter()
            .zip(v)
            .map(|(m, c)| {
                m.p_factors()
                    .expect("p-monomial")
                    .iter()
                    .fold(c.clone(), |acc, &i| acc.times(&self.components[i]))
            })
            .collect()
    }

    /// `(name, value)` pairs such as `("p_123", "t^2")`.
    pub fn named(&self) -> Vec<(String, String)> {
        odd_subsets()
            .iter()
            .zip(&self.components)
            .map(|(s, c)| (Var::P(*s).to_string(), c.to_string()))
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ScalingFailure {
    /// First multidegree at which `J = I + u*I` fails for the best candidate.
    pub degree: Multidegree,
    pub reason: String,
    /// Number of fibers violated by that candidate.
    pub violated_fibers: usize,
}

impl fmt::Display for ScalingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J = I + u*I fails at {}: {}", self.degree, self.reason)?;
        if self.violated_fibers > 1 {
            write!(f, " ({} fibers violated)", self.violated_fibers)?;
        }
        Ok(())
    }
}

impl std::error::Error for ScalingFailure {}

/// `Σ coeff · u_a u_b` over canonical p-indices.
#[derive(Clone, Debug)]
struct Equation<C> {
    terms: Vec<(usize, usize, C)>,
}

fn card(i: usize) -> usize {
    odd_subsets()[i].len()
}

fn equations<C: Coeff>(
    base: &GradedKernelReport<C>,
    scaled: &GradedKernelReport<C>,
    target: &GradedKernelReport<C>,
) -> Vec<Equation<C>> {
    let mut out = Vec::new();
    for je in target.of_p_degree(2) {
        let Some(ie) = scaled.entry(je.degree()) else {
            continue;
        };
        if !within_support(&[base.entry(je.degree()), Some(ie)], je) {
            continue;
        }
        let annihilator = je.echelon().nullspace();
        let factors: Vec<Vec<usize>> = je
            .fiber()
            .monomials()
            .iter()
            .map(|m| m.p_factors().expect("p-monomial"))
            .collect();
        for g in ie.vectors() {
            for lam in &annihilator {
                let terms: Vec<(usize, usize, C)> = factors
                    .iter()
                    .zip(g.iter().zip(lam))
                    .filter(|(_, (c, l))| !c.is_zero() && !l.is_zero())
                    .map(|(f, (c, l))| (f[0], f[1], c.times(l)))
                    .collect();
                if !terms.is_empty() {
                    out.push(Equation { terms });
                }
            }
        }
    }
    out
}

/// Whether every J-vector is supported on monomials used by the given
/// spaces; otherwise no scaling can reach J at this fiber.
fn within_support<C: Coeff>(spaces: &[Option<&KernelBasis<C>>], je: &KernelBasis<C>) -> bool {
    let support: Vec<bool> = (0..je.fiber().len())
        .map(|k| spaces.iter().flatten().any(|e| e.vectors().iter().any(|v| !v[k].is_zero())))
        .collect();
    je.vectors()
        .iter()
        .all(|v| v.iter().zip(&support).all(|(c, s)| *s || c.is_zero()))
}

fn unknown_index(i: usize, of_card: usize) -> Option<usize> {
    // Canonical order lists all 6 singletons, then 20 triples, then 6 five-sets.
    match (card(i), of_card) {
        (3, 3) => Some(i - 6),
        (5, 5) => Some(i - 26),
        _ => None,
    }
}

/// Solutions of `[A | c] (x, 1) = 0` with every free variable set to 1.
fn solve_affine<C: Coeff>(rows: Vec<Vec<C>>, n: usize) -> Option<Vec<C>> {
    let e = Echelon::from_rows(n + 1, rows);
    if e.pivots().last() == Some(&n) {
        return None;
    }
    let mut x = vec![C::one(); n];
    for (r, &p) in e.rows().iter().zip(e.pivots()) {
        let mut v = r[n].negated();
        for j in (p + 1)..n {
            if !e.pivots().contains(&j) && !r[j].is_zero() {
                v = v.minus(&r[j]);
            }
        }
        x[p] = v;
    }
    Some(x)
}

/// Candidate triple vectors other than the all-ones vector, in a fixed order.
fn triple_candidates<C: Coeff>(eqs: &[Equation<C>]) -> Vec<Vec<C>> {
    let mut lin = Echelon::new(20);
    for e in eqs.iter().filter(|e| layer(e) == 4) {
        let mut row = vec![C::zero(); 20];
        for (a, b, c) in &e.terms {
            let Some(t) = unknown_index(*a, 3).or(unknown_index(*b, 3)) else {
                return Vec::new();
            };
            row[t] = row[t].plus(c);
        }
        lin.insert(row);
    }
    // Basis of the linear solutions with the all-ones vector first.
    let ones = vec![C::one(); 20];
    let mut span = Echelon::from_rows(20, [ones.clone()]);
    let mut basis = vec![ones];
    for v in lin.nullspace() {
        if span.insert(v.clone()) {
            basis.push(v);
        }
    }
    let quadrics = triple_quadrics(eqs, &basis);
    let points = match basis.len() {
        1 => Vec::new(),
        2 => line_points(&quadrics),
        4 => twisted_cubic_points(&quadrics),
        _ => Vec::new(),
    };
    points
        .into_iter()
        .map(|x| {
            (0..20)
                .map(|t| {
                    basis
                        .iter()
                        .zip(&x)
                        .fold(C::zero(), |acc, (b, c)| acc.plus(&b[t].times(c)))
                })
                .collect::<Vec<C>>()
        })
        .filter(|u| u.iter().all(|c| !c.is_zero()) && !span_of_ones(u))
        .map(|u| {
            let n = u[0].inverse();
            u.iter().map(|x| x.times(&n)).collect()
        })
        .collect()
}

fn span_of_ones<C: Coeff>(u: &[C]) -> bool {
    u.iter().all(|c| *c == u[0])
}

fn layer<C>(e: &Equation<C>) -> usize {
    card(e.terms[0].0) + card(e.terms[0].1)
}

/// Index of `x_a x_b` among the quadratic monomials in `k` variables.
fn quad_index(a: usize, b: usize, k: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * k - a * (a + 1) / 2 + b
}

/// Quadrics in the coordinates `x` of `u_triples = Σ x_k basis_k` from the
/// six-layer equations with the five-set unknowns eliminated.
fn triple_quadrics<C: Coeff>(eqs: &[Equation<C>], basis: &[Vec<C>]) -> Vec<Vec<C>> {
    let k = basis.len();
    let nq = k * (k + 1) / 2;
    let mut six = Echelon::new(6 + nq);
    for e in eqs.iter().filter(|e| layer(e) == 6) {
        let mut row = vec![C::zero(); 6 + nq];
        for (a, b, c) in &e.terms {
            if let Some(f) = unknown_index(*a, 5).or(unknown_index(*b, 5)) {
                row[f] = row[f].plus(c);
                continue;
            }
            let (Some(i), Some(j)) = (unknown_index(*a, 3), unknown_index(*b, 3)) else {
                continue;
            };
            for x in 0..k {
                for y in 0..k {
                    let add = c.times(&basis[x][i].times(&basis[y][j]));
                    if !add.is_zero() {
                        let at = 6 + quad_index(x, y, k);
                        row[at] = row[at].plus(&add);
                    }
                }
            }
        }
        six.insert(row);
    }
    six.rows()
        .iter()
        .zip(six.pivots())
        .filter(|(_, &p)| p >= 6)
        .map(|(r, _)| r[6..].to_vec())
        .collect()
}

fn eval_quadric<C: Coeff>(q: &[C], x: &[C]) -> C {
    let k = x.len();
    let mut acc = C::zero();
    for a in 0..k {
        for b in a..k {
            let c = &q[quad_index(a, b, k)];
            if !c.is_zero() {
                acc = acc.plus(&c.times(&x[a].times(&x[b])));
            }
        }
    }
    acc
}

/// On the line through `(1, 0)` and `(0, 1)`, every quadric vanishing at
/// `(1, 0)` reads `β(αS + βq(z))`; the common second zero, if any.
fn line_points<C: Coeff>(quadrics: &[Vec<C>]) -> Vec<Vec<C>> {
    let mut ratio: Option<(C, C)> = None;
    for q in quadrics {
        let (s, qz) = (q[quad_index(0, 1, 2)].clone(), q[quad_index(1, 1, 2)].clone());
        if s.is_zero() && qz.is_zero() {
            continue;
        }
        match &ratio {
            None => ratio = Some((s, qz)),
            Some((s0, q0)) if !s0.times(&qz).minus(&q0.times(&s)).is_zero() => return Vec::new(),
            Some(_) => {}
        }
    }
    match ratio {
        Some((s, qz)) if !s.is_zero() => vec![vec![qz.negated(), s]],
        _ => Vec::new(),
    }
}

/// Rational points of the twisted cubic cut out by three quadrics in four
/// variables. Its two linear syzygies form a 3×2 matrix `N` of linear forms
/// with `rank N(x) ≤ 1` exactly on the curve, so each `(a : b)` gives the
/// point where `a·N₁ + b·N₂` vanishes.
fn twisted_cubic_points<C: Coeff>(quadrics: &[Vec<C>]) -> Vec<Vec<C>> {
    let k = 4;
    if quadrics.len() != 3 {
        return Vec::new();
    }
    let monos: Vec<[usize; 3]> = (0..k)
        .flat_map(|a| (a..k).flat_map(move |b| (b..k).map(move |c| [a, b, c])))
        .collect();
    let cubic = |mut m: [usize; 3]| {
        m.sort();
        monos.binary_search(&m).expect("cubic monomial")
    };
    // Column (i, x) is x · Q_i expanded in cubic monomials.
    let mut cols: Vec<Vec<C>> = Vec::new();
    for q in quadrics {
        for x in 0..k {
            let mut col = vec![C::zero(); monos.len()];
            for a in 0..k {
                for b in a..k {
                    let c = &q[quad_index(a, b, k)];
                    if !c.is_zero() {
                        let at = cubic([a, b, x]);
                        col[at] = col[at].plus(c);
                    }
                }
            }
            cols.push(col);
        }
    }
    let rows: Vec<Vec<C>> = (0..monos.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let syz = Echelon::from_rows(cols.len(), rows).nullspace();
    if syz.len() != 2 {
        return Vec::new();
    }
    let params: [(i64, i64); 8] = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)];
    params
        .iter()
        .filter_map(|&(a, b)| {
            let (a, b) = (int::<C>(a), int::<C>(b));
            let forms: Vec<Vec<C>> = (0..3)
                .map(|i| {
                    (0..k)
                        .map(|x| a.times(&syz[0][i * k + x]).plus(&b.times(&syz[1][i * k + x])))
                        .collect()
                })
                .collect();
            let pts = Echelon::from_rows(k, forms).nullspace();
            (pts.len() == 1).then(|| pts[0].clone())
        })
        .filter(|x| quadrics.iter().all(|q| eval_quadric(q, x).is_zero()))
        .collect()
}

fn int<C: Coeff>(n: i64) -> C {
    C::from_rational(crate::exactnum::Rational::from_integer(n.into()))
}

fn solve_five_sets<C: Coeff>(eqs: &[Equation<C>], triples: &[C]) -> Option<Vec<C>> {
    let value = |i: usize| match card(i) {
        1 => Some(C::one()),
        3 => Some(triples[i - 6].clone()),
        _ => None,
    };
    let mut rows = Vec::new();
    for e in eqs {
        let mut row = vec![C::zero(); 7];
        for (a, b, c) in &e.terms {
            match (value(*a), value(*b)) {
                (Some(x), Some(y)) => row[6] = row[6].plus(&c.times(&x.times(&y))),
                (Some(x), None) => {
                    let f = unknown_index(*b, 5)?;
                    row[f] = row[f].plus(&c.times(&x));
                }
                (None, Some(y)) => {
                    let f = unknown_index(*a, 5)?;
                    row[f] = row[f].plus(&c.times(&y));
                }
                (None, None) => return None,
            }
        }
        if row[..6].iter().any(|c| !c.is_zero()) || !row[6].is_zero() {
            rows.push(row);
        }
    }
    solve_affine(rows, 6)
}

fn scaling_degrees<C: Coeff>(reports: [&GradedKernelReport<C>; 3]) -> Vec<Multidegree> {
    let mut degrees: Vec<Multidegree> = reports
        .iter()
        .flat_map(|r| r.of_p_degree(2))
        .map(KernelBasis::degree)
        .collect();
    degrees.sort();
    degrees.dedup();
    degrees
}

fn check_fiber<C: Coeff>(
    [base, scaled, target]: [&GradedKernelReport<C>; 3],
    u: &ScalingVector<C>,
    d: Multidegree,
) -> Option<ScalingFailure> {
    let fail = |reason: String| {
        Some(ScalingFailure {
            degree: d,
            reason,
            violated_fibers: 1,
        })
    };
    let (Some(be), Some(se), Some(je)) = (base.entry(d), scaled.entry(d), target.entry(d)) else {
        return fail("the I-space, the scaled space and the J-space are not all nonzero".into());
    };
    let mut sum = be.echelon();
    for v in se.vectors() {
        sum.insert(u.scale_vector(se, v));
    }
    if sum.same_space(&je.echelon()) {
        return None;
    }
    if !be.vectors().iter().all(|v| je.contains_vector(v)) {
        return fail("the I-space is not contained in the J-space".into());
    }
    if !se.vectors().iter().all(|v| je.contains_vector(&u.scale_vector(se, v))) {
        return fail("the scaled space is not contained in the J-space".into());
    }
    if !within_support(&[Some(be), Some(se)], je) {
        return fail(format!(
            "dim(I + u*I) = {} but dim J = {}; J uses monomials outside the supports, which no scaling reaches",
            sum.rank(),
            je.dimension()
        ));
    }
    fail(format!("dim(I + u*I) = {} but dim J = {}", sum.rank(), je.dimension()))
}

/// Every degree-2 fiber where `J = base + u*scaled` fails, in degree order.
pub fn scaling_defects_with<C: Coeff>(
    base: &GradedKernelReport<C>,
    scaled: &GradedKernelReport<C>,
    target: &GradedKernelReport<C>,
    u: &ScalingVector<C>,
) -> Vec<ScalingFailure> {
    let reports = [base, scaled, target];
    scaling_degrees(reports)
        .into_iter()
        .filter_map(|d| check_fiber(reports, u, d))
        .collect()
}

/// Every degree-2 fiber where `J = I + u*I` fails, in degree order.
pub fn scaling_defects<C: Coeff>(
    i_report: &GradedKernelReport<C>,
    j_report: &GradedKernelReport<C>,
    u: &ScalingVector<C>,
) -> Vec<ScalingFailure> {
    scaling_defects_with(i_report, i_report, j_report, u)
}

/// Checks `J = base + u*scaled` at every degree-2 fiber of the reports.
pub fn verify_scaling_with<C: Coeff>(
    base: &GradedKernelReport<C>,
    scaled: &GradedKernelReport<C>,
    target: &GradedKernelReport<C>,
    u: &ScalingVector<C>,
) -> Result<(), ScalingFailure> {
    let reports = [base, scaled, target];
    match scaling_degrees(reports).into_iter().find_map(|d| check_fiber(reports, u, d)) {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

/// Checks `J = I + u*I` at every degree-2 fiber of either report.
pub fn verify_scaling<C: Coeff>(
    i_report: &GradedKernelReport<C>,
    j_report: &GradedKernelReport<C>,
    u: &ScalingVector<C>,
) -> Result<(), ScalingFailure> {
    verify_scaling_with(i_report, i_report, j_report, u)
}

/// Finds `u` with `J = I + u*I` in every degree-2 fiber.
pub fn solve_scaling<C: Coeff>(
    i_report: &GradedKernelReport<C>,
    j_report: &GradedKernelReport<C>,
) -> Result<ScalingVector<C>, ScalingFailure> {
    solve_scaling_with(i_report, i_report, j_report)
}

/// Finds `u` with `J = base + u*scaled` in every degree-2 fiber.
///
/// The singletons and the first triple are normalized to 1. Any remaining
/// freedom (a point on the triple curve, free five-set components) is fixed
/// by a short deterministic list of choices. On failure the reported fiber
/// is the first violation of the candidate with the fewest violations.
pub fn solve_scaling_with<C: Coeff>(
    base: &GradedKernelReport<C>,
    scaled: &GradedKernelReport<C>,
    target: &GradedKernelReport<C>,
) -> Result<ScalingVector<C>, ScalingFailure> {
    let ones = ScalingVector::ones();
    let mut best = scaling_defects_with(base, scaled, target, &ones);
    if best.is_empty() {
        return Ok(ones);
    }
    let eqs = equations(base, scaled, target);
    for triples in triple_candidates(&eqs) {
        let Some(fives) = solve_five_sets(&eqs, &triples) else {
            continue;
        };
        let mut comps = vec![C::one(); 6];
        comps.extend(triples);
        comps.extend(fives);
        let Some(u) = ScalingVector::new(comps) else {
            continue;
        };
        let defects = scaling_defects_with(base, scaled, target, &u);
        if defects.is_empty() {
            return Ok(u);
        }
        if defects.len() < best.len() {
            best = defects;
        }
    }
    let violated = best.len();
    let mut first = best.swap_remove(0);
    first.violated_fibers = violated;
    Err(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::gradedkernel::generator_profile;
    use crate::presets::generic_minors;

    fn synthetic(i: &GradedKernelReport<Rational>, u0: &ScalingVector<Rational>) -> GradedKernelReport<Rational> {
        let entries = i
            .entries()
            .iter()
            .map(|e| {
                let mut v = e.vectors().to_vec();
                v.extend(e.vectors().iter().map(|g| u0.scale_vector(e, g)));
                KernelBasis::new(e.fiber().clone(), v)
            })
            .collect();
        GradedKernelReport::new("J'", 2, entries)
    }

    #[test]
    fn identical_reports_give_ones() {
        let i = generator_profile(&generic_minors(), 2);
        assert!(solve_scaling(&i, &i).unwrap().is_ones());
    }

    #[test]
    fn recovers_a_planted_scaling() {
        let i = generator_profile(&generic_minors(), 2);
        let comps = (0..32).map(|k| Rational::from_integer((k * 7 % 11 + 2).into())).collect();
        let u0 = ScalingVector::new(comps).unwrap();
        let j = synthetic(&i, &u0);
        assert_eq!(j.total_dimension(), 132);
        let u = solve_scaling(&i, &j).unwrap();
        assert!(!u.is_ones());
        assert!(verify_scaling(&i, &j, &u).is_ok());
        assert!(scaling_defects(&i, &j, &u).is_empty());
    }

    #[test]
    fn ones_fail_on_a_planted_scaling() {
        let i = generator_profile(&generic_minors(), 2);
        let comps = (0..32).map(|k| Rational::from_integer((k % 5 + 1).into())).collect();
        let u0 = ScalingVector::new(comps).unwrap();
        let j = synthetic(&i, &u0);
        let f = verify_scaling(&i, &j, &ScalingVector::ones()).unwrap_err();
        assert!(j.entry(f.degree).is_some());
        assert!(f.reason.contains("dim(I + u*I)"));
    }

    #[test]
    fn rejects_zero_components() {
        let mut c = vec![Rational::from_integer(1.into()); 32];
        c[3] = Rational::from_integer(0.into());
        assert!(ScalingVector::new(c).is_none());
        assert!(ScalingVector::<Rational>::new(vec![]).is_none());
    }
}
