//! Degree-3 kernels and the count of degree-3 minimal generators.
//!
//! For a cubic fiber with `n` monomials let `P` be the products `p_τ · g` of
//! the degree-2 kernel with single variables. Then `span P ⊆ ker`, and for
//! the evaluation matrix `E` of the fiber monomials at sample points,
//! `ker ⊆ ker E`. Ranks over F_p of specializations never exceed the exact
//! ranks, so `n − rank_p(E) = rank_p(P)` proves `ker = span P`. Fibers where
//! the bound is not tight are computed exactly.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::fiber::{fibers, DegreeFiber};
use super::kernel::{kernel_at_degree, GradedKernelReport, KernelBasis};
use crate::exactnum::{Coeff, Rational};
use crate::linalg::{modp, rank};
use crate::multipoly::{odd_subsets, Monomial, RingMap, Var};

const SEED: u64 = 0x5eed_0003;
const ATTEMPTS: usize = 3;

#[derive(Clone, Debug)]
pub struct Degree3Analysis<C> {
    /// Σ over cubic fibers of `dim ker − dim span P`.
    pub surplus: usize,
    pub fibers: usize,
    /// Fibers settled by the rank sandwich alone.
    pub certified: usize,
    /// Fibers that needed exact kernel computation.
    pub exact_fallbacks: usize,
    /// Cubic kernels in fiber order, when requested.
    pub kernels: Vec<Option<KernelBasis<C>>>,
}

/// Values of the 32 images at random points modulo p, one table per attempt.
struct Samples {
    t0: Rational,
    /// `values[point][p-index]`, `None` if some image has a pole at `t0`.
    values: Option<Vec<Vec<u64>>>,
}

fn sample_images<C: Coeff>(map: &RingMap<C>, points: usize, rng: &mut ChaCha8Rng) -> Samples {
    let t0 = Rational::from_integer(rng.gen_range(2i64..1000).into());
    let vars: BTreeSet<Var> = map
        .images()
        .iter()
        .flat_map(|p| p.terms().iter().flat_map(|(m, _)| m.powers().iter().map(|(v, _)| *v)))
        .collect();
    let coeffs: Option<Vec<Vec<(u64, &Monomial)>>> = map
        .images()
        .iter()
        .map(|p| {
            p.terms()
                .iter()
                .map(|(m, c)| Some((modp::from_rational(&c.specialize(&t0)?)?, m)))
                .collect()
        })
        .collect();
    let Some(coeffs) = coeffs else {
        return Samples { t0, values: None };
    };
    let values = (0..points)
        .map(|_| {
            let point: Vec<(Var, u64)> = vars.iter().map(|v| (*v, rng.gen_range(1..modp::P))).collect();
            let value = |v: Var| point[point.binary_search_by_key(&v, |(x, _)| *x).unwrap()].1;
            coeffs
                .iter()
                .map(|terms| {
                    terms.iter().fold(0, |acc, (c, m)| {
                        let mv = m
                            .powers()
                            .iter()
                            .fold(*c, |a, (v, e)| modp::mul(a, modp::pow(value(*v), *e as u64)));
                        modp::add(acc, mv)
                    })
                })
                .collect()
        })
        .collect();
    Samples { t0, values: Some(values) }
}

/// Rows `p_τ · g` for the degree-2 kernel vectors `g`, in `fiber` coordinates.
fn product_rows<C: Coeff>(report: &GradedKernelReport<C>, fiber: &DegreeFiber) -> Vec<Vec<C>> {
    let mut rows = Vec::new();
    for s in odd_subsets() {
        let v = Monomial::var(Var::P(*s));
        let rest = fiber.degree() - v.multidegree().expect("p-variable");
        let Some(entry) = report.entry(rest) else {
            continue;
        };
        for g in entry.vectors() {
            let mut row = vec![C::zero(); fiber.len()];
            for (m, c) in entry.fiber().monomials().iter().zip(g) {
                if !c.is_zero() {
                    row[fiber.index_of(&m.mul(&v)).expect("product stays in fiber")] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    rows
}

enum Outcome<C> {
    Certified(Option<KernelBasis<C>>),
    Exact { surplus: usize, kernel: KernelBasis<C> },
}

fn analyse_fiber<C: Coeff>(
    map: &RingMap<C>,
    report: &GradedKernelReport<C>,
    fiber: &DegreeFiber,
    samples: &[Samples],
    want_kernel: bool,
) -> Outcome<C> {
    let products = product_rows(report, fiber);
    let n = fiber.len();
    let factors: Vec<Vec<usize>> = fiber
        .monomials()
        .iter()
        .map(|m| m.p_factors().expect("p-monomial"))
        .collect();
    for s in samples {
        let Some(values) = &s.values else { continue };
        let e: Vec<Vec<u64>> = values[..n + 2]
            .iter()
            .map(|vals| {
                factors
                    .iter()
                    .map(|f| f.iter().fold(1, |a, &i| modp::mul(a, vals[i])))
                    .collect()
            })
            .collect();
        let p: Option<Vec<Vec<u64>>> = products
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| modp::from_rational(&c.specialize(&s.t0)?))
                    .collect()
            })
            .collect();
        let Some(p) = p else { continue };
        if n - modp::rank(e) == modp::rank(p) {
            return Outcome::Certified(want_kernel.then(|| KernelBasis::new(fiber.clone(), products)));
        }
    }
    let kernel = kernel_at_degree(map, fiber);
    let spanned = rank(products, n);
    Outcome::Exact {
        surplus: kernel.dimension() - spanned,
        kernel,
    }
}

/// Cubic kernels of `map` given its degree-2 report.
pub fn degree3_analysis<C: Coeff>(
    map: &RingMap<C>,
    report: &GradedKernelReport<C>,
    want_kernels: bool,
) -> Degree3Analysis<C> {
    let fs = fibers(3);
    let max = fs.iter().map(DegreeFiber::len).max().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples: Vec<Samples> = (0..ATTEMPTS).map(|_| sample_images(map, max + 2, &mut rng)).collect();
    let outcomes: Vec<Outcome<C>> = fs
        .par_iter()
        .map(|f| analyse_fiber(map, report, f, &samples, want_kernels))
        .collect();
    let mut a = Degree3Analysis {
        surplus: 0,
        fibers: fs.len(),
        certified: 0,
        exact_fallbacks: 0,
        kernels: Vec::with_capacity(fs.len()),
    };
    for o in outcomes {
        match o {
            Outcome::Certified(k) => {
                a.certified += 1;
                a.kernels.push(k);
            }
            Outcome::Exact { surplus, kernel } => {
                a.exact_fallbacks += 1;
                a.surplus += surplus;
                a.kernels.push(want_kernels.then_some(kernel));
            }
        }
    }
    a
}

/// Number of degree-3 kernel dimensions not generated by the degree-2
/// kernel; 0 means no cubic minimal generators.
pub fn degree3_minimality<C: Coeff>(map: &RingMap<C>, report: &GradedKernelReport<C>) -> usize {
    degree3_analysis(map, report, false).surplus
}
