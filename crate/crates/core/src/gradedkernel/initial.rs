use rayon::prelude::*;

use super::fiber::quadric_fibers;
use super::kernel::{kernel_at_degree, GradedKernelReport, KernelBasis};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, Rational, TRational, Valuation};
use crate::linalg::rank;
use crate::multipoly::{odd_subsets, Monomial, Polynomial, RingMap, Var};

fn min_tval(row: &[TRational]) -> Option<i64> {
    row.iter().filter_map(|c| c.tval().finite()).min()
}

/// Valuation of each image `φ(p_σ)`: the least t-order among its
/// coefficients.
pub fn image_weights(map: &RingMap<TRational>) -> Vec<i64> {
    map.images()
        .iter()
        .map(|p| {
            p.terms()
                .iter()
                .filter_map(|(_, c)| c.tval().finite())
                .min()
                .unwrap_or(0)
        })
        .collect()
}

/// The t → 0 limit of a Q(t)-subspace of a fiber, as a Q-subspace of the
/// same dimension. A term `c·m` has valuation `tval(c)` plus the weights of
/// the variables of `m`.
///
/// Each row is scaled to minimal valuation 0; the pivot is the first entry
/// of valuation 0 in the first remaining row. Eliminating with a unit pivot
/// keeps the other rows integral, so the initial forms of the final rows
/// are independent and span the limit.
pub fn initial_of_space(space: &KernelBasis<TRational>, weights: &[i64]) -> KernelBasis<Rational> {
    let shifts: Vec<i64> = space
        .fiber()
        .monomials()
        .iter()
        .map(|m| m.p_factors().expect("p-monomial").iter().map(|&i| weights[i]).sum())
        .collect();
    let mut rows: Vec<Vec<TRational>> = space
        .vectors()
        .iter()
        .map(|r| r.iter().zip(&shifts).map(|(c, &k)| c.shift(k)).collect())
        .collect();
    let mut done: Vec<Vec<TRational>> = Vec::with_capacity(rows.len());
    while !rows.is_empty() {
        for r in rows.iter_mut() {
            let k = min_tval(r).expect("basis rows are nonzero");
            if k != 0 {
                for c in r.iter_mut() {
                    *c = c.shift(-k);
                }
            }
        }
        let mut pivot_row = rows.remove(0);
        let j = pivot_row
            .iter()
            .position(|c| c.tval() == Valuation::Finite(0))
            .expect("normalized row has a unit entry");
        let inv = pivot_row[j].inverse();
        for c in pivot_row.iter_mut() {
            *c = c.times(&inv);
        }
        for r in rows.iter_mut() {
            if r[j].is_zero() {
                continue;
            }
            let f = r[j].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        rows.retain(|r| r.iter().any(|c| !c.is_zero()));
        done.push(pivot_row);
    }
    let initial: Vec<Vec<Rational>> = done
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| {
                    if c.tval() == Valuation::Finite(0) {
                        c.tinitial().expect("nonzero")
                    } else {
                        Rational::from_integer(0.into())
                    }
                })
                .collect()
        })
        .collect();
    KernelBasis::new(space.fiber().clone(), initial)
}

/// `initial_of_space` of the kernel of `map` at `fiber`.
pub fn initial_space(map: &RingMap<TRational>, fiber: &super::DegreeFiber) -> KernelBasis<Rational> {
    initial_of_space(&kernel_at_degree(map, fiber), &image_weights(map))
}

/// Initial spaces of every entry of a kernel report of `map`.
pub fn initial_report(map: &RingMap<TRational>, report: &GradedKernelReport<TRational>) -> GradedKernelReport<Rational> {
    let w = image_weights(map);
    let entries = report.entries().par_iter().map(|e| initial_of_space(e, &w)).collect();
    GradedKernelReport::new(format!("in({})", report.map_name()), report.degree_bound(), entries)
}

/// `p_σ ↦` the lowest-valuation term of `φ(p_σ)`, with coefficient its
/// initial value.
pub fn monomial_degeneration(map: &RingMap<TRational>) -> Result<RingMap<Rational>> {
    let mut images = Vec::with_capacity(32);
    for (s, img) in odd_subsets().iter().zip(map.images()) {
        let vals: Vec<i64> = img
            .terms()
            .iter()
            .map(|(_, c)| c.tval().finite().expect("stored coefficients are nonzero"))
            .collect();
        let Some(&low) = vals.iter().min() else {
            return Err(Error::ValuationTie(format!("{} (zero image)", Var::P(*s))));
        };
        let mut lowest = img.terms().iter().zip(&vals).filter(|(_, v)| **v == low);
        let ((m, c), _) = lowest.next().expect("minimum is attained");
        if lowest.next().is_some() {
            return Err(Error::ValuationTie(Var::P(*s).to_string()));
        }
        images.push(Polynomial::term(m.clone(), c.tinitial()?));
    }
    Ok(RingMap::new(format!("in({})", map.name()), images))
}

/// Degree-2 kernels of a monomial map.
pub fn toric_quadrics(monomap: &RingMap<Rational>) -> Result<GradedKernelReport<Rational>> {
    for (s, img) in odd_subsets().iter().zip(monomap.images()) {
        if img.len() != 1 {
            return Err(Error::NotMonomial(Var::P(*s).to_string()));
        }
    }
    let entries = quadric_fibers()
        .par_iter()
        .map(|f| kernel_at_degree(monomap, f))
        .collect();
    Ok(GradedKernelReport::new(monomap.name(), 2, entries))
}

/// Whether `f` has exactly two terms whose coefficients sum to zero.
pub fn is_binomial<C: Coeff>(f: &Polynomial<C>) -> bool {
    f.len() == 2 && f.terms()[0].1.plus(&f.terms()[1].1).is_zero()
}

/// Basis elements of `report` that are not binomials.
pub fn non_binomials<C: Coeff>(report: &GradedKernelReport<C>) -> Vec<Polynomial<C>> {
    report.polynomials().into_iter().filter(|f| !is_binomial(f)).collect()
}

/// Rank of the exponent matrix of a monomial map.
pub fn exponent_rank(monomap: &RingMap<Rational>) -> Result<usize> {
    let mut vars: Vec<Var> = Vec::new();
    let mut monos: Vec<&Monomial> = Vec::with_capacity(32);
    for (s, img) in odd_subsets().iter().zip(monomap.images()) {
        if img.len() != 1 {
            return Err(Error::NotMonomial(Var::P(*s).to_string()));
        }
        let m = &img.terms()[0].0;
        vars.extend(m.powers().iter().map(|(v, _)| *v));
        monos.push(m);
    }
    vars.sort();
    vars.dedup();
    let rows: Vec<Vec<Rational>> = monos
        .iter()
        .map(|m| {
            vars.iter()
                .map(|v| Rational::from_integer(m.exponent(*v).into()))
                .collect()
        })
        .collect();
    Ok(rank(rows, vars.len()))
}
