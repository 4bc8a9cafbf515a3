use coxideal::exactnum::{rational, Coeff, Rational, TPoly, TRational};
use coxideal::gradedkernel::{kernel_at_degree, quadric_fibers, DegreeFiber};
use coxideal::multipoly::{
    det_bareiss, determinant, generic_skew, odd_subsets, pfaffian, Monomial, Polynomial, Var,
};
use coxideal::polytope::{affine_rank, hull, FaceLattice, PointConfig};
use coxideal::presets::minors_at;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| rational(n, d))
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0u32..4, small_rational()), 0..4).prop_map(TPoly::from_terms)
}

fn trational() -> impl Strategy<Value = TRational> {
    (tpoly(), tpoly().prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(n, d)| TRational::new(n, d).unwrap())
}

fn nonzero_trational() -> impl Strategy<Value = TRational> {
    trational().prop_filter("nonzero", |x| !x.is_zero())
}

fn p_var() -> impl Strategy<Value = Var> {
    (0usize..32).prop_map(|i| Var::P(odd_subsets()[i]))
}

fn p_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(p_var(), 1..3).prop_map(Monomial::product_of)
}

fn p_poly() -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec((p_monomial(), small_rational()), 1..3).prop_map(Polynomial::from_terms)
}

fn point_matrix() -> impl Strategy<Value = [[TRational; 6]; 2]> {
    // Columns (1, a_j) with distinct a_j have nonzero 2×2 minors.
    prop::collection::btree_set(-20i64..20, 6).prop_map(|set| {
        let a: Vec<i64> = set.into_iter().collect();
        [
            std::array::from_fn(|_| TRational::one()),
            std::array::from_fn(|j| TRational::from_int(a[j])),
        ]
    })
}

/// Pfaffian as the signed sum over perfect matchings.
fn matching_pfaffian(a: &[Vec<Rational>], idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    let first = idx[0];
    let mut acc = Rational::zero();
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx.iter().enumerate().filter(|(j, _)| *j != 0 && *j != k).map(|(_, &v)| v).collect();
        let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
        acc += sign * &a[first][idx[k]] * matching_pfaffian(a, &rest);
    }
    acc
}

fn skew_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(small_rational(), n * (n - 1) / 2).prop_map(move |vals| {
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut it = vals.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                m[i][j] = v.clone();
                m[j][i] = -v;
            }
        }
        m
    })
}

fn constant_matrix(m: &[Vec<Rational>]) -> Vec<Vec<Polynomial<Rational>>> {
    m.iter()
        .map(|r| r.iter().map(|c| Polynomial::constant(c.clone())).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in trational(), b in trational(), c in trational()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.times(&a.inverse()).is_one());
        }
    }

    #[test]
    fn valuation_laws(a in nonzero_trational(), b in nonzero_trational()) {
        let (va, vb) = (a.tval().finite().unwrap(), b.tval().finite().unwrap());
        prop_assert_eq!(a.times(&b).tval().finite(), Some(va + vb));
        if let Some(s) = a.plus(&b).tval().finite() {
            prop_assert!(s >= va.min(vb));
        }
        prop_assert_eq!(a.inverse().tval().finite(), Some(-va));
        prop_assert_eq!(
            a.times(&b).tinitial().unwrap(),
            a.tinitial().unwrap() * b.tinitial().unwrap()
        );
    }

    #[test]
    fn text_round_trip(a in trational(), f in p_poly()) {
        prop_assert_eq!(TRational::parse(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(Polynomial::<Rational>::parse(&f.to_string()).unwrap(), f.clone());
        let g = f.map_coeffs(|c| TRational::from_rational(c.clone()).times(&a));
        prop_assert_eq!(Polynomial::<TRational>::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn multidegree_is_additive(m in p_monomial(), n in p_monomial()) {
        prop_assert_eq!(
            m.mul(&n).multidegree().unwrap(),
            m.multidegree().unwrap() + n.multidegree().unwrap()
        );
    }

    #[test]
    fn determinant_alternates(m in prop::collection::vec(prop::collection::vec(small_rational(), 4), 4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let mut swapped = m.clone();
        for row in swapped.iter_mut() {
            row.swap(i, j);
        }
        prop_assert_eq!(det_bareiss(swapped), -det_bareiss(m.clone()));
        let symbolic = determinant(&constant_matrix(&m));
        prop_assert_eq!(symbolic.as_constant().unwrap_or_else(Rational::zero), det_bareiss(m));
    }

    #[test]
    fn pfaffian_matches_matchings_and_squares_to_det(a in skew_matrix(6)) {
        let rows: Vec<usize> = (0..6).collect();
        let pf = pfaffian(&constant_matrix(&a), &rows).unwrap();
        let pf = pf.as_constant().unwrap_or_else(Rational::zero);
        prop_assert_eq!(pf.clone(), matching_pfaffian(&a, &rows));
        prop_assert_eq!(&pf * &pf, det_bareiss(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn minor_map_is_a_homomorphism(u in point_matrix(), f in p_poly(), g in p_poly()) {
        let phi = minors_at(u).unwrap();
        let lift = |p: &Polynomial<Rational>| p.map_coeffs(|c| TRational::from_rational(c.clone()));
        let (f, g) = (lift(&f), lift(&g));
        let (pf, pg) = (phi.apply(&f).unwrap(), phi.apply(&g).unwrap());
        prop_assert_eq!(phi.apply(&f.mul(&g)).unwrap(), pf.mul(&pg));
        prop_assert_eq!(phi.apply(&f.add(&g)).unwrap(), pf.add(&pg));
        for (s, img) in odd_subsets().iter().zip(phi.images()) {
            prop_assert!(img.is_homogeneous());
            prop_assert_eq!(img.total_degree(), Some(s.len() as u32));
        }
    }

    #[test]
    fn kernel_is_canonical(u in point_matrix(), k in 0usize..61, seed in any::<u64>()) {
        let phi = minors_at(u).unwrap();
        let fiber = quadric_fibers()[k].clone();
        let mut shuffled = fiber.monomials().to_vec();
        // Deterministic shuffle driven by the seed.
        let n = shuffled.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = DegreeFiber::new(fiber.degree(), shuffled);
        let a = kernel_at_degree(&phi, &fiber);
        let b = kernel_at_degree(&phi, &other);
        prop_assert!(a.same_space(&b));
        for f in a.polynomials() {
            prop_assert!(phi.apply(&f).unwrap().is_zero());
        }
    }

    #[test]
    fn hull_soundness_and_euler(pts in prop::collection::btree_set(prop::collection::vec(0i64..4, 3), 4..12)) {
        let pts: Vec<Vec<i64>> = pts.into_iter().collect();
        let cfg = PointConfig::from_integers(3, &pts).unwrap();
        let d = cfg.affine_dimension();
        prop_assume!(d >= 1);
        let facets = hull(&cfg).unwrap();
        for f in &facets {
            prop_assert!(cfg.points().iter().all(|x| f.slack(x) >= Rational::zero()));
            prop_assert_eq!(affine_rank(&cfg.subset(f.incident())), Some(d - 1));
        }
        let lattice = FaceLattice::new(&cfg, &facets);
        prop_assert!(lattice.euler_holds(), "f-vector {:?}", lattice.f_vector());
        prop_assert!(lattice.f_vector().iter().all(|&f| f > 0));
    }
}

#[test]
fn generic_pfaffian_squares_to_determinant() {
    let a = generic_skew::<Rational>();
    let rows = [0, 1, 2, 3];
    let pf = pfaffian(&a, &rows).unwrap();
    let sub: Vec<Vec<Polynomial<Rational>>> = rows.iter().map(|&i| rows.iter().map(|&j| a[i][j].clone()).collect()).collect();
    assert_eq!(pf.mul(&pf), determinant(&sub));
}
