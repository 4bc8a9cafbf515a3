use coxideal::exactnum::Rational;
use coxideal::gradedkernel::{degree3_analysis, degree3_minimality, generator_profile};
use coxideal::multipoly::{odd_subsets, Monomial, Polynomial, RingMap, Var};

/// p1, p2, p4, p5 go to x1, x2, x4, x5; p123 and p345 to x1·x2·w and
/// x4·x5·w; every other variable to its own fresh variable. The only
/// relation is p123·p4·p5 = p345·p1·p2, in degree 3.
fn cubic_only_map() -> RingMap<Rational> {
    let w = Var::U(1);
    let mut fresh = (1..=5u8).flat_map(|i| (1..=6u8).map(move |j| Var::Entry(i, j)));
    let images = odd_subsets()
        .iter()
        .map(|s| {
            let elems: Vec<u8> = s.elements().collect();
            let m = match elems.as_slice() {
                [i] if [1, 2, 4, 5].contains(i) => Monomial::var(Var::X(*i)),
                [1, 2, 3] => Monomial::product_of([Var::X(1), Var::X(2), w]),
                [3, 4, 5] => Monomial::product_of([Var::X(4), Var::X(5), w]),
                _ => Monomial::var(fresh.next().unwrap()),
            };
            Polynomial::term(m, Rational::from_integer(1.into()))
        })
        .collect();
    RingMap::new("cubic", images)
}

#[test]
fn surplus_detects_a_cubic_generator() {
    let phi = cubic_only_map();
    let report = generator_profile(&phi, 2);
    assert_eq!(report.total_dimension(), 0);
    let analysis = degree3_analysis(&phi, &report, true);
    assert_eq!(analysis.surplus, 1);
    assert_eq!(degree3_minimality(&phi, &report), 1);
    let cubic: Vec<String> = analysis
        .kernels
        .iter()
        .flatten()
        .filter(|k| k.dimension() > 0)
        .flat_map(|k| k.polynomials())
        .map(|p| p.to_string())
        .collect();
    assert_eq!(cubic, ["p_1*p_2*p_345-p_4*p_5*p_123"]);
}
