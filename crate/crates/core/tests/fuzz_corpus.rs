//! Replays the checked-in fuzz seeds through the same properties the fuzz
//! targets assert, so the corpus stays meaningful on a stable toolchain.

use std::path::PathBuf;

use coxideal::exactnum::{parse_rational, Rational, TRational};
use coxideal::gradedkernel::parse_m2;
use coxideal::multipoly::{Multidegree, Polynomial};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds for {target}");
    files.iter().map(|p| std::fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn expr_seeds() {
    let parsed = seeds("expr").iter().filter(|s| coxideal::text::parse_expr(s).is_ok()).count();
    assert!(parsed > 0);
}

#[test]
fn rational_seeds_round_trip() {
    for s in seeds("rational") {
        if let Ok(q) = parse_rational(&s) {
            assert_eq!(parse_rational(&q.to_string()).unwrap(), q, "{s}");
        }
    }
}

#[test]
fn trational_seeds_round_trip() {
    for s in seeds("trational") {
        if let Ok(x) = TRational::parse(&s) {
            assert_eq!(TRational::parse(&x.to_string()).unwrap(), x, "{s}");
        }
    }
}

#[test]
fn polynomial_seeds_round_trip() {
    for s in seeds("polynomial_q") {
        if let Ok(f) = Polynomial::<Rational>::parse(&s) {
            assert_eq!(Polynomial::<Rational>::parse(&f.to_string()).unwrap(), f, "{s}");
        }
    }
    for s in seeds("polynomial_qt") {
        if let Ok(f) = Polynomial::<TRational>::parse(&s) {
            assert_eq!(Polynomial::<TRational>::parse(&f.to_string()).unwrap(), f, "{s}");
        }
    }
}

#[test]
fn multidegree_seeds_round_trip() {
    for s in seeds("multidegree") {
        if let Ok(d) = s.parse::<Multidegree>() {
            assert_eq!(d.to_string().parse::<Multidegree>().unwrap(), d, "{s}");
        }
    }
}

#[test]
fn m2_seeds() {
    let ok = seeds("m2_script").iter().filter(|s| parse_m2::<TRational>(s).is_ok()).count();
    assert!(ok >= 3);
    for s in seeds("m2_script") {
        let _ = parse_m2::<Rational>(&s);
    }
}

mod random_text {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn parsers_never_panic_and_round_trip(s in "[-+*/^() 0-9tpxy_,]{0,24}") {
            if let Ok(x) = TRational::parse(&s) {
                prop_assert_eq!(TRational::parse(&x.to_string()).unwrap(), x);
            }
            if let Ok(f) = Polynomial::<TRational>::parse(&s) {
                prop_assert_eq!(Polynomial::<TRational>::parse(&f.to_string()).unwrap(), f);
            }
            if let Ok(f) = Polynomial::<Rational>::parse(&s) {
                prop_assert_eq!(Polynomial::<Rational>::parse(&f.to_string()).unwrap(), f);
            }
            if let Ok(d) = s.parse::<Multidegree>() {
                prop_assert_eq!(d.to_string().parse::<Multidegree>().unwrap(), d);
            }
            let _ = parse_rational(&s);
        }
    }
}
