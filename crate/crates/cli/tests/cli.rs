use std::process::{Command, Output};

use coxideal::exactnum::Rational;
use coxideal::gradedkernel::{generator_profile, parse_m2};
use coxideal::presets::generic_minors;

fn coxideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxideal"))
        .args(args)
        .env("COXIDEAL_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const MOMENT_CURVE: &str = "1, t, t^2, t^3, t^4, t^5\nt^5, t^4, t^3, t^2, t, 1\n";

#[test]
fn ideal_i_has_66_generators_and_is_deterministic() {
    let a = coxideal(&["ideal", "--target", "I", "--degree-bound", "2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert_eq!(v["total_dimension"], 66);
    assert_eq!(v["field"], "Q");
    let b = coxideal(&["ideal", "--target", "I", "--degree-bound", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn prodsimplex_fvector() {
    let o = coxideal(&["polytope", "--preset", "prodsimplex", "--fvector"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(12,54,110,108,52,12)\n");
}

#[test]
fn demicube_report() {
    let o = coxideal(&["polytope", "--preset", "demicube"]);
    let v = json(&o);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["f_vector"][0], 32);
    assert_eq!(v["facets"].as_array().unwrap().len(), 44);
    assert_eq!(v["euler"], true);
}

#[test]
fn verify_reference_suite() {
    let o = coxideal(&["verify", "--suite", "paper"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("PASS     J total dimension: expected 132, computed 132"));
    assert!(text.lines().any(|l| l.starts_with("NOT MET  scaling")));
    assert!(!text.contains("FAIL "));
    assert!(text.ends_with("overall: pass\n"));
}

#[test]
fn export_round_trips_through_the_grammar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.m2");
    let o = coxideal(&["export", "--target", "I", "--format", "m2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let script = std::fs::read_to_string(&path).unwrap();
    assert!(script.contains("p_3*p_456-p_4*p_356+p_5*p_346-p_6*p_345"));
    let polys = parse_m2::<Rational>(&script).unwrap();
    assert_eq!(polys, generator_profile(&generic_minors(), 2).polynomials());
}

#[test]
fn u_file_for_the_moment_curve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.txt");
    std::fs::write(&path, MOMENT_CURVE).unwrap();
    let o = coxideal(&["profile", "--target", "J", "--u-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["total_dimension"], 132);
    let k = coxideal(&["khovanskii-check", "--u-file", path.to_str().unwrap()]);
    assert_eq!(k.status.code(), Some(0));
    assert_eq!(json(&k)["matching"], 61);
}

#[test]
fn in_j_is_binomial() {
    let o = coxideal(&["ideal", "--target", "inJ"]);
    let v = json(&o);
    assert_eq!(v["total_dimension"], 132);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["binomial"] == true));
}

#[test]
fn constant_u_has_no_monomial_degeneration() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.txt");
    std::fs::write(&path, "1,1,1,1,1,1\n1,2,3,4,5,6\n").unwrap();
    let o = coxideal(&["khovanskii-check", "--u-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("valuation tie"));
}

#[test]
fn scaling_reports_the_obstruction() {
    let o = coxideal(&["scaling"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["solved"], false);
    assert!(v["violated_fibers"].as_u64().unwrap() > 30);
}

#[test]
fn degenerate_u_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.txt");
    std::fs::write(&path, "1,2,3,4,5,6\n2,4,6,8,10,12\n").unwrap();
    let o = coxideal(&["ideal", "--target", "J", "--u-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degenerate point configuration"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ideal", "--target", "K"][..],
        &["ideal", "--degree-bound", "7"],
        &["ideal", "--target", "I", "--u-file", "u.txt"],
        &["ideal", "--target", "J", "--u-file", "/nonexistent/u.txt"],
        &["polytope", "--preset", "dodecahedron"],
        &["verify", "--suite", "other"],
        &["frobnicate"],
    ] {
        let o = coxideal(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn u_file_fuzz_seeds() {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/u_file");
    let mut valid = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        valid += usize::from(coxideal_cli::ufile::parse_u(&text).is_ok());
    }
    assert!(valid >= 2);
}
