//! The reference fixture suite behind `verify`, recomputed from scratch.

use serde::Serialize;

use coxideal::exactnum::{Rational, TRational};
use coxideal::gradedkernel::{
    degree3_minimality, exponent_rank, generator_profile, initial_report, monomial_degeneration, non_binomials,
    report_json, solve_scaling, toric_quadrics, GradedKernelReport, KernelBasis,
};
use coxideal::multipoly::{pfaffian_image_map, Multidegree, Polynomial, SkewSpec};
use coxideal::polytope::{grading_points, hull, product_of_simplices, FaceLattice};
use coxideal::presets::{generic_minors, moment_curve_minors};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A statement known not to hold at all; the computed column says why.
    NotMet,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotMet => "NOT MET",
            };
            out.push_str(&format!(
                "{tag:<8} {}: expected {}, computed {}\n",
                c.name, c.expected, c.computed
            ));
        }
        out.push_str(if self.passed { "overall: pass\n" } else { "overall: FAIL\n" });
        out
    }
}

struct Builder(Vec<Check>);

impl Builder {
    fn eq(&mut self, name: &str, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.0.push(Check {
            name: name.into(),
            expected,
            computed,
            status,
        });
    }
}

const I_ROWS: [(&str, &str); 7] = [
    ("(2, 0,0,1,1,1,1)", "p_3*p_456-p_4*p_356+p_5*p_346-p_6*p_345"),
    ("(2, 0,1,0,1,1,1)", "p_2*p_456-p_4*p_256+p_5*p_246-p_6*p_245"),
    ("(2, 1,1,1,1,0,0)", "p_1*p_234-p_2*p_134+p_3*p_124-p_4*p_123"),
    ("(2, 0,1,1,1,1,2)", "p_256*p_346-p_246*p_356+p_236*p_456"),
    ("(2, 2,1,1,1,1,0)", "p_125*p_134-p_124*p_135+p_123*p_145"),
    ("(2, 1,1,1,1,2,2)", "p_156*p_23456-p_256*p_13456+p_356*p_12456-p_456*p_12356"),
    ("(2, 2,2,1,1,1,1)", "p_123*p_12456-p_124*p_12356+p_125*p_12346-p_126*p_12345"),
];

const IN_J_ROWS: [(&str, &str, &str); 7] = [
    ("(2, 0,0,1,1,1,1)", "p_3*p_456-p_4*p_356", "p_5*p_346-p_6*p_345"),
    ("(2, 0,1,0,1,1,1)", "p_2*p_456-p_4*p_256", "p_5*p_246-p_6*p_245"),
    ("(2, 1,1,1,1,0,0)", "p_1*p_234-p_2*p_134", "p_3*p_124-p_4*p_123"),
    ("(2, 0,1,1,1,1,2)", "p_6*p_23456-p_236*p_456", "p_246*p_356-p_256*p_346"),
    ("(2, 2,1,1,1,1,0)", "p_1*p_12345-p_123*p_145", "p_124*p_135-p_125*p_134"),
    ("(2, 1,1,1,1,2,2)", "p_156*p_23456-p_256*p_13456", "p_356*p_12456-p_456*p_12356"),
    ("(2, 2,2,1,1,1,1)", "p_123*p_12456-p_124*p_12356", "p_125*p_12346-p_126*p_12345"),
];

const P123: &str = "x_1*y_2*x_3*t^6-(x_1*x_2*y_3+y_1*x_2*x_3)*t^7+(y_1*x_2*x_3+x_1*x_2*y_3)*t^9-x_1*y_2*x_3*t^10";

fn rows_matching(report: &GradedKernelReport<Rational>, rows: &[(&str, Vec<&str>)]) -> usize {
    rows.iter()
        .filter(|(d, gens)| {
            let Ok(d) = d.parse::<Multidegree>() else { return false };
            let Some(e) = report.entry(d) else { return false };
            let vectors: Option<Vec<Vec<Rational>>> = gens
                .iter()
                .map(|g| Polynomial::parse(g).ok().and_then(|p| e.fiber().coordinates(&p).ok()))
                .collect();
            vectors.is_some_and(|vs| e.same_space(&KernelBasis::new(e.fiber().clone(), vs)))
        })
        .count()
}

fn lift(r: &GradedKernelReport<Rational>) -> GradedKernelReport<TRational> {
    let entries = r
        .entries()
        .iter()
        .map(|e| e.map_coeffs(|c| TRational::from_rational(c.clone())))
        .collect();
    GradedKernelReport::new(r.map_name(), r.degree_bound(), entries)
}

pub fn reference_suite() -> VerifyReport {
    let mut b = Builder(Vec::new());
    let phi_i = generic_minors();
    let phi_j = moment_curve_minors();
    let i = generator_profile(&phi_i, 2);
    let j = generator_profile(&phi_j, 2);

    b.eq("I total dimension", 66, i.total_dimension());
    b.eq("I fibers of dimension 1", 60, i.entries().iter().filter(|e| e.dimension() == 1).count());
    let big: Multidegree = "(2, 1,1,1,1,1,1)".parse().expect("literal degree");
    b.eq("I dimension at (2, 1,1,1,1,1,1)", 6, i.dimension_at(big));
    let i_rows: Vec<(&str, Vec<&str>)> = I_ROWS.iter().map(|(d, g)| (*d, vec![*g])).collect();
    b.eq("I table rows", "7/7", format!("{}/7", rows_matching(&i, &i_rows)));

    let p123 = phi_j.apply(&Polynomial::parse("p_123").expect("literal")).expect("p-polynomial");
    let expected = Polynomial::<TRational>::parse(P123).expect("literal");
    b.eq("image of p_123", "published expansion", if p123 == expected { "published expansion".into() } else { p123.to_string() });

    b.eq("J total dimension", 132, j.total_dimension());
    b.eq("J dimension at (2, 1,1,1,1,1,1)", 12, j.dimension_at(big));
    b.eq("J degree-3 surplus", 0, degree3_minimality(&phi_j, &j));
    let il = lift(&i);
    let contained = il.polynomials().iter().filter(|g| j.membership(g).unwrap_or(false)).count();
    b.eq("I-generators in J", "66/66", format!("{contained}/66"));

    match monomial_degeneration(&phi_j) {
        Ok(mono) => {
            b.eq("exponent rank of in(J)", 10, exponent_rank(&mono).map_or(0, |r| r));
            match toric_quadrics(&mono) {
                Ok(toric) => {
                    b.eq("in(J) binomial quadrics", 132, toric.total_dimension() - non_binomials(&toric).len());
                    let rows: Vec<(&str, Vec<&str>)> = IN_J_ROWS.iter().map(|(d, a, c)| (*d, vec![*a, *c])).collect();
                    b.eq("in(J) table rows", "7/7", format!("{}/7", rows_matching(&toric, &rows)));
                    let initial = initial_report(&phi_j, &j);
                    let agree = toric
                        .entries()
                        .iter()
                        .filter(|e| initial.entry(e.degree()).is_some_and(|a| a.same_space(e)))
                        .count();
                    b.eq(
                        "Khovanskii fibers",
                        "61/61",
                        format!("{agree}/{}", toric.entries().len().max(initial.entries().len())),
                    );
                }
                Err(e) => b.eq("in(J) binomial quadrics", 132, e),
            }
        }
        Err(e) => b.eq("monomial degeneration", "no valuation ties", e),
    }

    let computed = match solve_scaling(&il, &j) {
        Ok(_) => "solved".to_string(),
        Err(f) => f.to_string(),
    };
    b.0.push(Check {
        name: "scaling J = I + u*I".into(),
        expected: "u in (K*)^32".into(),
        status: if computed == "solved" { Status::Pass } else { Status::NotMet },
        computed,
    });

    let s = generator_profile(&pfaffian_image_map::<Rational>(&SkewSpec::default()), 2);
    b.eq("pfaffian kernel dimension", 66, s.total_dimension());

    let ps = product_of_simplices();
    let fv = hull(&ps).map(|f| FaceLattice::new(&ps, &f).f_vector());
    b.eq("f-vector of e_i + e_j", "[12, 54, 110, 108, 52, 12]", format!("{:?}", fv.unwrap_or_default()));
    let g = grading_points();
    b.eq("demicube dimension", 6, g.affine_dimension());
    let verts = hull(&g).map(|f| FaceLattice::new(&g, &f).vertices().len());
    b.eq("demicube vertices", 32, verts.unwrap_or(0));

    let rerun = report_json(&generator_profile(&phi_i, 2)) == report_json(&i);
    b.eq("byte-identical rerun", true, rerun);

    let passed = b.0.iter().all(|c| c.status != Status::Fail);
    VerifyReport {
        suite: "paper".into(),
        checks: b.0,
        passed,
    }
}
