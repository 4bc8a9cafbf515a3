//! JSON and Macaulay2 renderings of kernel reports.

use serde::Serialize;

use super::initial::is_binomial;
use super::kernel::GradedKernelReport;
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, FieldTag};
use crate::multipoly::{odd_subsets, Multidegree, Polynomial, Var};

#[derive(Serialize)]
struct EntryDoc {
    degree: Multidegree,
    dimension: usize,
    fiber_size: usize,
    basis: Vec<String>,
    binomial: bool,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    map: &'a str,
    field: FieldTag,
    degree_bound: u32,
    total_dimension: usize,
    entries: Vec<EntryDoc>,
}

pub fn report_value<C: Coeff>(report: &GradedKernelReport<C>) -> serde_json::Value {
    let doc = ReportDoc {
        map: report.map_name(),
        field: report.field(),
        degree_bound: report.degree_bound(),
        total_dimension: report.total_dimension(),
        entries: report
            .entries()
            .iter()
            .map(|e| {
                let polys = e.polynomials();
                EntryDoc {
                    degree: e.degree(),
                    dimension: e.dimension(),
                    fiber_size: e.fiber().len(),
                    binomial: polys.iter().all(is_binomial),
                    basis: polys.iter().map(ToString::to_string).collect(),
                }
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("report serializes")
}

/// Pretty-printed JSON with a trailing newline; byte-stable across runs.
pub fn report_json<C: Coeff>(report: &GradedKernelReport<C>) -> String {
    let mut s = serde_json::to_string_pretty(&report_value(report)).expect("report serializes");
    s.push('\n');
    s
}

/// A Macaulay2 script declaring the 32-variable ring and the ideal spanned
/// by the report's basis, generators in report order.
pub fn export_m2<C: Coeff>(report: &GradedKernelReport<C>) -> String {
    let vars: Vec<String> = odd_subsets().iter().map(|s| Var::P(*s).to_string()).collect();
    let coeffs = match C::FIELD {
        FieldTag::Rationals => "QQ",
        FieldTag::RationalFunctions => "frac(QQ[t])",
    };
    let gens: Vec<String> = report.polynomials().iter().map(ToString::to_string).collect();
    let body = if gens.is_empty() {
        "0_R".to_string()
    } else {
        gens.join(",\n  ")
    };
    format!(
        "-- {} (degree bound {}, {} generators)\nR = {}[{}];\nI = ideal({});\n",
        report.map_name(),
        report.degree_bound(),
        gens.len(),
        coeffs,
        vars.join(","),
        if gens.len() > 1 { format!("\n  {body}\n") } else { body },
    )
}

/// Reads back the generators of a script written by [`export_m2`].
pub fn parse_m2<C: Coeff>(script: &str) -> Result<Vec<Polynomial<C>>> {
    let start = script
        .find("ideal(")
        .ok_or_else(|| Error::Parse {
            offset: 0,
            message: "no ideal(...) in script".into(),
        })?
        + "ideal(".len();
    let end = script.rfind(");").filter(|&e| e >= start).ok_or_else(|| Error::Parse {
        offset: start,
        message: "unterminated ideal(...)".into(),
    })?;
    let body = script[start..end].trim();
    if body == "0_R" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut from = 0;
    for (k, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(Polynomial::parse(body[from..k].trim())?);
                from = k + 1;
            }
            _ => {}
        }
    }
    out.push(Polynomial::parse(body[from..].trim())?);
    Ok(out)
}
