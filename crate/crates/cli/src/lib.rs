//! The `coxideal` command line.
//!
//! Exit status: 0 on success, 1 when a computation finishes but a check
//! fails, 2 for usage errors and unreadable or invalid input.

pub mod ufile;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use coxideal::exactnum::{Rational, TRational};
use coxideal::gradedkernel::{
    export_m2, generator_profile, initial_report, monomial_degeneration, report_json, solve_scaling, toric_quadrics,
    GradedKernelReport,
};
use coxideal::multipoly::{minor_image_map, MatrixSpec, Multidegree, RingMap};
use coxideal::polytope::{self, hull, FaceLattice};
use coxideal::presets::{generic_minors, moment_curve_minors};

#[derive(Parser, Debug)]
#[command(name = "coxideal", version, about = "Kernels of the odd-minor maps, their toric degenerations and the grading polytope")]
pub struct Cli {
    /// Worker threads for the per-fiber engine (default: all cores).
    #[arg(long, global = true, env = "COXIDEAL_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "inJ")]
    InJ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    M2,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value = "I")]
    pub target: Target,
    #[arg(long, default_value_t = 2)]
    pub degree_bound: u32,
    /// 2×6 point matrix for J and inJ (default: the moment curve U(t)).
    #[arg(long)]
    pub u_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct UOnly {
    #[arg(long)]
    pub u_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kernel basis of the chosen ideal up to the degree bound.
    Ideal(Common),
    /// Initial spaces of J with respect to the t-adic valuation.
    InitialIdeal(UOnly),
    /// Per-degree kernel dimensions.
    Profile(Common),
    /// Compares the initial spaces of J with the toric quadrics, fiber by fiber.
    KhovanskiiCheck(UOnly),
    /// Looks for u with J = I + u*I.
    Scaling(UOnly),
    /// Hull, facets and f-vector of a preset point configuration.
    Polytope {
        #[arg(long)]
        preset: String,
        /// Print only the f-vector, as `(f_0,...,f_{d-1})` unless `--format json`.
        #[arg(long)]
        fvector: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Recomputes the published fixtures.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Writes a report in an interchange format (Macaulay2).
    Export(Common),
}

/// A failure that ends the run with the given status.
#[derive(Debug)]
pub struct Exit {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<u8, Exit>;

fn write_out(output: &Option<PathBuf>, text: &str) -> Result<(), Exit> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn load_u(path: &PathBuf) -> Result<RingMap<TRational>, Exit> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let m = ufile::parse_u(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(minor_image_map(&MatrixSpec::AtPoints(m)).with_name("J"))
}

fn j_map(u_file: &Option<PathBuf>) -> Result<RingMap<TRational>, Exit> {
    match u_file {
        Some(p) => load_u(p),
        None => Ok(moment_curve_minors()),
    }
}

enum AnyReport {
    Q(GradedKernelReport<Rational>),
    T(GradedKernelReport<TRational>),
}

impl AnyReport {
    fn json(&self) -> String {
        match self {
            AnyReport::Q(r) => report_json(r),
            AnyReport::T(r) => report_json(r),
        }
    }

    fn m2(&self) -> String {
        match self {
            AnyReport::Q(r) => export_m2(r),
            AnyReport::T(r) => export_m2(r),
        }
    }

    fn profile(&self) -> (String, usize, Vec<(Multidegree, usize)>) {
        fn dims<C: coxideal::exactnum::Coeff>(r: &GradedKernelReport<C>) -> (String, usize, Vec<(Multidegree, usize)>) {
            let rows = r.entries().iter().map(|e| (e.degree(), e.dimension())).collect();
            (r.map_name().to_string(), r.total_dimension(), rows)
        }
        match self {
            AnyReport::Q(r) => dims(r),
            AnyReport::T(r) => dims(r),
        }
    }
}

fn validate(c: &Common) -> Result<(), Exit> {
    if !(1..=3).contains(&c.degree_bound) {
        return Err(usage(format!("--degree-bound must be 1, 2 or 3, got {}", c.degree_bound)));
    }
    if c.target == Target::I && c.u_file.is_some() {
        return Err(usage("--u-file applies to --target J and inJ only"));
    }
    Ok(())
}

fn build(c: &Common) -> Result<AnyReport, Exit> {
    Ok(match c.target {
        Target::I => AnyReport::Q(generator_profile(&generic_minors(), c.degree_bound)),
        Target::J => AnyReport::T(generator_profile(&j_map(&c.u_file)?, c.degree_bound)),
        Target::InJ => {
            let mono = monomial_degeneration(&j_map(&c.u_file)?).map_err(|e| Exit {
                code: 1,
                message: e.to_string(),
            })?;
            let report = if c.degree_bound == 2 {
                toric_quadrics(&mono).map_err(|e| Exit {
                    code: 1,
                    message: e.to_string(),
                })?
            } else {
                generator_profile(&mono.with_name("inJ"), c.degree_bound)
            };
            AnyReport::Q(report)
        }
    })
}

fn ideal(c: &Common) -> Outcome {
    validate(c)?;
    let r = build(c)?;
    let text = match c.format {
        Format::Json => r.json(),
        Format::M2 => r.m2(),
        Format::Text => {
            let (name, total, _) = r.profile();
            let polys = match &r {
                AnyReport::Q(r) => r.polynomials().iter().map(ToString::to_string).collect::<Vec<_>>(),
                AnyReport::T(r) => r.polynomials().iter().map(ToString::to_string).collect(),
            };
            format!("# {name}: {total} generators\n{}\n", polys.join("\n"))
        }
    };
    write_out(&c.output, &text)?;
    Ok(0)
}

fn profile(c: &Common) -> Outcome {
    validate(c)?;
    let (name, total, rows) = build(c)?.profile();
    let text = match c.format {
        Format::Json => {
            let entries: Vec<_> = rows.iter().map(|(d, n)| json!({"degree": d, "dimension": n})).collect();
            let v = json!({"map": name, "degree_bound": c.degree_bound, "total_dimension": total, "entries": entries});
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
        Format::Text => {
            let mut s = format!("# {name}: total {total}\n");
            for (d, n) in rows {
                s.push_str(&format!("{d}\t{n}\n"));
            }
            s
        }
        Format::M2 => return Err(usage("profile has no m2 format")),
    };
    write_out(&c.output, &text)?;
    Ok(0)
}

fn export(c: &Common) -> Outcome {
    if c.format != Format::M2 && c.format != Format::Json {
        return Err(usage("export supports --format m2 or json"));
    }
    // `export` defaults to the Macaulay2 script.
    let mut c = c.clone();
    if c.format == Format::Json {
        c.format = Format::M2;
    }
    ideal(&c)
}

fn initial_ideal(o: &UOnly) -> Outcome {
    let phi = j_map(&o.u_file)?;
    let j = generator_profile(&phi, 2);
    let r = AnyReport::Q(initial_report(&phi, &j));
    let text = match o.format {
        Format::M2 => r.m2(),
        _ => r.json(),
    };
    write_out(&o.output, &text)?;
    Ok(0)
}

fn khovanskii_check(o: &UOnly) -> Outcome {
    let phi = j_map(&o.u_file)?;
    let toric = match monomial_degeneration(&phi).and_then(|m| toric_quadrics(&m)) {
        Ok(t) => t,
        Err(e) => {
            return Err(Exit {
                code: 1,
                message: e.to_string(),
            })
        }
    };
    let j = generator_profile(&phi, 2);
    let initial = initial_report(&phi, &j);
    let mut mismatched = Vec::new();
    let mut degrees: Vec<_> = toric.entries().iter().chain(initial.entries()).map(|e| e.degree()).collect();
    degrees.sort();
    degrees.dedup();
    for d in &degrees {
        let same = match (initial.entry(*d), toric.entry(*d)) {
            (Some(a), Some(b)) => a.same_space(b),
            _ => false,
        };
        if !same {
            mismatched.push(d.to_string());
        }
    }
    let v = json!({
        "fibers": degrees.len(),
        "matching": degrees.len() - mismatched.len(),
        "mismatched": mismatched,
        "certified": mismatched.is_empty(),
    });
    let text = match o.format {
        Format::Text => format!("{}/{} fibers match\n", degrees.len() - mismatched.len(), degrees.len()),
        _ => serde_json::to_string_pretty(&v).expect("json") + "\n",
    };
    write_out(&o.output, &text)?;
    Ok(if mismatched.is_empty() { 0 } else { 1 })
}

fn scaling(o: &UOnly) -> Outcome {
    let phi = j_map(&o.u_file)?;
    let j = generator_profile(&phi, 2);
    let i = generator_profile(&generic_minors(), 2);
    let il = GradedKernelReport::new(
        "I",
        2,
        i.entries()
            .iter()
            .map(|e| e.map_coeffs(|c| TRational::from_rational(c.clone())))
            .collect(),
    );
    let (v, code) = match solve_scaling(&il, &j) {
        Ok(u) => {
            let comps: serde_json::Map<String, serde_json::Value> =
                u.named().into_iter().map(|(k, c)| (k, c.into())).collect();
            (json!({"solved": true, "u": comps}), 0)
        }
        Err(f) => (
            json!({
                "solved": false,
                "degree": f.degree,
                "reason": f.reason,
                "violated_fibers": f.violated_fibers,
            }),
            1,
        ),
    };
    let text = match o.format {
        Format::Text => match v["solved"].as_bool() {
            Some(true) => format!("{}\n", v["u"]),
            _ => format!(
                "no scaling: fails at {} ({}); {} fibers violated\n",
                v["degree"], v["reason"].as_str().unwrap_or(""), v["violated_fibers"]
            ),
        },
        _ => serde_json::to_string_pretty(&v).expect("json") + "\n",
    };
    write_out(&o.output, &text)?;
    Ok(code)
}

fn polytope_cmd(preset: &str, fvector: bool, format: Option<Format>, output: &Option<PathBuf>) -> Outcome {
    let points = polytope::preset(preset)
        .ok_or_else(|| usage(format!("unknown preset {preset:?}; expected cube, prodsimplex or demicube")))?;
    let facets = hull(&points).map_err(|e| usage(e.to_string()))?;
    let lattice = FaceLattice::new(&points, &facets);
    let text = if fvector {
        let f: Vec<String> = lattice.f_vector().iter().map(ToString::to_string).collect();
        match format {
            Some(Format::Json) => format!("{}\n", json!(lattice.f_vector())),
            _ => format!("({})\n", f.join(",")),
        }
    } else if format.is_some_and(|f| f != Format::Json) {
        return Err(usage("the full polytope report is JSON only; use --fvector for text"));
    } else {
        serde_json::to_string_pretty(&polytope::report_json(&points, &facets, &lattice)).expect("json") + "\n"
    };
    write_out(output, &text)?;
    Ok(if lattice.euler_holds() { 0 } else { 1 })
}

fn verify_cmd(suite: &str, format: Format, output: &Option<PathBuf>) -> Outcome {
    if suite != "paper" {
        return Err(usage(format!("unknown suite {suite:?}; the only suite is \"paper\"")));
    }
    let report = verify::reference_suite();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("json") + "\n",
        _ => report.text(),
    };
    write_out(output, &text)?;
    Ok(if report.passed { 0 } else { 1 })
}

pub fn run(cli: &Cli) -> Outcome {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(usage("thread count must be positive"));
        }
        // Only the first pool request in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.command {
        Command::Ideal(c) => ideal(c),
        Command::Profile(c) => profile(c),
        Command::Export(c) => {
            validate(c)?;
            export(c)
        }
        Command::InitialIdeal(o) => initial_ideal(o),
        Command::KhovanskiiCheck(o) => khovanskii_check(o),
        Command::Scaling(o) => scaling(o),
        Command::Polytope {
            preset,
            fvector,
            format,
            output,
        } => polytope_cmd(preset, *fvector, *format, output),
        Command::Verify { suite, format, output } => verify_cmd(suite, *format, output),
    }
}
