use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use iso_wirtinger::chernoff::{chernoff_core, chernoff_theorem, random_support, ChernoffOptions, SupportFunction};
use iso_wirtinger::discrete::{self, EvalOptions};
use iso_wirtinger::polygon::{random_polygon, Polygon};
use iso_wirtinger::smooth::{
    gen_wirtinger, random_curve, reparametrize_by_arclength, smooth_isoperimetric, FourierCurve, SmoothOptions,
};
use iso_wirtinger::{io, Error, InequalityReport, TheoremId};
use rayon::prelude::*;
use serde::Serialize;

use crate::{fmt_f64, read_input, write_output, OutputFormat, ToleranceArg, UsageError};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Inequality to evaluate. `discrete-higher` and `chernoff` are
    /// shorthands for `isoperimetric-higher` and `chernoff-theorem`.
    #[arg(long, value_parser = parse_theorem)]
    theorem: TheoremId,
    /// Vertex count of random polygons; the k of the Chernoff operator.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Number of random inputs when no `--input` is given.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON input files, evaluated in the given order.
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Restrict random polygons to the modes ±1..±modes.
    #[arg(long)]
    modes: Option<usize>,
    /// Highest mode of random curves and support functions.
    #[arg(long, default_value_t = 8)]
    degree: usize,
    /// Subtract the centroid of off-centre polygons instead of rejecting them.
    #[arg(long)]
    auto_recenter: bool,
    /// Reparametrize non-constant-speed curves by arclength.
    #[arg(long)]
    reparametrize: bool,
    /// Attach convexity certificates to Chernoff reports.
    #[arg(long)]
    certify_convexity: bool,
    #[command(flatten)]
    tolerance: ToleranceArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    match s {
        "discrete-higher" => Ok(TheoremId::IsoperimetricHigher),
        "chernoff" => Ok(TheoremId::ChernoffTheorem),
        _ => s.parse().map_err(|e: Error| {
            let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
            format!("{e}; expected one of {}, discrete-higher, chernoff", names.join(", "))
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Polygon,
    Curve,
    Support,
}

fn family(id: TheoremId) -> Family {
    match id {
        TheoremId::GenWirtinger | TheoremId::SmoothIsoperimetric => Family::Curve,
        TheoremId::ChernoffCore | TheoremId::ChernoffTheorem => Family::Support,
        _ => Family::Polygon,
    }
}

enum Item {
    Polygon(Polygon),
    Curve(FourierCurve),
    Support(SupportFunction),
}

struct Job {
    source: String,
    item: Result<Item, Error>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Status {
    Holds,
    Violated,
    HypothesisError,
    Error,
}

#[derive(Debug, Serialize)]
struct Record {
    index: usize,
    source: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<InequalityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct Header<'a> {
    tool: &'a str,
    version: &'a str,
    theorem: TheoremId,
    tolerance: f64,
}

fn seed_for(base: u64, index: u64) -> u64 {
    base.wrapping_add(index)
}

fn load(args: &VerifyArgs, fam: Family) -> Result<Vec<Job>, UsageError> {
    if !args.input.is_empty() {
        return args
            .input
            .iter()
            .map(|path| {
                let text = read_input(path)?;
                let item = match fam {
                    Family::Polygon => io::parse_polygon(&text).map(Item::Polygon),
                    Family::Curve => io::parse_curve(&text).map(Item::Curve),
                    Family::Support => io::parse_support(&text).map(Item::Support),
                }
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                Ok(Job { source: path.display().to_string(), item: Ok(item) })
            })
            .collect();
    }
    let k = args.k;
    let jobs = (0..args.count)
        .into_par_iter()
        .map(|i| {
            let seed = seed_for(args.seed, i);
            let item = match fam {
                Family::Polygon => match k {
                    Some(k) => random_polygon(k, args.modes, seed).map(Item::Polygon),
                    None => Err(Error::InvalidParameter("random polygons need --k".into())),
                },
                Family::Curve => random_curve(args.degree, 0.2, seed)
                    .and_then(|c| reparametrize_by_arclength(&c, 4 * args.degree.max(16)))
                    .map(|c| Item::Curve(c.translated(-c.coeff(0)))),
                Family::Support => random_support(args.degree, 0.2, seed).map(Item::Support),
            };
            Job { source: format!("seed:{seed}"), item }
        })
        .collect();
    Ok(jobs)
}

fn evaluate(args: &VerifyArgs, item: &Item) -> Result<InequalityReport, Error> {
    let tol = args.tolerance.tolerance;
    let m = args.m;
    match item {
        Item::Polygon(p) => {
            let opts = EvalOptions { auto_recenter: args.auto_recenter, tolerance: tol };
            match args.theorem {
                TheoremId::WirtingerM => discrete::wirtinger_m(p, m, &opts),
                TheoremId::WirtingerLambdaForm => discrete::wirtinger_lambda_form(p, m, &opts),
                TheoremId::WirtingerSForm => discrete::wirtinger_s_form(p, m, &opts),
                TheoremId::StabilityC => discrete::stability_c(p, m, &opts),
                TheoremId::StabilityS => discrete::stability_s(p, m, &opts),
                TheoremId::ChakerianV1 => discrete::chakerian_v1(p, &opts),
                TheoremId::ChakerianV2 => discrete::chakerian_v2(p, &opts),
                TheoremId::IsoperimetricHigher => discrete::isoperimetric_higher(p, m, &opts),
                TheoremId::EquilateralBound => discrete::equilateral_bound(p, &opts),
                TheoremId::LengthFormEven => discrete::length_form_even(p, m, &opts),
                other => unreachable!("{other} is not a polygon inequality"),
            }
        }
        Item::Curve(c) => match args.theorem {
            TheoremId::GenWirtinger => gen_wirtinger(c, m, tol),
            TheoremId::SmoothIsoperimetric => {
                let opts = SmoothOptions { reparametrize: args.reparametrize, tolerance: tol, ..SmoothOptions::default() };
                smooth_isoperimetric(c, m, &opts)
            }
            other => unreachable!("{other} is not a curve inequality"),
        },
        Item::Support(h) => {
            let k = args.k.ok_or_else(|| Error::InvalidParameter("Chernoff inequalities need --k".into()))?;
            match args.theorem {
                TheoremId::ChernoffCore => chernoff_core(h, k, m, tol),
                TheoremId::ChernoffTheorem => {
                    let opts = ChernoffOptions { certify_convexity: args.certify_convexity, tolerance: tol };
                    chernoff_theorem(h, k, m, &opts)
                }
                other => unreachable!("{other} is not a support-function inequality"),
            }
        }
    }
}

fn record(index: usize, job: &Job, outcome: Result<InequalityReport, Error>) -> Record {
    let source = job.source.clone();
    match outcome {
        Ok(report) => {
            let status = if report.holds { Status::Holds } else { Status::Violated };
            Record { index, source, status, report: Some(report), error: None }
        }
        Err(e) => {
            let status = if e.is_hypothesis() { Status::HypothesisError } else { Status::Error };
            Record { index, source, status, report: None, error: Some(e.to_string()) }
        }
    }
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn render_json(args: &VerifyArgs, records: &[Record]) -> Result<String, UsageError> {
    let header = Header {
        tool: "iso-wirtinger",
        version: env!("CARGO_PKG_VERSION"),
        theorem: args.theorem,
        tolerance: args.tolerance.tolerance,
    };
    let mut out = serde_json::to_string(&header)?;
    out.push('\n');
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

fn render_csv(records: &[Record]) -> Result<String, UsageError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "index", "source", "status", "theorem_id", "k", "m", "lhs", "rhs", "deficit", "direct", "magnitude",
        "scale", "holds", "equality", "error",
    ])?;
    for r in records {
        let status = serde_json::to_value(r.status)?.as_str().unwrap_or_default().to_string();
        let mut row = vec![r.index.to_string(), r.source.clone(), status];
        match &r.report {
            Some(rep) => row.extend([
                rep.theorem_id.to_string(),
                fmt_opt(rep.k),
                fmt_opt(rep.m),
                fmt_f64(rep.lhs),
                fmt_f64(rep.rhs),
                fmt_f64(rep.deficit),
                fmt_f64(rep.direct),
                fmt_f64(rep.magnitude),
                fmt_f64(rep.scale),
                rep.holds.to_string(),
                rep.equality.to_string(),
            ]),
            None => row.extend(std::iter::repeat_n(String::new(), 11)),
        }
        row.push(r.error.clone().unwrap_or_default());
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| UsageError(e.to_string()))?;
    Ok(String::from_utf8(bytes)?)
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode, UsageError> {
    let tol = args.tolerance.tolerance;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(UsageError(format!("tolerance must be positive, got {tol}")));
    }
    let jobs = load(args, family(args.theorem))?;
    let records: Vec<Record> = jobs
        .par_iter()
        .enumerate()
        .map(|(i, job)| {
            let outcome = match &job.item {
                Ok(item) => evaluate(args, item),
                Err(e) => Err(e.clone()),
            };
            record(i, job, outcome)
        })
        .collect();
    let text = match args.format {
        OutputFormat::Json => render_json(args, &records)?,
        OutputFormat::Csv => render_csv(&records)?,
    };
    write_output(args.output.as_deref(), &text)?;

    if let Some(bad) = records.iter().find(|r| r.status == Status::Error) {
        return Err(UsageError(format!(
            "item {} ({}): {}",
            bad.index,
            bad.source,
            bad.error.as_deref().unwrap_or_default()
        )));
    }
    let all_hold = records.iter().all(|r| r.status == Status::Holds);
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(2) })
}
