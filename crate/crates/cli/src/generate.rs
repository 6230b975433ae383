use std::path::PathBuf;

use clap::{Args, ValueEnum};
use iso_wirtinger::chernoff::{random_support, SupportFunction};
use iso_wirtinger::io;
use iso_wirtinger::num_complex::Complex64;
use iso_wirtinger::polygon::{make_regular, random_polygon};
use iso_wirtinger::smooth::{random_band_curve, random_curve, reparametrize_by_arclength, FourierCurve};

use crate::{write_output, UsageError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Polygon,
    Curve,
    Support,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    kind: Kind,
    /// Number of polygon vertices.
    #[arg(long)]
    k: Option<usize>,
    /// Restrict a random polygon to the modes ±1..±modes.
    #[arg(long)]
    modes: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Produce an equality-class member for order `m`.
    #[arg(long, requires = "m")]
    equality: bool,
    #[arg(long)]
    m: Option<usize>,
    /// Regular polygon `R_n` in place of a random one.
    #[arg(long, conflicts_with_all = ["modes", "equality"])]
    regular: Option<i64>,
    /// Circle (curve) or constant support function.
    #[arg(long, conflicts_with = "equality")]
    circle: bool,
    /// Radius for `--circle`.
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// Highest mode of a random curve or support function.
    #[arg(long, default_value_t = 8)]
    degree: usize,
    /// Size of the random perturbation of a curve or support function.
    #[arg(long, default_value_t = 0.2)]
    amplitude: f64,
    /// Reparametrize a random curve by arclength before writing it.
    #[arg(long)]
    reparametrize: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn polygon(args: &GenerateArgs) -> Result<String, UsageError> {
    let k = args.k.ok_or_else(|| UsageError("generate polygon needs --k".into()))?;
    let p = if let Some(n) = args.regular {
        make_regular(n, k, Complex64::new(args.r, 0.0))?
    } else {
        let bound = if args.equality { args.m } else { args.modes };
        random_polygon(k, bound, args.seed)?
    };
    Ok(io::polygon_to_json(&p))
}

fn curve(args: &GenerateArgs) -> Result<String, UsageError> {
    let c = if args.circle {
        FourierCurve::circle(Complex64::new(args.r, 0.0))?
    } else if args.equality {
        random_band_curve(args.m.expect("clap requires m"), args.seed)?
    } else {
        let c = random_curve(args.degree, args.amplitude, args.seed)?;
        if args.reparametrize {
            let c = reparametrize_by_arclength(&c, 4 * args.degree.max(16))?;
            c.translated(-c.coeff(0))
        } else {
            c
        }
    };
    Ok(io::curve_to_json(&c))
}

fn support(args: &GenerateArgs) -> Result<String, UsageError> {
    let h = if args.circle || args.equality {
        SupportFunction::constant(args.r)
    } else {
        random_support(args.degree, args.amplitude, args.seed)?
    };
    Ok(io::support_to_json(&h))
}

pub fn run(args: &GenerateArgs) -> Result<(), UsageError> {
    let mut text = match args.kind {
        Kind::Polygon => polygon(args)?,
        Kind::Curve => curve(args)?,
        Kind::Support => support(args)?,
    };
    text.push('\n');
    write_output(args.output.as_deref(), &text)
}
