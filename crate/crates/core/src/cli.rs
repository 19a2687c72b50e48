//! Command-line front end.
//!
//! Verbs: `eval`, `sweep`, `thresholds`, `identities`, `limits`, `figure`.
//! Exit status: 0 success, 1 a check failed, 2 usage error, 3 domain error.
//! The default absolute tolerance can be overridden with `FEJER_ABS_TOL`;
//! `--abs-tol` takes precedence over the environment.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, BoundId, TaylorPoint};
use crate::complex::ComplexValue;
use crate::consts::{FRAC_PI_2, PI};
use crate::dirichlet::{self, KernelArgs};
use crate::error::Error;
use crate::fjsums::{self, FJArgs, FJArgsOdd};
use crate::specfun::{self, EvalOptions};
use crate::verify::{self, sample, Axis, GridSpec, InequalityReport, SampleDomain, Threshold};

pub const ABS_TOL_ENV: &str = "FEJER_ABS_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fejer", version, about = "Fejér-Jackson sums, integrated Dirichlet kernels and their envelopes")]
pub struct Cli {
    /// Absolute tolerance of every evaluation (overrides FEJER_ABS_TOL).
    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at a point; `fejer eval list` shows them all.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Sweep an inequality over a grid or a seeded random sample.
    Sweep {
        bound: String,
        /// Axis as `name=lo:hi:count[:log][:open]`, `name=a,b,c` or `name=1..50`.
        #[arg(long = "axis")]
        axes: Vec<String>,
        /// Use this many seeded random points instead of a grid.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = sample::DEFAULT_SEED)]
        seed: u64,
    },
    /// Compute the threshold roots t0 and t1.
    Thresholds,
    /// Evaluate identity residuals at the published sample sets.
    Identities,
    /// Tabulate the limit relations.
    Limits,
    /// Write the data behind a figure as CSV.
    Figure {
        which: FigureId,
        #[arg(long, default_value_t = 10)]
        n: u64,
        #[arg(long, default_value_t = 12.0)]
        lambda: f64,
        #[arg(long, default_value_t = 400)]
        points: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain { .. } => EXIT_DOMAIN,
            Error::Config(_) => EXIT_USAGE,
            Error::Convergence { .. } | Error::Bracket { .. } => EXIT_CHECK_FAILED,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_CHECK_FAILED,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Resolves evaluation options from the flag, then the environment.
pub fn resolve_options(flag: Option<f64>) -> CliResult<EvalOptions> {
    let abs_tol = match flag {
        Some(v) => Some(v),
        None => match std::env::var(ABS_TOL_ENV) {
            Ok(s) => Some(
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| usage(format!("{ABS_TOL_ENV} is not a number: '{s}'")))?,
            ),
            Err(_) => None,
        },
    };
    let opts = abs_tol.map_or_else(EvalOptions::default, EvalOptions::with_abs_tol);
    opts.validate()?;
    Ok(opts)
}

/// A function value with its error budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Real(f64),
    Complex(ComplexValue),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Real(v) => write!(f, "{v:.17e}"),
            Value::Complex(z) => write!(f, "{:.17e} {:+.17e}i", z.re, z.im),
        }
    }
}

/// Name, argument names and description of every `eval` function.
pub const FUNCTIONS: &[(&str, &str, &str)] = &[
    ("si", "t", "sine integral Si(t)"),
    ("si-comp", "t", "si(t) = Si(t) - pi/2"),
    ("ci", "t", "cosine integral Ci(t)"),
    ("cin", "t", "Cin(t) = ln t - Ci(t) + gamma"),
    ("e", "t", "exponential integral E(t)"),
    ("m", "t", "comparison function M(t)"),
    ("digamma", "x", "psi(x)"),
    ("lngamma", "x", "ln Gamma(x), x > 0"),
    ("arccot", "t", "arccot t, t >= 0"),
    ("l", "x mu", "L(x, mu) by the Laplace integral"),
    ("l-series", "x mu", "L(x, mu) by summation"),
    ("ln", "x mu n", "truncated sum L_n(x, mu)"),
    ("l-odd", "x lambda", "odd-frequency sum"),
    ("s-pi", "lambda", "S_pi(lambda)"),
    ("rotated-l", "x mu", "e^{ix mu} L(x, mu)"),
    ("sn", "n x", "S_n(x, 0) = sum sin(kx)/k"),
    ("dirichlet", "x n", "Dirichlet kernel D_n(x)"),
    ("ssi", "x lambda", "Ssi(x, lambda)"),
    ("eci", "x lambda", "Eci(x, lambda), direct"),
    ("eci-laplace", "x lambda", "Eci(x, lambda), Laplace form"),
    ("eci-identity", "x lambda", "Eci(x, lambda), via the odd FJ sum"),
    ("sci", "x lambda", "Sci(x, lambda)"),
    ("cci", "x lambda", "Cci(x, lambda)"),
    ("rn", "n re im", "sum_{k>n} z^k/k"),
    ("<bound>", "coords", "any bound of `fejer sweep`, at its sweep coordinates"),
];

fn arity(function: &str, args: &[f64], k: usize) -> CliResult<()> {
    if args.len() == k {
        Ok(())
    } else {
        Err(usage(format!("{function} takes {k} argument(s), got {}", args.len())))
    }
}

fn index(v: f64, what: &str) -> CliResult<u64> {
    if v >= 0.0 && v == v.floor() && v < 1e15 {
        Ok(v as u64)
    } else {
        Err(CliError {
            code: EXIT_DOMAIN,
            message: format!("{what} must be a non-negative integer, got {v}"),
        })
    }
}

/// Evaluates a named function; returns the value and its error budget.
pub fn eval_function(function: &str, a: &[f64], opts: &EvalOptions) -> CliResult<(Value, f64)> {
    let tol = opts.abs_tol;
    let rounding = |v: f64| 4.0 * f64::EPSILON * v.abs();
    let real = |v: f64, err: f64| (Value::Real(v), err);
    let cplx = |v: ComplexValue, err: f64| (Value::Complex(v), err);
    let name = function.to_ascii_lowercase();
    let k = match name.as_str() {
        "ln" | "rn" => 3,
        "l" | "l-series" | "l-odd" | "rotated-l" | "sn" | "dirichlet" | "ssi" | "eci" | "eci-laplace"
        | "eci-identity" | "sci" | "cci" => 2,
        "si" | "si-comp" | "ci" | "cin" | "e" | "m" | "digamma" | "lngamma" | "arccot" | "s-pi" => 1,
        other => match other.parse::<BoundId>() {
            Ok(b) => verify::sweep::coordinate_names(b).len(),
            Err(_) => return Err(usage(format!("unknown function '{function}' (try `fejer eval list`)"))),
        },
    };
    arity(function, a, k)?;
    Ok(match name.as_str() {
        "si" => real(specfun::sine_integral(a[0], opts)?, tol),
        "si-comp" => real(specfun::sine_integral_complementary(a[0], opts)?, tol),
        "ci" => real(specfun::cosine_integral(a[0], opts)?, tol),
        "cin" => real(specfun::cin(a[0], opts)?, tol),
        "e" => {
            let e = specfun::exp_integral_e_est(a[0], opts)?;
            cplx(e.value, e.abs_err)
        }
        "m" => {
            let m = specfun::comparison_m_est(a[0], opts)?;
            real(m.value, m.abs_err)
        }
        "digamma" => {
            let v = specfun::digamma(a[0])?;
            real(v, 1e-13 + rounding(v))
        }
        "lngamma" => {
            let v = specfun::ln_gamma(a[0])?;
            real(v, 1e-13 + rounding(v))
        }
        "arccot" => {
            let v = specfun::arccot(a[0])?;
            real(v, rounding(v))
        }
        "l" => {
            let e = fjsums::l_infinite_est(FJArgs::new(a[0], a[1])?, opts)?;
            cplx(e.value, e.abs_err)
        }
        "l-series" => {
            let e = fjsums::l_series(FJArgs::new(a[0], a[1])?, opts)?;
            cplx(e.value, e.abs_err)
        }
        "ln" => {
            let n = index(a[2], "n")?;
            cplx(fjsums::l_truncated(FJArgs::new(a[0], a[1])?, n, opts)?, 2.0 * tol)
        }
        "l-odd" => {
            let e = fjsums::l_odd_est(FJArgsOdd::new(a[0], a[1])?, opts)?;
            cplx(e.value, e.abs_err)
        }
        "s-pi" => {
            let e = fjsums::s_pi_est(a[0], opts)?;
            real(e.value, e.abs_err)
        }
        "rotated-l" => {
            let e = fjsums::rotated_l_est(FJArgs::new(a[0], a[1])?, opts)?;
            cplx(e.value, e.abs_err)
        }
        "sn" => {
            let n = index(a[0], "n")?;
            let v = fjsums::sine_partial_sum(a[1], n);
            real(v, 4.0 * f64::EPSILON * (n as f64 + 4.0))
        }
        "dirichlet" => {
            let n = index(a[1], "n")?;
            let v = dirichlet::dirichlet_kernel(a[0], n);
            real(v, 4.0 * f64::EPSILON * (2.0 * n as f64 + 1.0))
        }
        "ssi" => {
            let e = dirichlet::ssi_est(KernelArgs::new(a[0], a[1]), opts)?;
            real(e.value, e.abs_err)
        }
        "eci" | "sci" | "cci" | "eci-laplace" | "eci-identity" => {
            let args = KernelArgs::new(a[0], a[1]);
            let e = match name.as_str() {
                "eci-laplace" => dirichlet::eci_laplace_est(args, opts)?,
                "eci-identity" => dirichlet::eci_identity_est(args, opts)?,
                _ => dirichlet::eci_est(args, opts)?,
            };
            match name.as_str() {
                "sci" => real(e.value.im, e.abs_err),
                "cci" => real(e.value.re, e.abs_err),
                _ => cplx(e.value, e.abs_err),
            }
        }
        "rn" => {
            let n = index(a[0], "n")?;
            let z = ComplexValue::new(a[1], a[2]);
            let pt = TaylorPoint::new(z, n)?;
            let r = bounds::log_taylor_remainder(pt, opts)?;
            let scale = z.powi(i32::try_from(n + 1).map_err(|_| usage("n too large for rn"))?);
            cplx(r.value * scale, r.abs_err * scale.abs())
        }
        other => {
            let b: BoundId = other.parse()?;
            let v = bound_value(b, a, opts)?;
            match v {
                Some(v) => real(v, tol.max(rounding(v))),
                None => {
                    return Err(CliError {
                        code: EXIT_DOMAIN,
                        message: format!("{b} is not asserted at {a:?}"),
                    })
                }
            }
        }
    })
}

/// Value of a bound at its sweep coordinates; `None` outside its
/// conditional domain. Taylor bounds are absolute, with `z = r e^{iθ}`.
pub fn bound_value(b: BoundId, c: &[f64], opts: &EvalOptions) -> CliResult<Option<f64>> {
    use BoundId::*;
    verify::sweep::check_point(b, c).map_err(|e| CliError {
        code: EXIT_DOMAIN,
        message: e.to_string(),
    })?;
    Ok(match b {
        ArccotEnvelope => Some(bounds::arccot_envelope(c[0], c[1])?),
        MEnvelope => Some(bounds::m_envelope(c[0], c[1], opts)?),
        LogEnvelope => bounds::log_envelope(c[0], c[1]).ok(),
        FracEnvelope => Some(bounds::frac_envelope(c[0], c[1])?),
        SecEnvelope => Some(bounds::sec_envelope(c[0], c[1])?),
        EbycosRhs => Some(bounds::ebycos_rhs(c[0], c[1], opts)?),
        b if b.is_classical() => {
            let n = c[0] as u64;
            bounds::classical_applies(b, n, c[1])
                .then(|| bounds::classical_bounds(n, c[1]).map(|cb| cb.get(b).expect("classical bound")))
                .transpose()?
        }
        _ => {
            let pt = TaylorPoint::new(ComplexValue::from_polar(c[1], c[2]), c[0] as u64)?;
            bounds::taylor_bounds(pt)?.value(b)
        }
    })
}

/// Parses `name=lo:hi:count[:log][:open]`, `name=a,b,c` or `name=lo..hi`.
pub fn parse_axis(spec: &str) -> CliResult<Axis> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or_else(|| usage(format!("axis '{spec}' must look like name=lo:hi:count")))?;
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("bad number '{s}' in axis '{spec}'")))
    };
    let axis = if let Some((lo, hi)) = rest.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if !(lo >= 0.0 && lo <= hi && lo == lo.floor() && hi == hi.floor()) {
            return Err(usage(format!("integer range '{rest}' must be lo..hi with 0 <= lo <= hi")));
        }
        Axis::integers(name, lo as u64, hi as u64)
    } else if rest.contains(':') {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() < 3 {
            return Err(usage(format!("axis '{spec}' needs lo:hi:count")));
        }
        let count = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad count in axis '{spec}'")))?;
        let mut axis = Axis::linear(name, num(parts[0])?, num(parts[1])?, count);
        for flag in &parts[3..] {
            if let Axis::Range {
                spacing, endpoints, ..
            } = &mut axis
            {
                match *flag {
                    "log" => *spacing = verify::Spacing::Log,
                    "open" => *endpoints = verify::Endpoints::OpenHalfStep,
                    f => return Err(usage(format!("unknown axis flag '{f}'"))),
                }
            }
        }
        axis
    } else {
        Axis::values(name, rest.split(',').map(num).collect::<CliResult<Vec<_>>>()?)
    };
    axis.validate()?;
    Ok(axis)
}

/// Default grid of a bound: a short parameter list and 400 open-grid
/// points along the angle.
pub fn default_grid(b: BoundId) -> GridSpec {
    use BoundId::*;
    const N: usize = 400;
    let params = |name: &str, v: &[f64]| Axis::values(name, v.to_vec());
    match b {
        ArccotEnvelope => GridSpec::new(vec![Axis::integers("mu", 1, 50), Axis::open("x", 0.0, PI, N)]),
        MEnvelope | LogEnvelope | FracEnvelope => GridSpec::new(vec![
            params("mu", &[-0.4, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0]),
            Axis::open("x", 0.0, PI, N),
        ]),
        SecEnvelope | EbycosRhs => GridSpec::new(vec![
            params("lambda", &[0.5, 1.0, 2.0, 5.0, 12.0, 50.0]),
            Axis::open("x", 0.0, FRAC_PI_2, N),
        ]),
        b if b.is_classical() => GridSpec::new(vec![Axis::integers("n", 1, 20), Axis::open("x", 0.0, PI, N)]),
        _ => GridSpec::new(vec![
            params("n", &[1.0, 10.0, 100.0]),
            Axis::linear("r", 0.0, 1.0, 21),
            Axis::open("theta", -PI, PI, N),
        ]),
    }
}

fn random_points(b: BoundId, seed: u64, count: usize) -> (Vec<Vec<f64>>, &'static str) {
    use BoundId::*;
    match b {
        ArccotEnvelope | MEnvelope | LogEnvelope | FracEnvelope => {
            (sample::fj_points(seed, count), "fj: mu+1/2 log-uniform [1e-3,1e3], x mostly uniform (0,pi)")
        }
        SecEnvelope | EbycosRhs => (sample::eci_points(seed, count), "eci: lambda log-uniform [0.5,50], x uniform (0,pi/2)"),
        b if b.is_classical() => (sample::classical_points(seed, count), "classical: n uniform 1..=50, x uniform (0,pi)"),
        _ => (sample::taylor_points(seed, count), "taylor: four regimes in the closed unit disk"),
    }
}

/// JSON document of a sweep report.
pub fn report_json(r: &InequalityReport, opts: &EvalOptions) -> serde_json::Value {
    json!({
        "bound": r.bound.name(),
        "grid": r.domain,
        "coordinates": r.coordinates,
        "samples": r.samples,
        "skipped": r.skipped,
        "violations": r.violations,
        "near_equalities": r.near_equalities,
        "min_margin": r.min_margin,
        "argmin": r.argmin,
        "max_path_gap": r.max_path_gap,
        "elapsed_s": r.elapsed_s,
        "tolerances": {
            "abs_tol": opts.abs_tol,
            "truncation_floor": opts.truncation_floor,
            "max_subdivisions": opts.max_subdivisions,
            "budget_at_argmin": r.budget_at_argmin,
            "max_budget": r.max_budget,
        },
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// Text summary of a sweep report.
pub fn report_text(r: &InequalityReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "bound           {}", r.bound);
    let _ = writeln!(s, "samples         {} ({} skipped)", r.samples, r.skipped);
    let _ = writeln!(s, "violations      {}", r.violations);
    let _ = writeln!(s, "near equalities {}", r.near_equalities);
    let _ = writeln!(s, "min margin      {:.6e} at {:?} ({})", r.min_margin, r.argmin, r.coordinates.join(", "));
    if let Some(g) = r.max_path_gap {
        let _ = writeln!(s, "max path gap    {g:.3e}");
    }
    let _ = writeln!(s, "elapsed         {:.3} s", r.elapsed_s);
    s
}

fn csv_field(v: Option<f64>) -> String {
    match v {
        Some(v) if v.is_finite() => format!("{v:.16e}"),
        _ => String::new(),
    }
}

fn csv(header: &[&str], rows: &[Vec<Option<f64>>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|v| csv_field(*v)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub const FIG1_COLUMNS: [&str; 10] = [
    "x",
    "S_n",
    "arccot_upper",
    "arccot_lower",
    "fejer1928",
    "turan1952",
    "ak2003",
    "bk1998",
    "koumandos2012",
    "alkou12",
];

pub const FIG2_COLUMNS: [&str; 5] = ["x", "lambda_Cci", "lambda_Sci_minus_1", "sec_x", "neg_sec_x"];

/// `S_n(x, 0)`, the arccot envelope around the sawtooth and the classical
/// minorants on an open grid over `(0, π)`. Minorants are left empty outside
/// their validity windows.
pub fn figure1_csv(n: u64, points: usize) -> crate::Result<String> {
    if n == 0 || points == 0 {
        return Err(Error::Config("figure 1 needs n >= 1 and at least one point".into()));
    }
    let mut rows = Vec::with_capacity(points);
    for x in Axis::open("x", 0.0, PI, points).points() {
        let s = fjsums::sine_partial_sum(x, n);
        let saw = fjsums::sawtooth(x);
        let env = bounds::arccot_envelope(n as f64, x)?;
        let cb = bounds::classical_bounds(n, x)?;
        let minorant = |b: BoundId| bounds::classical_applies(b, n, x).then(|| cb.get(b).expect("classical bound"));
        rows.push(vec![
            Some(x),
            Some(s),
            Some(saw + env),
            Some(saw - env),
            minorant(BoundId::Fejer1928),
            minorant(BoundId::Turan1952),
            minorant(BoundId::AK2003),
            minorant(BoundId::BK1998),
            minorant(BoundId::Koumandos2012),
            minorant(BoundId::AlKou12),
        ]);
    }
    Ok(csv(&FIG1_COLUMNS, &rows))
}

/// `λ Cci`, `λ Sci − 1` and `±sec x` on an open grid over `(0, π/2)`.
pub fn figure2_csv(lambda: f64, points: usize, opts: &EvalOptions) -> crate::Result<String> {
    if points == 0 || !lambda.is_finite() {
        return Err(Error::Config("figure 2 needs a finite lambda and at least one point".into()));
    }
    let mut rows = Vec::with_capacity(points);
    for x in Axis::open("x", 0.0, FRAC_PI_2, points).points() {
        let e = dirichlet::eci(KernelArgs::new(x, lambda), opts)? * lambda;
        let sec = 1.0 / x.cos();
        rows.push(vec![Some(x), Some(e.re), Some(e.im - 1.0), Some(sec), Some(-sec)]);
    }
    Ok(csv(&FIG2_COLUMNS, &rows))
}

fn emit(out: &mut dyn Write, json: bool, value: serde_json::Value, text: String) -> CliResult<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
    } else {
        write!(out, "{text}")?;
    }
    Ok(())
}

/// Runs a parsed command, writing to `out`; returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let opts = resolve_options(cli.abs_tol)?;
    match cli.command {
        Command::Eval { function, args } => {
            if function == "list" {
                for (name, args, what) in FUNCTIONS {
                    writeln!(out, "{name:<14} {args:<10} {what}")?;
                }
                for b in BoundId::ALL {
                    let names = verify::sweep::coordinate_names(b).join(" ");
                    writeln!(out, "{:<14} {names:<10} bound", b.name())?;
                }
                return Ok(EXIT_OK);
            }
            let (value, err) = eval_function(&function, &args, &opts)?;
            emit(
                out,
                cli.json,
                json!({ "function": function, "args": args, "value": value, "abs_err": err,
                        "version": env!("CARGO_PKG_VERSION") }),
                format!("{function}({}) = {value}\nabs_err <= {err:.3e}\n", args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")),
            )?;
            Ok(EXIT_OK)
        }
        Command::Sweep {
            bound,
            axes,
            random,
            seed,
        } => {
            let b: BoundId = bound.parse().map_err(|e: Error| usage(e.to_string()))?;
            let report = match (random, axes.is_empty()) {
                (Some(_), false) => return Err(usage("--random and --axis are mutually exclusive")),
                (Some(count), true) => {
                    let (points, law) = random_points(b, seed, count);
                    let domain = SampleDomain::Random {
                        law: law.into(),
                        seed,
                        count,
                    };
                    verify::sweep_points(b, &points, domain, &opts)?
                }
                (None, true) => verify::sweep(b, &default_grid(b), &opts)?,
                (None, false) => {
                    let grid = GridSpec::new(axes.iter().map(|a| parse_axis(a)).collect::<CliResult<_>>()?);
                    verify::sweep(b, &grid, &opts)?
                }
            };
            emit(out, cli.json, report_json(&report, &opts), report_text(&report))?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Thresholds => {
            let t0 = verify::find_threshold(Threshold::T0, &opts)?;
            let t1 = verify::find_threshold(Threshold::T1, &opts)?;
            let ok = t0.residual.abs() <= 1e-12 && t1.residual.abs() <= 1e-12 && t1.root < t0.root;
            let text = format!(
                "t0 = {:.13}  (M(t) = arccot t, residual {:.1e})\nt1 = {:.13}  (|E(t)| = arccot t, residual {:.1e})\n",
                t0.root, t0.residual, t1.root, t1.residual
            );
            emit(out, cli.json, json!({ "t0": t0, "t1": t1, "version": env!("CARGO_PKG_VERSION") }), text)?;
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Identities => {
            let rows = verify::check_identities(&opts)?;
            let mut text = String::new();
            for r in &rows {
                let _ = writeln!(
                    text,
                    "{} {:<28} residual {:.3e} (tol {:.0e}) worst at {:?}",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.name,
                    r.residual,
                    r.tolerance,
                    r.worst_point
                );
            }
            let ok = rows.iter().all(|r| r.passed);
            emit(out, cli.json, json!({ "identities": rows, "version": env!("CARGO_PKG_VERSION") }), text)?;
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Limits => {
            let tables = verify::check_limits(&opts)?;
            let mut text = String::new();
            for t in &tables {
                let _ = writeln!(text, "{} (nu = {})", t.name, t.nu);
                for (s, d) in t.scales.iter().zip(&t.deviations) {
                    let _ = writeln!(text, "  {s:>8}  {d:.6e}");
                }
                let _ = writeln!(text, "  strictly decreasing: {}", t.strictly_decreasing);
            }
            let ok = tables.iter().all(|t| t.strictly_decreasing);
            emit(out, cli.json, json!({ "limits": tables, "version": env!("CARGO_PKG_VERSION") }), text)?;
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Figure {
            which,
            n,
            lambda,
            points,
            out: path,
        } => {
            let data = match which {
                FigureId::Fig1 => figure1_csv(n, points)?,
                FigureId::Fig2 => figure2_csv(lambda, points, &opts)?,
            };
            match path {
                Some(p) => std::fs::write(p, data)?,
                None => out.write_all(data.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args`, runs the command and reports errors on `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
