use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::grid::GridSpec;
use crate::bounds::{self, BoundId, TaylorPoint};
use crate::complex::ComplexValue;
use crate::consts::{FRAC_PI_2, PI};
use crate::dirichlet::{eci_est, eci_identity_est, KernelArgs};
use crate::error::{Error, Result};
use crate::fjsums::{l_infinite_est, l_series, rotated_l_est, sawtooth, sine_partial_sum, FJArgs};
use crate::specfun::EvalOptions;

const EPS: f64 = f64::EPSILON;

/// Margin of one inequality at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sample {
    /// Bound minus the absolute value of the estimated quantity (for lower
    /// bounds on `S_n`: `S_n` minus the bound).
    pub margin: f64,
    /// Combined evaluation error of both sides.
    pub budget: f64,
    /// Disagreement between two independent evaluation paths, if computed.
    pub path_gap: Option<f64>,
}

/// Names of the coordinates a bound is sampled over.
pub fn coordinate_names(bound: BoundId) -> &'static [&'static str] {
    use BoundId::*;
    match bound {
        ArccotEnvelope | MEnvelope | LogEnvelope | FracEnvelope => &["mu", "x"],
        SecEnvelope | EbycosRhs => &["lambda", "x"],
        b if b.is_classical() => &["n", "x"],
        _ => &["n", "r", "theta"],
    }
}

fn is_index(v: f64) -> bool {
    v >= 1.0 && v == v.floor() && v < 1e9
}

/// Rejects points outside the region where a bound is stated at all.
/// Points inside that region but outside a conditional sub-domain (for
/// example the log envelope needing `(2μ+1) sin(x/2) < 1`) are skipped by
/// [`evaluate_margin`] instead.
pub fn check_point(bound: BoundId, c: &[f64]) -> Result<()> {
    use BoundId::*;
    let names = coordinate_names(bound);
    if c.len() != names.len() || c.iter().any(|v| !v.is_finite()) {
        return Err(Error::Config(format!(
            "{bound} expects finite coordinates ({})",
            names.join(", ")
        )));
    }
    let bad = |what: &str| Err(Error::Config(format!("{bound}: {what} at {c:?}")));
    match bound {
        ArccotEnvelope => {
            if !(c[0] >= -0.5) || !(0.0..=PI).contains(&c[1]) {
                return bad("need mu >= -1/2 and 0 <= x <= pi");
            }
        }
        MEnvelope | LogEnvelope | FracEnvelope => {
            if !(c[0] > -0.5) || !(c[1] > 0.0 && c[1] < PI) {
                return bad("need mu > -1/2 and 0 < x < pi");
            }
        }
        SecEnvelope | EbycosRhs => {
            let lam_ok = if bound == SecEnvelope { c[0] != 0.0 } else { c[0] > 0.0 };
            if !lam_ok || !(c[1] > 0.0 && c[1] < FRAC_PI_2) {
                return bad("need admissible lambda and 0 < x < pi/2");
            }
        }
        b if b.is_classical() => {
            if !is_index(c[0]) || !(c[1] > 0.0 && c[1] < PI) {
                return bad("need integer n >= 1 and 0 < x < pi");
            }
        }
        _ => {
            if !is_index(c[0]) || !(0.0..=1.0).contains(&c[1]) {
                return bad("need integer n >= 1 and 0 <= r <= 1");
            }
            if c[1] == 1.0 && c[2].rem_euclid(2.0 * PI) == 0.0 {
                return bad("z = 1 is excluded");
            }
        }
    }
    Ok(())
}

fn l_with_cross_check(x: f64, mu: f64, opts: &EvalOptions) -> Result<(f64, f64, f64)> {
    let args = FJArgs::new(x, mu)?;
    let primary = l_infinite_est(args, opts)?;
    let series = l_series(args, opts)?;
    Ok((
        primary.value.abs(),
        primary.abs_err + 8.0 * EPS * primary.value.abs(),
        (primary.value - series.value).abs(),
    ))
}

fn eci_with_cross_check(lambda: f64, x: f64, opts: &EvalOptions) -> Result<(f64, f64, Option<f64>)> {
    let args = KernelArgs::new(x, lambda);
    let direct = eci_est(args, opts)?;
    let gap = if lambda > -1.0 {
        Some((direct.value - eci_identity_est(args, opts)?.value).abs())
    } else {
        None
    };
    let dev = (direct.value - ComplexValue::new(0.0, 1.0 / lambda)).abs();
    Ok((dev, direct.abs_err + 8.0 * EPS * (dev + 1.0 / lambda.abs()), gap))
}

/// Margin of `bound` at coordinates `c`; `None` when the point lies outside
/// the bound's conditional domain.
pub fn evaluate_margin(bound: BoundId, c: &[f64], opts: &EvalOptions) -> Result<Option<Sample>> {
    use BoundId::*;
    check_point(bound, c)?;
    let tol = opts.abs_tol;
    let sample = match bound {
        ArccotEnvelope => {
            let (mu, x) = (c[0], c[1]);
            let b = bounds::arccot_envelope(mu, x)?;
            let (q, err) = if x == 0.0 {
                (FRAC_PI_2, 0.0)
            } else if mu == 0.0 || is_index(mu) {
                let n = mu as u64;
                let s = if n == 0 { 0.0 } else { sine_partial_sum(x, n) };
                ((sawtooth(x) - s).abs(), 4.0 * EPS * (n as f64 + 4.0))
            } else {
                let r = rotated_l_est(FJArgs::new(x, mu)?, opts)?;
                (r.value.im.abs(), r.abs_err)
            };
            Sample {
                margin: b - q,
                budget: err + 4.0 * EPS * b,
                path_gap: None,
            }
        }
        MEnvelope | LogEnvelope | FracEnvelope => {
            let (mu, x) = (c[0], c[1]);
            let t = (2.0 * mu + 1.0) * (0.5 * x).sin();
            let (b, b_err) = match bound {
                MEnvelope => (bounds::m_envelope(mu, x, opts)?, tol),
                LogEnvelope => {
                    if !(t < 1.0) {
                        return Ok(None);
                    }
                    let v = bounds::log_envelope(mu, x)?;
                    (v, 4.0 * EPS * v)
                }
                _ => {
                    let v = bounds::frac_envelope(mu, x)?;
                    (v, 4.0 * EPS * v)
                }
            };
            let (q, q_err, gap) = l_with_cross_check(x, mu, opts)?;
            Sample {
                margin: b - q,
                budget: b_err + q_err,
                path_gap: Some(gap),
            }
        }
        SecEnvelope | EbycosRhs => {
            let (lambda, x) = (c[0], c[1]);
            let (b, b_err) = if bound == SecEnvelope {
                let v = bounds::sec_envelope(lambda, x)?;
                (v, 4.0 * EPS * v)
            } else {
                (bounds::ebycos_rhs(lambda, x, opts)?, 2.0 * tol)
            };
            let (q, q_err, gap) = eci_with_cross_check(lambda, x, opts)?;
            Sample {
                margin: b - q,
                budget: b_err + q_err,
                path_gap: gap,
            }
        }
        b if b.is_classical() => {
            let (n, x) = (c[0] as u64, c[1]);
            if !bounds::classical_applies(b, n, x) {
                return Ok(None);
            }
            let cb = bounds::classical_bounds(n, x)?;
            let v = cb.get(b).expect("classical bound");
            let s = sine_partial_sum(x, n);
            let margin = match b {
                FJTuran => v - (s - sawtooth(x)).abs(),
                AKEvenUpper => v - s,
                _ => s - v,
            };
            let mut budget = 4.0 * EPS * (n as f64 + 16.0) * (1.0 + v.abs());
            if b == AlKou12 {
                // 1 − P_n(cos x) cancels for small x; its absolute error is
                // about n·ε, amplified by the cot(x/2) prefactor
                let prefactor = 0.25 * PI * bounds::delta_n(n) / (0.5 * x).tan();
                budget += 4.0 * EPS * (n as f64 + 2.0) * prefactor;
            }
            Sample {
                margin,
                budget,
                path_gap: None,
            }
        }
        _ => {
            let (n, r, theta) = (c[0] as u64, c[1], c[2]);
            let pt = TaylorPoint::new(ComplexValue::from_polar(r, theta), n)?;
            let tb = bounds::taylor_bounds(pt)?;
            let Some(b) = tb.normalized(bound) else {
                return Ok(None);
            };
            let rem = bounds::log_taylor_remainder(pt, opts)?;
            Sample {
                margin: b - rem.value.abs(),
                budget: rem.abs_err + 8.0 * EPS * b,
                path_gap: None,
            }
        }
    };
    Ok(Some(sample))
}

/// Where a report's samples came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleDomain {
    Grid(GridSpec),
    Random { law: String, seed: u64, count: usize },
}

/// Outcome of sweeping one inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityReport {
    pub bound: BoundId,
    pub coordinates: Vec<String>,
    pub domain: SampleDomain,
    /// Points where the inequality was evaluated.
    pub samples: usize,
    /// Points outside the bound's conditional domain.
    pub skipped: usize,
    /// Points with `margin < −budget`.
    pub violations: usize,
    /// Points with `|margin| ≤ budget`, i.e. equality within rounding.
    pub near_equalities: usize,
    pub min_margin: f64,
    pub argmin: Vec<f64>,
    pub budget_at_argmin: f64,
    pub max_budget: f64,
    pub max_path_gap: Option<f64>,
    pub elapsed_s: f64,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Evaluates `bound` at every point and reduces to a report. The result does
/// not depend on evaluation order: ties in the minimum go to the
/// lexicographically smallest coordinates.
pub fn sweep_points(
    bound: BoundId,
    points: &[Vec<f64>],
    domain: SampleDomain,
    opts: &EvalOptions,
) -> Result<InequalityReport> {
    opts.validate()?;
    for p in points {
        check_point(bound, p)?;
    }
    let start = Instant::now();
    let results: Vec<Result<Option<Sample>>> =
        points.par_iter().map(|p| evaluate_margin(bound, p, opts)).collect();

    let mut report = InequalityReport {
        bound,
        coordinates: coordinate_names(bound).iter().map(|s| s.to_string()).collect(),
        domain,
        samples: 0,
        skipped: 0,
        violations: 0,
        near_equalities: 0,
        min_margin: f64::INFINITY,
        argmin: Vec::new(),
        budget_at_argmin: 0.0,
        max_budget: 0.0,
        max_path_gap: None,
        elapsed_s: 0.0,
    };
    for (p, r) in points.iter().zip(results) {
        let Some(s) = r? else {
            report.skipped += 1;
            continue;
        };
        report.samples += 1;
        if s.margin < -s.budget {
            report.violations += 1;
        } else if s.margin.abs() <= s.budget {
            report.near_equalities += 1;
        }
        report.max_budget = report.max_budget.max(s.budget);
        if let Some(g) = s.path_gap {
            report.max_path_gap = Some(report.max_path_gap.map_or(g, |m: f64| m.max(g)));
        }
        let better = s.margin < report.min_margin
            || (s.margin == report.min_margin && lex_cmp(p, &report.argmin) == Ordering::Less);
        if better || report.argmin.is_empty() {
            report.min_margin = s.margin;
            report.argmin = p.clone();
            report.budget_at_argmin = s.budget;
        }
    }
    report.elapsed_s = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Sweeps `bound` over a tensor grid.
pub fn sweep(bound: BoundId, grid: &GridSpec, opts: &EvalOptions) -> Result<InequalityReport> {
    grid.validate()?;
    sweep_points(bound, &grid.points(), SampleDomain::Grid(grid.clone()), opts)
}
