//! Identity residuals and limit-relation tables at fixed sample sets.
//!
//! Sample sets:
//!
//! | check | points |
//! |---|---|
//! | `L_n` split | `(x, μ, n)` ∈ {(1, 0, 10), (2.5, 0.5, 25), (0.1, 3, 100)} |
//! | Im constancy | `μ` ∈ {0.5, 3}, 50 midpoints of `(0, π)` |
//! | Re value | `μ = 1.3`, `x` ∈ {0.5, 1.5, 2.5} |
//! | Eci via 𝕃 | `(x, λ)` ∈ {(0.5, 3), (1.2, 8)} |
//! | Sπ digamma | `λ` ∈ {0, 0.5, 1, 2, 5, 10} |
//! | E ODE | `t` ∈ {0.5, 1, 3} |
//! | 𝕃 ODE | `(x, λ)` ∈ {(0.8, 3), (0.3, 1.5), (2, 6)} |
//!
//! Limit tables use the scaling parameters 10, 100, 1000 with `ν = 1` for
//! `L → E` and `λ Eci → i(1 − e^{iν})`, and `ν = 2` for `Ssi → Si`.

use serde::Serialize;

use super::grid::Axis;
use crate::complex::ComplexValue;
use crate::consts::PI;
use crate::dirichlet::{cosine_kernel_tail, eci, eci_identity_est, ssi, KernelArgs};
use crate::error::Result;
use crate::fjsums::{l_infinite, l_odd, l_truncated, l_truncated_direct, rotated_l, s_pi, FJArgs, FJArgsOdd};
use crate::specfun::{digamma, exp_integral_e, sine_integral, EvalOptions};

/// Residual tolerance for identities evaluated to quadrature accuracy.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Residual tolerance for the finite-difference ODE checks.
pub const ODE_TOL: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityResidual {
    pub name: &'static str,
    /// Largest residual over the sample set.
    pub residual: f64,
    pub tolerance: f64,
    /// Sample point attaining the largest residual.
    pub worst_point: Vec<f64>,
    pub passed: bool,
}

fn residual(name: &'static str, tolerance: f64, rows: Vec<(Vec<f64>, f64)>) -> IdentityResidual {
    let (worst_point, residual) = rows
        .into_iter()
        .fold((Vec::new(), f64::NEG_INFINITY), |acc, (p, r)| {
            if r > acc.1 || r.is_nan() {
                (p, r)
            } else {
                acc
            }
        });
    IdentityResidual {
        name,
        residual,
        tolerance,
        worst_point,
        passed: residual <= tolerance,
    }
}

fn l_split(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for (x, mu, n) in [(1.0, 0.0, 10u64), (2.5, 0.5, 25), (0.1, 3.0, 100)] {
        let via = l_truncated(FJArgs::new(x, mu)?, n, opts)?;
        let direct = l_truncated_direct(x, mu, n)?;
        rows.push((vec![x, mu, n as f64], (via - direct).abs()));
    }
    Ok(residual("L_n split", 1e-10, rows))
}

/// Spread of `Im(e^{ixμ} L) + ∫₀ˣ sin((μ+½)y)/(2 sin(y/2)) dy` over `x`.
pub fn im_constancy_spread(mu: f64, opts: &EvalOptions) -> Result<f64> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for x in Axis::open("x", 0.0, PI, 50).points() {
        let v = rotated_l(FJArgs::new(x, mu)?, opts)?.im + ssi(KernelArgs::new(0.5 * x, 2.0 * mu + 1.0), opts)?;
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok(hi - lo)
}

fn im_constancy(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for mu in [0.5, 3.0] {
        rows.push((vec![mu], im_constancy_spread(mu, opts)?));
    }
    Ok(residual("Im e^{ix mu} L constancy", 1e-9, rows))
}

fn re_value(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mu = 1.3;
    let target = -s_pi(2.0 * mu + 1.0, opts)? * (PI * mu).cos();
    let mut rows = Vec::new();
    for x in [0.5, 1.5, 2.5] {
        let lhs = rotated_l(FJArgs::new(x, mu)?, opts)?.re - cosine_kernel_tail(x, mu, opts)?;
        rows.push((vec![x, mu], (lhs - target).abs()));
    }
    Ok(residual("Re e^{ix mu} L value", 1e-9, rows))
}

fn eci_via_l(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for (x, lambda) in [(0.5, 3.0), (1.2, 8.0)] {
        let a = KernelArgs::new(x, lambda);
        rows.push((vec![x, lambda], (eci(a, opts)? - eci_identity_est(a, opts)?.value).abs()));
    }
    Ok(residual("Eci via L_odd", 1e-9, rows))
}

fn s_pi_digamma(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for lambda in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let psi = 0.5 * (digamma(0.25 * (lambda + 3.0))? - digamma(0.25 * (lambda + 1.0))?);
        rows.push((vec![lambda], (s_pi(lambda, opts)? - psi).abs()));
    }
    Ok(residual("S_pi digamma form", 1e-10, rows))
}

/// `|E'(t) + iE(t) + 1/t|` with a central difference.
pub fn e_ode_residual(t: f64, opts: &EvalOptions) -> Result<f64> {
    let h = 1e-4 * t.max(1.0);
    let d = (exp_integral_e(t + h, opts)? - exp_integral_e(t - h, opts)?) / (2.0 * h);
    Ok((d + exp_integral_e(t, opts)?.mul_i() + ComplexValue::real(1.0 / t)).abs())
}

/// `|𝕃'ₓ(x, λ) + iλ𝕃(x, λ) + 1/sin x|` with a central difference.
pub fn l_odd_ode_residual(x: f64, lambda: f64, opts: &EvalOptions) -> Result<f64> {
    let h = 1e-4;
    let f = |y: f64| l_odd(FJArgsOdd::new(y, lambda)?, opts);
    let d = (f(x + h)? - f(x - h)?) / (2.0 * h);
    Ok((d + f(x)?.mul_i() * lambda + ComplexValue::real(1.0 / x.sin())).abs())
}

fn e_ode(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for t in [0.5, 1.0, 3.0] {
        rows.push((vec![t], e_ode_residual(t, opts)?));
    }
    Ok(residual("E ODE", ODE_TOL, rows))
}

fn l_odd_ode(opts: &EvalOptions) -> Result<IdentityResidual> {
    let mut rows = Vec::new();
    for (x, lambda) in [(0.8, 3.0), (0.3, 1.5), (2.0, 6.0)] {
        rows.push((vec![x, lambda], l_odd_ode_residual(x, lambda, opts)?));
    }
    Ok(residual("L_odd ODE", ODE_TOL, rows))
}

/// Every identity residual at its published sample set.
pub fn check_identities(opts: &EvalOptions) -> Result<Vec<IdentityResidual>> {
    opts.validate()?;
    Ok(vec![
        l_split(opts)?,
        im_constancy(opts)?,
        re_value(opts)?,
        eci_via_l(opts)?,
        s_pi_digamma(opts)?,
        e_ode(opts)?,
        l_odd_ode(opts)?,
    ])
}

/// Deviations from a limit relation along growing scaling parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitTable {
    pub name: &'static str,
    pub nu: f64,
    pub scales: Vec<f64>,
    pub deviations: Vec<f64>,
    pub strictly_decreasing: bool,
}

/// Scaling parameters of every limit table.
pub const LIMIT_SCALES: [f64; 3] = [10.0, 100.0, 1000.0];

fn table(name: &'static str, nu: f64, f: impl Fn(f64) -> Result<f64>) -> Result<LimitTable> {
    let deviations = LIMIT_SCALES.iter().map(|&s| f(s)).collect::<Result<Vec<_>>>()?;
    let strictly_decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
    Ok(LimitTable {
        name,
        nu,
        scales: LIMIT_SCALES.to_vec(),
        deviations,
        strictly_decreasing,
    })
}

/// The three limit-relation tables.
pub fn check_limits(opts: &EvalOptions) -> Result<Vec<LimitTable>> {
    opts.validate()?;
    let e1 = exp_integral_e(1.0, opts)?;
    let si2 = sine_integral(2.0, opts)?;
    let target = (ComplexValue::ONE - ComplexValue::cis(1.0)).mul_i();
    Ok(vec![
        table("L(nu/mu, mu) -> E(nu)", 1.0, |mu| {
            Ok((l_infinite(FJArgs::new(1.0 / mu, mu)?, opts)? - e1).abs())
        })?,
        table("Ssi(nu/lambda, lambda) -> Si(nu)", 2.0, |lambda| {
            Ok((ssi(KernelArgs::new(2.0 / lambda, lambda), opts)? - si2).abs())
        })?,
        table("lambda Eci(nu/lambda, lambda) -> i(1 - e^{i nu})", 1.0, |lambda| {
            Ok((eci(KernelArgs::new(1.0 / lambda, lambda), opts)? * lambda - target).abs())
        })?,
    ])
}
