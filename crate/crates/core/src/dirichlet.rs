//! Dirichlet kernel with a continuous frequency parameter and its
//! integrated forms
//!
//! - `Ssi(x, λ) = ∫₀ˣ sin(λt)/sin t dt`, `0 < x < π`
//! - `Eci(x, λ) = ∫₀ˣ e^{iλt}/cos t dt = Cci + i·Sci`, `0 < x < π/2`
//!
//! `Eci` has three routes: direct quadrature, the Laplace representation
//! `i∫₀^∞ e^{-λu}(1/cosh u − e^{iλx}/cosh(u − ix)) du`, and the identity
//! `Eci(x, λ) = e^{ixλ} 𝕃(x − π/2, λ) + i·Sπ(λ)`.

use crate::complex::ComplexValue;
use crate::consts::{FRAC_PI_2, PI};
use crate::error::{Error, Result};
use crate::fjsums::{dist_to_lattice, inverse_distance_to_segment, l_odd_est, s_pi_est, FJArgsOdd};
use crate::quad::{integrate_finite, integrate_laplace, Estimate, LaplaceShape};
use crate::specfun::EvalOptions;

/// Angle and continuous frequency of an integrated kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelArgs {
    pub x: f64,
    pub lambda: f64,
}

impl KernelArgs {
    pub fn new(x: f64, lambda: f64) -> Self {
        Self { x, lambda }
    }

    fn check(&self, func: &'static str, hi: f64) -> Result<()> {
        if !(self.x > 0.0 && self.x < hi) {
            return Err(Error::domain(func, format!("x = {} outside (0, {hi})", self.x)));
        }
        if !self.lambda.is_finite() {
            return Err(Error::domain(func, "lambda must be finite"));
        }
        Ok(())
    }
}

/// Half-period panel length for an integrand oscillating like `e^{iλt}`.
fn oscillation_panel(lambda: f64) -> Option<f64> {
    if lambda.abs() > 1.0 {
        Some(PI / lambda.abs())
    } else {
        None
    }
}

/// Dirichlet kernel `D_n(x) = sin((n + ½)x)/sin(x/2) = 1 + 2Σ_{k=1}^n cos kx`.
pub fn dirichlet_kernel(x: f64, n: u64) -> f64 {
    let d = dist_to_lattice(x, 2.0 * PI);
    if d < 1e-6 {
        // ratio form loses accuracy near its removable singularity
        return 1.0 + 2.0 * (1..=n).map(|k| (k as f64 * x).cos()).sum::<f64>();
    }
    ((n as f64 + 0.5) * x).sin() / (0.5 * x).sin()
}

/// `Ssi(x, λ) = ∫₀ˣ sin(λt)/sin t dt` with error estimate.
pub fn ssi_est(args: KernelArgs, opts: &EvalOptions) -> Result<Estimate<f64>> {
    args.check("Ssi", PI)?;
    let KernelArgs { x, lambda } = args;
    integrate_finite(
        |t: f64| {
            if t == 0.0 {
                lambda
            } else {
                (lambda * t).sin() / t.sin()
            }
        },
        0.0,
        x,
        oscillation_panel(lambda),
        opts,
        "Ssi",
    )
}

/// `Ssi(x, λ)`, the integrated Dirichlet kernel with frequency `λ`.
pub fn ssi(args: KernelArgs, opts: &EvalOptions) -> Result<f64> {
    Ok(ssi_est(args, opts)?.value)
}

/// `Eci(x, λ)` by direct quadrature of `e^{iλt}/cos t` on `[0, x]`.
pub fn eci_est(args: KernelArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    args.check("Eci", FRAC_PI_2)?;
    let KernelArgs { x, lambda } = args;
    integrate_finite(
        |t: f64| ComplexValue::cis(lambda * t) / t.cos(),
        0.0,
        x,
        oscillation_panel(lambda),
        opts,
        "Eci",
    )
}

/// `Eci(x, λ) = Cci(x, λ) + i·Sci(x, λ)`.
pub fn eci(args: KernelArgs, opts: &EvalOptions) -> Result<ComplexValue> {
    Ok(eci_est(args, opts)?.value)
}

/// `Sci(x, λ) = ∫₀ˣ sin(λt)/cos t dt`.
pub fn sci(args: KernelArgs, opts: &EvalOptions) -> Result<f64> {
    Ok(eci(args, opts)?.im)
}

/// `Cci(x, λ) = ∫₀ˣ cos(λt)/cos t dt`.
pub fn cci(args: KernelArgs, opts: &EvalOptions) -> Result<f64> {
    Ok(eci(args, opts)?.re)
}

/// `Eci(x, λ)` from its Laplace representation; needs `λ > −1`.
pub fn eci_laplace_est(args: KernelArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    args.check("Eci (Laplace)", FRAC_PI_2)?;
    let KernelArgs { x: y, lambda } = args;
    if !(lambda > -1.0) {
        return Err(Error::domain("Eci (Laplace)", format!("need lambda > -1, got {lambda}")));
    }
    let decay = lambda + 1.0;
    let upper = -opts.truncation_floor.ln() / decay;
    let phase = ComplexValue::cis(lambda * y);
    let rot_m = ComplexValue::cis(-y);
    let rot_p = ComplexValue::cis(y);
    let shape = LaplaceShape {
        decay,
        near_scale: (FRAC_PI_2 - y).min(FRAC_PI_2),
        envelope: 2.0 * (1.0 + inverse_distance_to_segment(-ComplexValue::cis(-2.0 * y), (-2.0 * upper).exp())),
    };
    let est = integrate_laplace(
        |u: f64| {
            let q = (-2.0 * u).exp();
            // 1/cosh u = 2e^{-u}/(1 + e^{-2u}); 1/cosh(u − iy) = 2e^{-u}/(e^{-iy} + e^{-2u}e^{iy})
            let a = ComplexValue::real(1.0 / (1.0 + q));
            let b = phase / (rot_m + rot_p * q);
            (a - b) * (2.0 * (-decay * u).exp())
        },
        shape,
        opts,
        "Eci (Laplace)",
    )?;
    Ok(est.map(ComplexValue::mul_i))
}

/// `Eci(x, λ)` through `e^{ixλ} 𝕃(x − π/2, λ) + i·Sπ(λ)`; needs `λ > −1`.
pub fn eci_identity_est(args: KernelArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    args.check("Eci (identity)", FRAC_PI_2)?;
    let KernelArgs { x, lambda } = args;
    let l = l_odd_est(FJArgsOdd::new(x - FRAC_PI_2, lambda)?, opts)?;
    let s = s_pi_est(lambda, opts)?;
    Ok(Estimate {
        value: ComplexValue::cis(x * lambda) * l.value + ComplexValue::new(0.0, s.value),
        abs_err: l.abs_err + s.abs_err,
    })
}

/// `Im(e^{ixμ} L(x, μ))` computed as `π/2 − ∫₀ˣ sin((μ + ½)y)/(2 sin(y/2)) dy`.
pub fn series_remainder_via_kernel(x: f64, mu: f64, opts: &EvalOptions) -> Result<f64> {
    if !(x > 0.0 && x < PI) {
        return Err(Error::domain("series_remainder", format!("x = {x} outside (0, π)")));
    }
    if !(mu > -1.0) {
        return Err(Error::domain("series_remainder", format!("need mu > -1, got {mu}")));
    }
    // substitute y = 2t: the integral is Ssi(x/2, 2μ + 1)
    Ok(FRAC_PI_2 - ssi(KernelArgs::new(0.5 * x, 2.0 * mu + 1.0), opts)?)
}

/// `∫ₓ^π cos((μ + ½)y)/(2 sin(y/2)) dy`, the kernel term of the cosine-sum
/// counterpart: `Re(e^{ixμ} L(x, μ))` minus this equals `−Sπ(2μ+1) cos πμ`.
pub fn cosine_kernel_tail(x: f64, mu: f64, opts: &EvalOptions) -> Result<f64> {
    if !(x > 0.0 && x <= PI) {
        return Err(Error::domain("cosine_kernel_tail", format!("x = {x} outside (0, π]")));
    }
    let lambda = 2.0 * mu + 1.0;
    let est = integrate_finite(
        |t: f64| (lambda * t).cos() / t.sin(),
        0.5 * x,
        FRAC_PI_2,
        oscillation_panel(lambda),
        opts,
        "cosine_kernel_tail",
    )?;
    Ok(est.value)
}
