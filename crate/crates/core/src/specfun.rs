//! One-variable special functions: sine and cosine integrals, the
//! exponential integral `E(t) = ∫₀^∞ e^{-tu}/(u − i) du`, the comparison
//! function `M(t) = ∫₀^∞ e^{-tu}/√(u²+1) du`, digamma, log-gamma, arccot.
//!
//! Si and Cin use their power series for small arguments. For larger
//! arguments Si and Ci are recovered from `E(t)` through
//! `e^{it} E(t) = −Ci(t) − i·si(t)`.

use serde::Serialize;

use crate::complex::ComplexValue;
use crate::consts::{EULER_GAMMA, FRAC_PI_2, PI};
use crate::error::{Error, Result};
use crate::quad::{integrate_laplace, Estimate, LaplaceShape};

/// Accuracy controls shared by every quadrature and series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalOptions {
    /// Target absolute error of each evaluation.
    pub abs_tol: f64,
    /// Bisection budget per initial quadrature panel.
    pub max_subdivisions: usize,
    /// Relative cutoff `e^{-σU}` at which semi-infinite integrals are truncated.
    pub truncation_floor: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_subdivisions: 64,
            truncation_floor: 1e-18,
        }
    }
}

impl EvalOptions {
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Config(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if !(self.truncation_floor > 0.0 && self.truncation_floor < 1.0) {
            return Err(Error::Config(format!(
                "truncation_floor must lie in (0, 1), got {}",
                self.truncation_floor
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Config("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }
}

/// Real and imaginary parts of `E(t)`, the auxiliary trigonometric
/// integrals `g(t) = −cos t·Ci(t) − sin t·si(t)` and
/// `f(t) = sin t·Ci(t) − cos t·si(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuxExpIntegral {
    pub g: f64,
    pub f: f64,
    pub t: f64,
}

impl AuxExpIntegral {
    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.g, self.f)
    }
}

/// Arguments at or below this use the power series for Si.
const SI_SERIES_MAX: f64 = 4.0;
/// Cin keeps its own series a bit longer so that Ci and Cin come from
/// different routes on `(4, 8]`.
const CIN_SERIES_MAX: f64 = 8.0;

fn check_positive(func: &'static str, t: f64) -> Result<()> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::domain(func, format!("argument must be positive, got {t}")));
    }
    Ok(())
}

fn si_series(t: f64) -> f64 {
    // Σ (−1)^k t^{2k+1} / ((2k+1)·(2k+1)!)
    let t2 = t * t;
    let mut term = t;
    let mut sum = t;
    let mut k = 0.0;
    loop {
        k += 1.0;
        let n = 2.0 * k;
        term *= -t2 / (n * (n + 1.0));
        let add = term / (n + 1.0);
        sum += add;
        if add.abs() <= 1e-18 * sum.abs() {
            return sum;
        }
    }
}

fn cin_series(t: f64) -> f64 {
    // Σ_{k≥1} (−1)^{k+1} t^{2k} / (2k·(2k)!)
    let t2 = t * t;
    let mut term = 1.0;
    let mut sum = 0.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        let n = 2.0 * k;
        term *= -t2 / ((n - 1.0) * n);
        let add = -term / n;
        sum += add;
        if add.abs() <= 1e-18 * sum.abs() {
            return sum;
        }
    }
}

/// `e^{it}·E(t) = −Ci(t) − i·si(t)`.
fn rotated_e(t: f64, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    Ok(exp_integral_e_est(t, opts)?.map(|e| ComplexValue::cis(t) * e))
}

/// Sine integral `Si(t) = ∫₀ᵗ sin u/u du` for `t ≥ 0`.
pub fn sine_integral(t: f64, opts: &EvalOptions) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain("sine_integral", format!("need finite t >= 0, got {t}")));
    }
    if t <= SI_SERIES_MAX {
        return Ok(si_series(t));
    }
    Ok(FRAC_PI_2 - rotated_e(t, opts)?.value.im)
}

/// Complementary sine integral `si(t) = Si(t) − π/2`.
pub fn sine_integral_complementary(t: f64, opts: &EvalOptions) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain("si", format!("need finite t >= 0, got {t}")));
    }
    if t <= SI_SERIES_MAX {
        return Ok(si_series(t) - FRAC_PI_2);
    }
    Ok(-rotated_e(t, opts)?.value.im)
}

/// Cosine integral `Ci(t) = −∫ₜ^∞ cos u/u du` for `t > 0`.
pub fn cosine_integral(t: f64, opts: &EvalOptions) -> Result<f64> {
    check_positive("cosine_integral", t)?;
    if t <= SI_SERIES_MAX {
        return Ok(EULER_GAMMA + t.ln() - cin_series(t));
    }
    if !t.is_finite() {
        return Ok(0.0);
    }
    Ok(-rotated_e(t, opts)?.value.re)
}

/// Regularized cosine integral `Cin(t) = ∫₀ᵗ (1 − cos u)/u du`.
pub fn cin(t: f64, opts: &EvalOptions) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain("cin", format!("need finite t >= 0, got {t}")));
    }
    if t <= CIN_SERIES_MAX {
        return Ok(cin_series(t));
    }
    Ok(t.ln() - cosine_integral(t, opts)? + EULER_GAMMA)
}

/// `E(t)` with its error estimate, via the Laplace representation
/// `∫₀^∞ e^{-tu}/(u − i) du`.
pub fn exp_integral_e_est(t: f64, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    check_positive("exp_integral_E", t)?;
    if !t.is_finite() {
        return Ok(Estimate { value: ComplexValue::ZERO, abs_err: 0.0 });
    }
    let shape = LaplaceShape {
        decay: t,
        near_scale: 1.0,
        envelope: 1.0,
    };
    integrate_laplace(
        |u: f64| {
            let w = (-t * u).exp() / (u * u + 1.0);
            ComplexValue::new(u * w, w)
        },
        shape,
        opts,
        "exp_integral_E",
    )
}

/// `E(t) = g(t) + i·f(t)`.
pub fn exp_integral_e(t: f64, opts: &EvalOptions) -> Result<ComplexValue> {
    Ok(exp_integral_e_est(t, opts)?.value)
}

/// `E(t)` split into the auxiliary integrals.
pub fn aux_exp_integral(t: f64, opts: &EvalOptions) -> Result<AuxExpIntegral> {
    let e = exp_integral_e(t, opts)?;
    Ok(AuxExpIntegral { g: e.re, f: e.im, t })
}

/// `M(t)` with its error estimate.
pub fn comparison_m_est(t: f64, opts: &EvalOptions) -> Result<Estimate<f64>> {
    check_positive("comparison_M", t)?;
    if !t.is_finite() {
        return Ok(Estimate { value: 0.0, abs_err: 0.0 });
    }
    let shape = LaplaceShape {
        decay: t,
        near_scale: 1.0,
        envelope: 1.0,
    };
    integrate_laplace(
        |u: f64| (-t * u).exp() / u.hypot(1.0),
        shape,
        opts,
        "comparison_M",
    )
}

/// Comparison function `M(t) = ∫₀^∞ e^{-tu}/√(u²+1) du`, which majorizes `|E(t)|`.
pub fn comparison_m(t: f64, opts: &EvalOptions) -> Result<f64> {
    Ok(comparison_m_est(t, opts)?.value)
}

/// `B_{2k}/(2k)` for k = 1..7, coefficients of the digamma asymptotic series.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Digamma `ψ(x) = Γ'(x)/Γ(x)`.
///
/// Shifts `x` above 8 with `ψ(x) = ψ(x+1) − 1/x`, then applies the
/// asymptotic series in `1/x²`. Negative arguments use reflection.
pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() || (x <= 0.0 && x == x.floor()) {
        return Err(Error::domain("digamma", format!("pole or NaN at x = {x}")));
    }
    if x < 0.0 {
        return Ok(digamma(1.0 - x)? - PI / (PI * x).tan());
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 8.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut p = inv2;
    let mut series = 0.0;
    for c in DIGAMMA_ASYMP {
        series += c * p;
        p *= inv2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln |Γ(x)|` by the Lanczos approximation (reflection below 1/2).
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || (x <= 0.0 && x == x.floor()) {
        return Err(Error::domain("ln_gamma", format!("pole or NaN at x = {x}")));
    }
    if x < 0.5 {
        return Ok((PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x)?);
    }
    let y = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (y + i as f64);
    }
    let t = y + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (y + 0.5) * t.ln() - t + a.ln())
}

/// `arccot t ∈ (0, π/2]` for `t ≥ 0`.
pub fn arccot(t: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::domain("arccot", format!("only t >= 0 is supported, got {t}")));
    }
    if t == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok((1.0 / t).atan())
}
