//! Exponential Fejér-Jackson sums
//!
//! `L(x, μ) = Σ_{k≥1} e^{ikx}/(k + μ)`, their truncations `L_n`, the
//! odd-frequency variant `𝕃(x, λ) = e^{-ix} L(2x, (λ−1)/2)` and the special
//! value `Sπ(λ) = 2Σ (−1)^{k−1}/(2k − 1 + λ)`.
//!
//! The primary evaluation route is the Laplace representation
//! `L(x, μ) = ∫₀^∞ e^{-μu}/(e^{u−ix} − 1) du`. An independent route by
//! explicit summation with a summation-by-parts tail ([`l_series`]) is kept
//! for cross-checking. The cosine and sine sums `T`, `S` are the real and
//! imaginary parts of `L`.

use std::f64::consts::TAU;

use crate::complex::ComplexValue;
use crate::consts::PI;
use crate::error::{Error, Result};
use crate::quad::{integrate_laplace, Estimate, LaplaceShape};
use crate::series::{power_tail, ComplexKahanSum, KahanSum};
use crate::specfun::EvalOptions;

/// Arguments of `L(x, μ)`: an angle off `2πℤ` and a shift `μ > −1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FJArgs {
    pub x: f64,
    pub mu: f64,
}

impl FJArgs {
    pub fn new(x: f64, mu: f64) -> Result<Self> {
        if !x.is_finite() || dist_to_lattice(x, TAU) == 0.0 {
            return Err(Error::domain("L", format!("x must be finite and off 2πℤ, got {x}")));
        }
        if !(mu > -1.0) || !mu.is_finite() {
            return Err(Error::domain("L", format!("need finite mu > -1, got {mu}")));
        }
        Ok(Self { x, mu })
    }
}

/// Arguments of `𝕃(x, λ)`: `sin x ≠ 0` and `λ > −1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FJArgsOdd {
    pub x: f64,
    pub lambda: f64,
}

impl FJArgsOdd {
    pub fn new(x: f64, lambda: f64) -> Result<Self> {
        if !x.is_finite() || dist_to_lattice(x, PI) == 0.0 {
            return Err(Error::domain("L_odd", format!("need sin x != 0, got x = {x}")));
        }
        if !(lambda > -1.0) || !lambda.is_finite() {
            return Err(Error::domain("L_odd", format!("need finite lambda > -1, got {lambda}")));
        }
        Ok(Self { x, lambda })
    }

    /// The same point in the `L(2x, (λ−1)/2)` normalization.
    pub fn to_even(self) -> FJArgs {
        FJArgs {
            x: 2.0 * self.x,
            mu: 0.5 * (self.lambda - 1.0),
        }
    }
}

/// Distance from `x` to the lattice `period·ℤ`.
pub(crate) fn dist_to_lattice(x: f64, period: f64) -> f64 {
    let r = x.rem_euclid(period);
    r.min(period - r)
}

/// `1 / min_{0 ≤ s ≤ s_max} |w − s|` for `|w| = 1`: bounds `1/|w − e^{-u}|`
/// for every `u ≥ −ln s_max`.
pub(crate) fn inverse_distance_to_segment(w: ComplexValue, s_max: f64) -> f64 {
    let s = w.re.clamp(0.0, s_max);
    1.0 / (w - ComplexValue::real(s)).abs()
}

fn l_shape(x: f64, mu: f64, opts: &EvalOptions) -> LaplaceShape {
    let decay = mu + 1.0;
    let upper = -opts.truncation_floor.ln() / decay;
    LaplaceShape {
        decay,
        near_scale: dist_to_lattice(x, TAU),
        envelope: inverse_distance_to_segment(ComplexValue::cis(-x), (-upper).exp()),
    }
}

/// `L(x, μ)` by the Laplace integral, with error estimate.
pub fn l_infinite_est(args: FJArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    let FJArgs { x, mu } = FJArgs::new(args.x, args.mu)?;
    let rot = ComplexValue::cis(-x);
    integrate_laplace(
        |u: f64| {
            // e^{-μu}/(e^{u−ix} − 1) = e^{-(μ+1)u}/(e^{-ix} − e^{-u})
            let den = rot - ComplexValue::real((-u).exp());
            den.recip() * (-(mu + 1.0) * u).exp()
        },
        l_shape(x, mu, opts),
        opts,
        "L",
    )
}

/// `L(x, μ) = Σ_{k≥1} e^{ikx}/(k + μ)`.
pub fn l_infinite(args: FJArgs, opts: &EvalOptions) -> Result<ComplexValue> {
    Ok(l_infinite_est(args, opts)?.value)
}

/// `L(x, μ)` by explicit summation plus a rigorously bounded
/// summation-by-parts tail. Independent of the quadrature route.
pub fn l_series(args: FJArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    let FJArgs { x, mu } = FJArgs::new(args.x, args.mu)?;
    power_tail(ComplexValue::cis(x), mu, 1, opts.abs_tol * 1e-2)
}

/// Truncated sum `L_n(x, μ)` through `L(x, μ) − e^{ixn} L(x, μ + n)`.
pub fn l_truncated(args: FJArgs, n: u64, opts: &EvalOptions) -> Result<ComplexValue> {
    let args = FJArgs::new(args.x, args.mu)?;
    if n == 0 {
        return Err(Error::domain("L_n", "n must be at least 1"));
    }
    let full = l_infinite(args, opts)?;
    let shifted = l_infinite(FJArgs { mu: args.mu + n as f64, ..args }, opts)?;
    Ok(full - ComplexValue::cis(args.x * n as f64) * shifted)
}

/// Truncated sum `L_n(x, μ) = Σ_{k=1}^n e^{ikx}/(k + μ)` by direct
/// compensated summation. `μ` must keep every denominator nonzero.
pub fn l_truncated_direct(x: f64, mu: f64, n: u64) -> Result<ComplexValue> {
    if !x.is_finite() || !mu.is_finite() {
        return Err(Error::domain("L_n", "arguments must be finite"));
    }
    if mu <= -1.0 && mu == mu.floor() && -mu <= n as f64 {
        return Err(Error::domain("L_n", format!("denominator vanishes for mu = {mu}")));
    }
    let mut acc = ComplexKahanSum::new();
    for k in 1..=n {
        let kf = k as f64;
        acc.add(ComplexValue::cis(kf * x) / (kf + mu));
    }
    Ok(acc.total())
}

/// Fejér-Jackson sine partial sum `S_n(x, 0) = Σ_{k=1}^n sin(kx)/k`.
pub fn sine_partial_sum(x: f64, n: u64) -> f64 {
    let acc: KahanSum = (1..=n).map(|k| (k as f64 * x).sin() / k as f64).collect();
    acc.total()
}

/// Sawtooth `(π − x)/2`, the value of `S(x, 0)` on `(0, 2π)`.
pub fn sawtooth(x: f64) -> f64 {
    0.5 * (PI - x)
}

/// `𝕃(x, λ) = ∫₀^∞ e^{-λu}/sinh(u − ix) du`, with error estimate.
pub fn l_odd_est(args: FJArgsOdd, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    let FJArgsOdd { x, lambda } = FJArgsOdd::new(args.x, args.lambda)?;
    let decay = lambda + 1.0;
    let upper = -opts.truncation_floor.ln() / decay;
    let rot_m = ComplexValue::cis(-x);
    let rot_p = ComplexValue::cis(x);
    let shape = LaplaceShape {
        decay,
        near_scale: dist_to_lattice(x, PI),
        envelope: 2.0 * inverse_distance_to_segment(ComplexValue::cis(-2.0 * x), (-2.0 * upper).exp()),
    };
    integrate_laplace(
        |u: f64| {
            // 1/sinh(u − ix) = 2e^{-u}/(e^{-ix} − e^{-2u} e^{ix})
            let den = rot_m - rot_p * (-2.0 * u).exp();
            den.recip() * (2.0 * (-(lambda + 1.0) * u).exp())
        },
        shape,
        opts,
        "L_odd",
    )
}

/// Odd-frequency FJ sum `𝕃(x, λ) = 2Σ_{k≥1} e^{(2k−1)ix}/(2k − 1 + λ)`.
pub fn l_odd(args: FJArgsOdd, opts: &EvalOptions) -> Result<ComplexValue> {
    Ok(l_odd_est(args, opts)?.value)
}

/// `Sπ(λ) = ∫₀^∞ e^{-λu}/cosh u du`, with error estimate.
pub fn s_pi_est(lambda: f64, opts: &EvalOptions) -> Result<Estimate<f64>> {
    if !(lambda > -1.0) || !lambda.is_finite() {
        return Err(Error::domain("S_pi", format!("need finite lambda > -1, got {lambda}")));
    }
    let shape = LaplaceShape {
        decay: lambda + 1.0,
        near_scale: 0.5 * PI,
        envelope: 2.0,
    };
    integrate_laplace(
        |u: f64| 2.0 * (-(lambda + 1.0) * u).exp() / (1.0 + (-2.0 * u).exp()),
        shape,
        opts,
        "S_pi",
    )
}

/// `Sπ(λ) = S(π/2, λ) = 2Σ_{k≥1} (−1)^{k−1}/(2k − 1 + λ)`.
pub fn s_pi(lambda: f64, opts: &EvalOptions) -> Result<f64> {
    Ok(s_pi_est(lambda, opts)?.value)
}

/// `e^{ixμ} L(x, μ)` as the shifted-contour integral
/// `∫_{−ix}^{−ix+∞} e^{-μz}/(e^z − 1) dz`, parametrized by `z = u − ix`.
pub fn rotated_l_est(args: FJArgs, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    let FJArgs { x, mu } = FJArgs::new(args.x, args.mu)?;
    integrate_laplace(
        |u: f64| {
            let z = ComplexValue::new(u, -x);
            // e^{-μz}/(e^z − 1) = e^{-(μ+1)z}/(1 − e^{-z})
            let num = (z * -(mu + 1.0)).exp();
            num / (ComplexValue::ONE - (-z).exp())
        },
        l_shape(x, mu, opts),
        opts,
        "rotated_L",
    )
}

/// `e^{ixμ} L(x, μ)`.
pub fn rotated_l(args: FJArgs, opts: &EvalOptions) -> Result<ComplexValue> {
    Ok(rotated_l_est(args, opts)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::{FRAC_PI_2, LN_2};

    fn o() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn alternating_harmonic_at_pi() {
        let v = l_infinite(FJArgs::new(PI, 0.0).unwrap(), &o()).unwrap();
        assert!((v.re + LN_2).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn sawtooth_evaluation() {
        for x in [0.5, 1.5, 3.0] {
            let v = l_infinite(FJArgs::new(x, 0.0).unwrap(), &o()).unwrap();
            assert!((v.im - sawtooth(x)).abs() < 1e-12, "x = {x}");
            let re = -(2.0 * (x / 2.0).sin()).abs().ln();
            assert!((v.re - re).abs() < 1e-12);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(FJArgs::new(0.0, 0.0).is_err());
        assert!(FJArgs::new(TAU, 0.0).is_err());
        assert!(FJArgs::new(1.0, -1.0).is_err());
        assert!(FJArgsOdd::new(PI, 0.0).is_err());
        assert!(FJArgsOdd::new(0.5, -1.5).is_err());
        assert!(s_pi(-1.0, &o()).is_err());
        assert!(l_truncated(FJArgs { x: 1.0, mu: 0.0 }, 0, &o()).is_err());
    }

    #[test]
    fn s_pi_special_values() {
        assert!((s_pi(0.0, &o()).unwrap() - FRAC_PI_2).abs() < 1e-12);
        assert!((s_pi(1.0, &o()).unwrap() - LN_2).abs() < 1e-12);
    }

    #[test]
    fn sine_sum_vanishes_at_pi() {
        for mu in [-0.9, 0.0, 0.7, 12.0] {
            let v = l_infinite(FJArgs::new(PI, mu).unwrap(), &o()).unwrap();
            assert!(v.im.abs() < 1e-12, "mu = {mu}");
        }
    }

    #[test]
    fn odd_cosine_sum_vanishes_at_half_pi() {
        for lam in [-0.5, 0.0, 2.0, 9.0] {
            let v = l_odd(FJArgsOdd::new(FRAC_PI_2, lam).unwrap(), &o()).unwrap();
            assert!(v.re.abs() < 1e-12, "lambda = {lam}");
        }
    }

    #[test]
    fn first_partial_sum() {
        let v = l_truncated_direct(FRAC_PI_2, 0.0, 1).unwrap();
        assert!((v.im - 1.0).abs() < 1e-15);
        assert!((sine_partial_sum(FRAC_PI_2, 1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn near_zero_angle_still_accurate() {
        // quadrature with graded panels at x = 1e-3; compare with series route
        let args = FJArgs::new(1e-3, 0.5).unwrap();
        let q = l_infinite(args, &o()).unwrap();
        let s = l_series(args, &o()).unwrap();
        assert!((q - s.value).abs() < 1e-10, "{q} vs {}", s.value);
    }
}
