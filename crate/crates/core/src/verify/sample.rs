//! Seeded random point sets for sweeps that are not tensor grids.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::ComplexValue;
use crate::consts::{FRAC_PI_2, PI};

/// Default seed of every sampler.
pub const DEFAULT_SEED: u64 = 20_180_517;

/// `(μ, x)` pairs with `μ > −1/2` and `0 < x < π`.
///
/// `μ + 1/2` is log-uniform on `[1e-3, 1e3]`. Four in five angles are
/// uniform on `(0, π)`, the rest log-uniform on `[1e-3, 0.1]`, where the
/// Laplace integrand is nearly singular.
pub fn fj_points(seed: u64, count: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mu = -0.5 + 10f64.powf(rng.gen_range(-3.0..3.0));
            let x = if rng.gen_bool(0.8) {
                PI * rng.gen_range(f64::EPSILON..1.0)
            } else {
                10f64.powf(rng.gen_range(-3.0..-1.0))
            };
            vec![mu, x]
        })
        .collect()
}

/// `(λ, x)` pairs with `λ` log-uniform on `[0.5, 50]` and `0 < x < π/2`.
pub fn eci_points(seed: u64, count: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let lambda = 10f64.powf(rng.gen_range(0.5f64.log10()..50f64.log10()));
            vec![lambda, FRAC_PI_2 * rng.gen_range(1e-6..1.0 - 1e-6)]
        })
        .collect()
}

/// `(n, x)` pairs with `n` uniform on `1..=50` and `x` uniform on `(0, π)`.
pub fn classical_points(seed: u64, count: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| vec![rng.gen_range(1..=50u32) as f64, PI * rng.gen_range(f64::EPSILON..1.0)])
        .collect()
}

/// `(n, r, θ)` triples describing `z = r e^{iθ}` in the closed unit disk.
///
/// `n` is log-uniform on `1..=200`. The points split evenly over four
/// regimes: uniform in the disk; just inside the circle, `1 − r` in
/// `[1e-8, 0.1]`; on the circle with `|θ| ≥ 0.01`; and within `1/(n+½)`
/// of `z = 1`, where the log-type bounds apply.
pub fn taylor_points(seed: u64, count: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 10f64.powf(rng.gen_range(0.0..200f64.log10())).round().max(1.0);
            let (r, theta) = match i % 4 {
                0 => (rng.gen_range(0.0f64..1.0).sqrt(), rng.gen_range(-PI..PI)),
                1 => (1.0 - 10f64.powf(rng.gen_range(-8.0..-1.0)), rng.gen_range(-PI..PI)),
                2 => {
                    let t = rng.gen_range(0.01..PI);
                    (1.0, if rng.gen_bool(0.5) { t } else { -t })
                }
                _ => loop {
                    let rho = 10f64.powf(rng.gen_range(-6.0..0.0)) / (n + 0.5);
                    let phi = rng.gen_range(-FRAC_PI_2..FRAC_PI_2);
                    let z = ComplexValue::ONE - ComplexValue::from_polar(rho, phi);
                    if z.abs() < 1.0 {
                        break (z.abs(), z.arg());
                    }
                },
            };
            vec![n, r, theta]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samplers_are_deterministic_and_admissible() {
        assert_eq!(fj_points(7, 50), fj_points(7, 50));
        for p in fj_points(1, 2000) {
            assert!(p[0] > -0.5 && p[1] > 0.0 && p[1] < PI);
        }
        for p in eci_points(1, 500) {
            assert!(p[0] >= 0.5 && p[0] <= 50.0 && p[1] > 0.0 && p[1] < FRAC_PI_2);
        }
        for p in taylor_points(1, 2000) {
            assert!(p[0] >= 1.0 && p[0] <= 200.0 && p[0] == p[0].floor());
            assert!(p[1] >= 0.0 && p[1] <= 1.0);
        }
    }
}
