//! Compensated summation and summation-by-parts tails of power series
//! `Σ_{k≥m} z^k/(k + c)` on the closed unit disk.

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::quad::Estimate;

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = KahanSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Compensated sum of complex terms, componentwise.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexKahanSum {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexKahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: ComplexValue) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    pub fn total(&self) -> ComplexValue {
        ComplexValue::new(self.re.total(), self.im.total())
    }
}

/// Number of summation-by-parts corrections applied to the tail.
const CORRECTIONS: usize = 12;

/// Hard cap on explicit terms before giving up.
const MAX_TERMS: usize = 50_000_000;

/// `z^k` for `z = r e^{iθ}`, evaluated directly so that the phase carries no
/// accumulated rounding.
#[inline]
fn zpow(ln_r: f64, theta: f64, k: f64) -> ComplexValue {
    ComplexValue::from_polar((k * ln_r).exp(), k * theta)
}

/// `(∇^j a)_k` for `a_k = 1/(k + c)` with backward difference
/// `(∇a)_k = a_k − a_{k−1}`: equals `(−1)^j j! / ∏_{i=0}^{j} (k + c − i)`.
fn backward_difference(j: usize, k: f64, c: f64) -> f64 {
    let mut v = 1.0 / (k + c);
    for i in 1..=j {
        v *= -(i as f64) / (k + c - i as f64);
    }
    v
}

/// `Σ_{k≥m0} z^k/(k + c)` for `|z| ≤ 1`, `z ≠ 1`, `m0 + c > 0`.
///
/// Terms are summed explicitly up to an index `m`, after which the tail is
/// rewritten by repeated summation by parts,
///
/// `Σ_{k≥m} z^k a_k = Σ_{j<J} z^{m+j} (∇^j a)_{m+j} / (1−z)^{j+1} + T_J`,
///
/// where the remainder obeys the rigorous bound
/// `|T_J| ≤ |z|^{m+J} |(∇^{J−1} a)_{m+J−1}| / |1−z|^J`, because the
/// differences of `1/(k+c)` have constant sign and telescope.
/// The returned `abs_err` is that bound plus a rounding allowance.
pub fn power_tail(z: ComplexValue, c: f64, m0: u64, abs_tol: f64) -> Result<Estimate<ComplexValue>> {
    let r = z.abs();
    let one_minus = ComplexValue::ONE - z;
    let d = one_minus.abs();
    if !(r <= 1.0) || d == 0.0 {
        return Err(Error::domain("power_tail", format!("need |z| <= 1, z != 1 (z = {z})")));
    }
    if !(m0 as f64 + c > 0.0) {
        return Err(Error::domain("power_tail", "first denominator must be positive"));
    }
    if r == 0.0 {
        let v = if m0 == 0 { ComplexValue::real(1.0 / c) } else { ComplexValue::ZERO };
        return Ok(Estimate { value: v, abs_err: 0.0 });
    }
    let ln_r = r.ln();
    let theta = z.arg();
    let jf = CORRECTIONS as f64;

    // log of the remainder bound after J corrections started at m
    let log_tail_bound = |m: f64| -> f64 {
        let mut lb = (m + jf) * ln_r - jf * d.ln();
        // |(∇^{J−1}a)_{m+J−1}| = (J−1)! / ∏_{i=0}^{J−1}(m + c + i)
        for i in 1..CORRECTIONS {
            lb += (i as f64).ln();
        }
        for i in 0..CORRECTIONS {
            lb -= (m + c + i as f64).ln();
        }
        lb
    };
    // plain geometric bound Σ_{k≥m}|z|^k/(k+c) ≤ |z|^m/((m+c)(1−|z|))
    let log_geom_bound = |m: f64| -> f64 {
        if r < 1.0 {
            m * ln_r - (m + c).ln() - (1.0 - r).ln()
        } else {
            f64::INFINITY
        }
    };

    let log_tol = abs_tol.ln();
    let mut acc = ComplexKahanSum::new();
    let mut m = m0;
    let mut rounding = 0.0;
    loop {
        let mf = m as f64;
        if log_geom_bound(mf) <= log_tol {
            let bound = log_geom_bound(mf).exp();
            return Ok(Estimate {
                value: acc.total(),
                abs_err: bound + rounding,
            });
        }
        if mf + c > jf && log_tail_bound(mf) <= log_tol {
            break;
        }
        if m - m0 > MAX_TERMS as u64 {
            return Err(Error::Convergence {
                what: "power_tail",
                err: log_tail_bound(mf).exp(),
                tol: abs_tol,
            });
        }
        let term = zpow(ln_r, theta, mf) / (mf + c);
        rounding += 2.0 * f64::EPSILON * term.abs();
        acc.add(term);
        m += 1;
    }

    let mf = m as f64;
    let inv = one_minus.recip();
    let mut inv_pow = inv;
    for j in 0..CORRECTIONS {
        let k = mf + j as f64;
        let term = zpow(ln_r, theta, k) * inv_pow * backward_difference(j, k, c);
        acc.add(term);
        inv_pow = inv_pow * inv;
    }
    Ok(Estimate {
        value: acc.total(),
        abs_err: log_tail_bound(mf).exp() + rounding + 4.0 * f64::EPSILON * acc.total().abs(),
    })
}
