//! Envelope and comparison bounds.
//!
//! Three families live here: the envelopes for FJ sums and integrated
//! kernels (arccot, `M`, log, secant), the classical lower and upper bounds
//! for the Fejér-Jackson sine sums, and the bounds for the Taylor remainder
//! of `log(1 − z)` in the closed unit disk.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::ComplexValue;
use crate::consts::{ALPHA_EVEN, C2, C3, PI};
use crate::error::{Error, Result};
use crate::quad::Estimate;
use crate::series::{power_tail, ComplexKahanSum};
use crate::specfun::{arccot, comparison_m, ln_gamma, EvalOptions};

/// Every bound the library can evaluate and sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundId {
    ArccotEnvelope,
    MEnvelope,
    LogEnvelope,
    FracEnvelope,
    SecEnvelope,
    EbycosRhs,
    FJTuran,
    Fejer1928,
    Turan1952,
    AK2003,
    BK1998,
    Koumandos2012,
    AlKou12,
    AKEvenUpper,
    TaylorSimple,
    TaylorMp,
    TaylorLog1z,
    TaylorMhat,
}

impl BoundId {
    pub const ALL: [BoundId; 18] = [
        BoundId::ArccotEnvelope,
        BoundId::MEnvelope,
        BoundId::LogEnvelope,
        BoundId::FracEnvelope,
        BoundId::SecEnvelope,
        BoundId::EbycosRhs,
        BoundId::FJTuran,
        BoundId::Fejer1928,
        BoundId::Turan1952,
        BoundId::AK2003,
        BoundId::BK1998,
        BoundId::Koumandos2012,
        BoundId::AlKou12,
        BoundId::AKEvenUpper,
        BoundId::TaylorSimple,
        BoundId::TaylorMp,
        BoundId::TaylorLog1z,
        BoundId::TaylorMhat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::ArccotEnvelope => "arccot-envelope",
            BoundId::MEnvelope => "m-envelope",
            BoundId::LogEnvelope => "log-envelope",
            BoundId::FracEnvelope => "frac-envelope",
            BoundId::SecEnvelope => "sec-envelope",
            BoundId::EbycosRhs => "ebycos-rhs",
            BoundId::FJTuran => "fj-turan",
            BoundId::Fejer1928 => "fejer1928",
            BoundId::Turan1952 => "turan1952",
            BoundId::AK2003 => "ak2003",
            BoundId::BK1998 => "bk1998",
            BoundId::Koumandos2012 => "koumandos2012",
            BoundId::AlKou12 => "alkou12",
            BoundId::AKEvenUpper => "ak-even-upper",
            BoundId::TaylorSimple => "taylor-simple",
            BoundId::TaylorMp => "taylor-mp",
            BoundId::TaylorLog1z => "taylor-log1z",
            BoundId::TaylorMhat => "taylor-mhat",
        }
    }

    /// Classical bounds on the sine partial sums `S_n(x, 0)`.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            BoundId::FJTuran
                | BoundId::Fejer1928
                | BoundId::Turan1952
                | BoundId::AK2003
                | BoundId::BK1998
                | BoundId::Koumandos2012
                | BoundId::AlKou12
                | BoundId::AKEvenUpper
        )
    }

    pub fn is_taylor(self) -> bool {
        matches!(
            self,
            BoundId::TaylorSimple | BoundId::TaylorMp | BoundId::TaylorLog1z | BoundId::TaylorMhat
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == key || format!("{b:?}").to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Config(format!("unknown bound '{s}'")))
    }
}

fn check_angle(func: &'static str, x: f64, lo: f64, hi: f64, closed: bool) -> Result<()> {
    let ok = if closed { x >= lo && x <= hi } else { x > lo && x < hi };
    if ok {
        Ok(())
    } else {
        Err(Error::domain(func, format!("x = {x} outside the admissible interval")))
    }
}

/// `arccot((2μ + 1) sin(x/2))` for `μ ≥ −1/2`, `0 ≤ x ≤ π`.
pub fn arccot_envelope(mu: f64, x: f64) -> Result<f64> {
    if !(mu >= -0.5) {
        return Err(Error::domain("arccot_envelope", format!("need mu >= -1/2, got {mu}")));
    }
    check_angle("arccot_envelope", x, 0.0, PI, true)?;
    arccot((2.0 * mu + 1.0) * (0.5 * x).sin())
}

/// `M((2μ + 1) sin(x/2))` for `μ > −1/2`, `0 < x < π`.
pub fn m_envelope(mu: f64, x: f64, opts: &EvalOptions) -> Result<f64> {
    if !(mu > -0.5) {
        return Err(Error::domain("m_envelope", format!("need mu > -1/2, got {mu}")));
    }
    check_angle("m_envelope", x, 0.0, PI, false)?;
    comparison_m((2.0 * mu + 1.0) * (0.5 * x).sin(), opts)
}

/// `M(λ sin x)` for `λ > 0`, `0 < x < π`.
pub fn m_envelope_odd(lambda: f64, x: f64, opts: &EvalOptions) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain("m_envelope_odd", format!("need lambda > 0, got {lambda}")));
    }
    check_angle("m_envelope_odd", x, 0.0, PI, false)?;
    comparison_m(lambda * x.sin(), opts)
}

/// `−ln((2μ + 1) sin(x/2)) + C₂`, only where the argument lies in `(0, 1)`.
pub fn log_envelope(mu: f64, x: f64) -> Result<f64> {
    let t = (2.0 * mu + 1.0) * (0.5 * x).sin();
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain("log_envelope", format!("(2mu+1)sin(x/2) = {t} outside (0, 1)")));
    }
    Ok(-t.ln() + C2)
}

/// The coarse envelope `1/((2μ + 1) sin(x/2))`.
pub fn frac_envelope(mu: f64, x: f64) -> Result<f64> {
    if !(mu > -0.5) {
        return Err(Error::domain("frac_envelope", format!("need mu > -1/2, got {mu}")));
    }
    check_angle("frac_envelope", x, 0.0, PI, false)?;
    Ok(1.0 / ((2.0 * mu + 1.0) * (0.5 * x).sin()))
}

/// `1/(|λ| cos x)`, the bound on `|Eci(x, λ) − i/λ|` for real `λ ≠ 0`.
pub fn sec_envelope(lambda: f64, x: f64) -> Result<f64> {
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::domain("sec_envelope", "lambda must be finite and nonzero"));
    }
    check_angle("sec_envelope", x, 0.0, 0.5 * PI, false)?;
    Ok(1.0 / (lambda.abs() * x.cos()))
}

/// `1/λ − M(λ) + M(λ cos x)` for `λ > 0`, `0 < x < π/2`.
pub fn ebycos_rhs(lambda: f64, x: f64, opts: &EvalOptions) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain("ebycos_rhs", format!("need lambda > 0, got {lambda}")));
    }
    check_angle("ebycos_rhs", x, 0.0, 0.5 * PI, false)?;
    Ok(1.0 / lambda - comparison_m(lambda, opts)? + comparison_m(lambda * x.cos(), opts)?)
}

/// Legendre polynomial `P_n(t)` by the three-term recurrence.
pub fn legendre(n: u64, t: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, t);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * t * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `δ_n = ((m+1)/(m+3/2)) (m!/Γ(m+3/2))²` with `m = ⌊(n−1)/2⌋`.
pub fn delta_n(n: u64) -> f64 {
    let m = ((n.max(1) - 1) / 2) as f64;
    // ln_gamma only fails at poles, and m + 1 ≥ 1
    let lg = ln_gamma(m + 1.0).unwrap() - ln_gamma(m + 1.5).unwrap();
    (m + 1.0) / (m + 1.5) * (2.0 * lg).exp()
}

/// Values of the classical bounds on `S_n(x, 0)` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalBounds {
    pub n: u64,
    pub x: f64,
    /// `(π − x)/2`; bounds `|S_n − (π − x)/2|` from above.
    pub fj_turan: f64,
    pub fejer1928: f64,
    pub turan1952: f64,
    pub ak2003: f64,
    pub bk1998: f64,
    pub koumandos2012: f64,
    pub alkou12: f64,
    /// `α(π − x)`, an upper bound for even `n`.
    pub ak_even_upper: f64,
}

impl ClassicalBounds {
    pub fn get(&self, id: BoundId) -> Option<f64> {
        Some(match id {
            BoundId::FJTuran => self.fj_turan,
            BoundId::Fejer1928 => self.fejer1928,
            BoundId::Turan1952 => self.turan1952,
            BoundId::AK2003 => self.ak2003,
            BoundId::BK1998 => self.bk1998,
            BoundId::Koumandos2012 => self.koumandos2012,
            BoundId::AlKou12 => self.alkou12,
            BoundId::AKEvenUpper => self.ak_even_upper,
            _ => return None,
        })
    }
}

/// All classical bounds at `(n, x)`, `n ≥ 1`, `0 < x < π`.
pub fn classical_bounds(n: u64, x: f64) -> Result<ClassicalBounds> {
    if n == 0 {
        return Err(Error::domain("classical_bounds", "n must be at least 1"));
    }
    check_angle("classical_bounds", x, 0.0, PI, false)?;
    let nf = n as f64;
    let half = 0.5 * x;
    let saw = 0.5 * (PI - x);
    let cot_gap = 1.0 / half.tan() - saw;
    Ok(ClassicalBounds {
        n,
        x,
        fj_turan: saw,
        fejer1928: x.sin() / 3.0 + (nf * x).sin() / (2.0 * nf),
        turan1952: 4.0 * half.sin().powi(2) * cot_gap,
        ak2003: x * x * cot_gap,
        bk1998: (1.0 - half.sin()) / half.cos(),
        koumandos2012: x * (1.0 - x / PI).powi(3),
        alkou12: 0.25 * PI * delta_n(n) / half.tan() * (1.0 - legendre(n, x.cos())),
        ak_even_upper: ALPHA_EVEN * (PI - x),
    })
}

/// Where a classical bound is asserted. `Turan1952` and `AK2003` need
/// `n ≥ 2` (at `n = 1` the latter behaves like `2x` near 0 while
/// `S_1 = sin x`); `BK1998` uses the window `[3π/(2n+1), π − 3π/(2n+1)]`;
/// the even-`n` upper bound needs even `n ≥ 2`.
pub fn classical_applies(id: BoundId, n: u64, x: f64) -> bool {
    if !(x > 0.0 && x < PI) || n == 0 {
        return false;
    }
    match id {
        BoundId::Turan1952 | BoundId::AK2003 => n >= 2,
        BoundId::BK1998 => {
            let w = 3.0 * PI / (2.0 * n as f64 + 1.0);
            x >= w && x <= PI - w
        }
        BoundId::AKEvenUpper => n >= 2 && n % 2 == 0,
        id => id.is_classical(),
    }
}

/// A point of the closed unit disk, off `z = 1`, with a truncation order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TaylorPoint {
    pub z_re: f64,
    pub z_im: f64,
    pub n: u64,
}

/// Slack for points meant to lie on the unit circle.
const CIRCLE_SLACK: f64 = 4.0 * f64::EPSILON;

impl TaylorPoint {
    pub fn new(z: ComplexValue, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("TaylorPoint", "n must be at least 1"));
        }
        if !z.is_finite() || z.abs() > 1.0 + CIRCLE_SLACK {
            return Err(Error::domain("TaylorPoint", format!("need |z| <= 1, got {z}")));
        }
        if z == ComplexValue::ONE {
            return Err(Error::domain("TaylorPoint", "z = 1 is excluded"));
        }
        Ok(Self { z_re: z.re, z_im: z.im, n })
    }

    pub fn z(&self) -> ComplexValue {
        ComplexValue::new(self.z_re, self.z_im)
    }

    /// `|z|`, snapped to 1 on the circle.
    pub fn radius(&self) -> f64 {
        self.z().abs().min(1.0)
    }

    /// `p = (n + 1)(1 − |z|)`.
    pub fn p(&self) -> f64 {
        (self.n as f64 + 1.0) * (1.0 - self.radius())
    }

    /// `q = (n + 1/2)|1 − z|`.
    pub fn q(&self) -> f64 {
        (self.n as f64 + 0.5) * (ComplexValue::ONE - self.z()).abs()
    }
}

/// `m(p)`: `1/(e p)` for `p ≥ 1/e`, `|ln p|` below.
pub fn m_of_p(p: f64) -> f64 {
    if p >= (-1.0f64).exp() {
        1.0 / (std::f64::consts::E * p)
    } else {
        p.ln().abs()
    }
}

/// Taylor-remainder bounds at one point.
///
/// Everything except `m_p` carries the factor `|z|^{n+1}`, which underflows
/// for small `|z|` and large `n`. Values are therefore stored divided by
/// `scale = |z|^{n+1}`; [`TaylorBounds::value`] restores the absolute bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TaylorBounds {
    pub point: TaylorPoint,
    pub ln_scale: f64,
    pub p: f64,
    pub q: f64,
    /// `1/q`.
    pub simple: f64,
    /// `m(p)/|z|^{n+1}`; needs `|z| < 1`.
    pub m_p: Option<f64>,
    /// `−ln q + C₃`; needs `|z| < 1` and `q < 1`.
    pub log1z: Option<f64>,
    /// `min(1/q, ln(1/q) + C₃)`, the log branch only for `q < 1`.
    pub mhat: f64,
}

impl TaylorBounds {
    /// The bound divided by `|z|^{n+1}`, or `None` outside its domain.
    pub fn normalized(&self, id: BoundId) -> Option<f64> {
        match id {
            BoundId::TaylorSimple => Some(self.simple),
            BoundId::TaylorMp => self.m_p,
            BoundId::TaylorLog1z => self.log1z,
            BoundId::TaylorMhat => Some(self.mhat),
            _ => None,
        }
    }

    /// The bound on `|R_n(z)|` itself.
    pub fn value(&self, id: BoundId) -> Option<f64> {
        self.normalized(id).map(|v| v * self.ln_scale.exp())
    }
}

/// Evaluates every Taylor-remainder bound that applies at `pt`.
pub fn taylor_bounds(pt: TaylorPoint) -> Result<TaylorBounds> {
    let pt = TaylorPoint::new(pt.z(), pt.n)?;
    let r = pt.radius();
    let ln_scale = (pt.n as f64 + 1.0) * r.ln();
    let p = pt.p();
    let q = pt.q();
    let inside = r < 1.0;
    let m_p = inside.then(|| (m_of_p(p).ln() - ln_scale).exp());
    let log_branch = (q < 1.0).then(|| -q.ln() + C3);
    let mhat = match log_branch {
        Some(l) => l.min(1.0 / q),
        None => 1.0 / q,
    };
    Ok(TaylorBounds {
        point: pt,
        ln_scale,
        p,
        q,
        simple: 1.0 / q,
        m_p,
        log1z: if inside { log_branch } else { None },
        mhat,
    })
}

/// `Σ_{k>n} z^k/k` divided by `z^{n+1}`, i.e. `Σ_{j≥0} z^j/(j + n + 1)`.
///
/// Close to `z = 1` (where `(n+1)|1 − z| < 1`, so `|z|^{n+1} > 1/4`) the
/// closed form `−log(1 − z) − Σ_{k≤n} z^k/k` is used; elsewhere the series
/// with its summation-by-parts tail.
pub fn log_taylor_remainder(pt: TaylorPoint, opts: &EvalOptions) -> Result<Estimate<ComplexValue>> {
    let pt = TaylorPoint::new(pt.z(), pt.n)?;
    let z = pt.z();
    let n = pt.n;
    let gap = (ComplexValue::ONE - z).abs();
    if (n as f64 + 1.0) * gap < 1.0 {
        let mut acc = ComplexKahanSum::new();
        acc.add(-(ComplexValue::ONE - z).ln());
        let mut zk = ComplexValue::ONE;
        for k in 1..=n {
            zk = zk * z;
            acc.add(-(zk / k as f64));
        }
        let value = acc.total() / (zk * z);
        let err = 8.0 * f64::EPSILON * (n as f64 + 1.0) * (1.0 + value.abs());
        return Ok(Estimate { value, abs_err: err });
    }
    power_tail(z, n as f64 + 1.0, 0, opts.abs_tol * 1e-2)
}
