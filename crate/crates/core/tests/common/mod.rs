//! Reference values computed independently of the library: fixed-order
//! Gauss-Legendre quadrature, power series and direct summation.

#![allow(dead_code)]

use num_complex::Complex64;

pub const GAMMA: f64 = 0.577_215_664_901_532_9;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite 20-point Gauss-Legendre over `panels` equal panels.
pub fn gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre(20);
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let part: f64 = rule.iter().map(|&(x, w)| w * f(mid + 0.5 * h * x)).sum::<f64>() * 0.5 * h;
        let y = part - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

pub fn gl_complex<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, panels: usize) -> Complex64 {
    Complex64::new(gl(|t| f(t).re, a, b, panels), gl(|t| f(t).im, a, b, panels))
}

/// `Si(t)` by quadrature of the defining integral.
pub fn si_quadrature(t: f64) -> f64 {
    let sinc = |u: f64| if u == 0.0 { 1.0 } else { u.sin() / u };
    gl(sinc, 0.0, t, 64)
}

/// `Cin(t) = Σ_{k≥1} (−1)^{k+1} t^{2k}/(2k·(2k)!)`.
pub fn cin_series(t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..200 {
        let n = 2.0 * k as f64;
        term *= -t * t / ((n - 1.0) * n);
        let add = -term / n;
        sum += add;
        if add.abs() < 1e-20 {
            break;
        }
    }
    sum
}

pub fn ci_series(t: f64) -> f64 {
    GAMMA + t.ln() - cin_series(t)
}

/// `∫₀^∞ e^{iu}/(u + t) du`: quadrature over whole periods, then the
/// asymptotic tail `i e^{iA} Σ_k (−i)^k k!/(A + t)^{k+1}`.
pub fn e_oscillatory(t: f64) -> Complex64 {
    let periods = 400;
    let a = 2.0 * std::f64::consts::PI * periods as f64;
    let body = gl_complex(|u| Complex64::cis(u) / (u + t), 0.0, a, 4 * periods);
    let mut tail = Complex64::new(0.0, 0.0);
    let mut fact = 1.0;
    for k in 0..6 {
        if k > 0 {
            fact *= k as f64;
        }
        tail += Complex64::new(0.0, -1.0).powi(k) * fact / (a + t).powi(k + 1);
    }
    body + Complex64::i() * Complex64::cis(a) * tail
}

/// `M(t) = ∫₀^∞ e^{−t sinh s} ds`, the substitution `u = sinh s` of the
/// defining integral.
pub fn m_quadrature(t: f64) -> f64 {
    let s_max = (60.0 / t).asinh();
    gl(|s| (-t * s.sinh()).exp(), 0.0, s_max, 400)
}

/// `Σ_{k=1}^{N} e^{ikx}/(k+μ)` plus a two-step Abel estimate of the tail.
/// Returns the value and a bound on the error of the tail estimate.
pub fn l_direct(x: f64, mu: f64, terms: u64) -> (Complex64, f64) {
    let w = Complex64::cis(x);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for k in 1..=terms {
        let y = Complex64::cis(k as f64 * x) / (k as f64 + mu) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let a = |k: u64| 1.0 / (k as f64 + mu);
    let m = terms + 1;
    let one_minus = Complex64::new(1.0, 0.0) - w;
    // Σ_{k≥m} w^k a_k = (w^m a_m + Σ_{k>m} w^k Δa_k)/(1 − w), applied twice
    let da = |k: u64| a(k) - a(k - 1);
    let first = w.powu(m as u32) * a(m) / one_minus;
    let second = w.powu(m as u32 + 1) * da(m + 1) / (one_minus * one_minus);
    let bound = da(m + 1).abs() / one_minus.norm_sqr();
    (sum + first + second, bound)
}

/// `Σ_{k>n} z^k/k` divided by `z^{n+1}`.
///
/// Compensated series summation up to `N` with
/// `|z|^{N+1}/((N+1)(1−|z|)) < 1e-14`; for `|z| > 0.9999` the closed form
/// `−log(1−z) − Σ_{k≤n} z^k/k`.
pub fn log_remainder(z: Complex64, n: u64) -> Complex64 {
    let r = z.norm();
    let one = Complex64::new(1.0, 0.0);
    if r > 0.9999 {
        let mut sum = -(one - z).ln();
        let mut comp = Complex64::new(0.0, 0.0);
        let mut zk = one;
        for k in 1..=n {
            zk *= z;
            let y = -zk / k as f64 - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum / (zk * z);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut zj = one;
    let mut j = 0u64;
    loop {
        let y = zj / (n + 1 + j) as f64 - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        zj *= z;
        j += 1;
        let rj = zj.norm();
        if rj / ((n + 1 + j) as f64 * (1.0 - r)) < 1e-14 {
            return sum;
        }
    }
}

/// `Σ_{k=1}^n sin(kx)/k`.
pub fn sine_sum(x: f64, n: u64) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 1..=n {
        let y = (k as f64 * x).sin() / k as f64 - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Open grid of `count` midpoints of `(lo, hi)`.
pub fn midpoints(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| lo + (hi - lo) * (i as f64 + 0.5) / count as f64).collect()
}

/// Closed grid of `count` points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()
}

pub fn to_c(z: fejer::ComplexValue) -> Complex64 {
    Complex64::new(z.re, z.im)
}
