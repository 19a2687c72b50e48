use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{arccot, comparison_m, exp_integral_e, EvalOptions};

/// The two threshold constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Threshold {
    /// Root of `M(t) = arccot t`.
    T0,
    /// Root of `|E(t)| = arccot t`.
    T1,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdResult {
    pub which: Threshold,
    pub root: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub evaluations: usize,
}

/// Initial bracket; both roots lie strictly between.
pub const BRACKET: (f64, f64) = (0.1, 1.0);

const WIDTH: f64 = 1e-13;

fn gap(which: Threshold, t: f64, opts: &EvalOptions) -> Result<f64> {
    let lhs = match which {
        Threshold::T0 => comparison_m(t, opts)?,
        Threshold::T1 => exp_integral_e(t, opts)?.abs(),
    };
    Ok(lhs - arccot(t)?)
}

/// Locates `t₀` or `t₁` by bisection to width `1e-13` followed by one
/// secant step. The gap function is positive left of the root.
pub fn find_threshold(which: Threshold, opts: &EvalOptions) -> Result<ThresholdResult> {
    opts.validate()?;
    // residuals must resolve 1e-12, so evaluations run tighter than that
    let tight = EvalOptions {
        abs_tol: opts.abs_tol.min(1e-14),
        ..*opts
    };
    let (mut lo, mut hi) = BRACKET;
    let mut g_lo = gap(which, lo, &tight)?;
    let mut g_hi = gap(which, hi, &tight)?;
    let mut evaluations = 2;
    if !(g_lo > 0.0 && g_hi < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    while hi - lo > WIDTH {
        let mid = 0.5 * (lo + hi);
        let g = gap(which, mid, &tight)?;
        evaluations += 1;
        if g == 0.0 {
            lo = mid;
            hi = mid;
            g_lo = 0.0;
            g_hi = 0.0;
            break;
        }
        if g > 0.0 {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
            g_hi = g;
        }
    }
    let secant = if g_lo == g_hi {
        0.5 * (lo + hi)
    } else {
        lo - g_lo * (hi - lo) / (g_hi - g_lo)
    };
    let root = if (lo..=hi).contains(&secant) { secant } else { 0.5 * (lo + hi) };
    let residual = gap(which, root, &tight)?;
    evaluations += 1;
    Ok(ThresholdResult {
        which,
        root,
        bracket_lo: lo,
        bracket_hi: hi,
        residual,
        evaluations,
    })
}
