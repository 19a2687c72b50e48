//! Mathematical constants used throughout the crate.

pub use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI, SQRT_2};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `C₁ = ln 2 − γ`, the constant in the small-`t` behaviour of `M(t)`.
pub const C1: f64 = LN_2 - EULER_GAMMA;

/// `C₂ = ln(1 + √2) = arcsinh 1`.
pub const C2: f64 = 0.881_373_587_019_542_9;

/// `C₃ = √((π/2)² + 1)`.
pub const C3: f64 = 1.862_095_889_118_586_6;

/// Optimal constant of the even-`n` upper bound `S_n(x) < α(π − x)`,
/// kept at the five printed digits.
pub const ALPHA_EVEN: f64 = 0.66395;

/// Threshold `t₀`, root of `M(t) = arccot t`, at the published precision.
pub const T0_PUBLISHED: f64 = 0.709_566_763_5;

/// Threshold `t₁`, root of `|E(t)| = arccot t`, at the published precision.
pub const T1_PUBLISHED: f64 = 0.468_563_318_7;
