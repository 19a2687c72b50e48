//! Fejér-Jackson type trigonometric sums, their Laplace-transform
//! representations, integrated Dirichlet kernels, and a harness that
//! certifies the envelope inequalities attached to them.
//!
//! Module map:
//!
//! - [`specfun`]: Si, Ci, Cin, the exponential integral `E(t)`, the
//!   comparison function `M(t)`, digamma, log-gamma, arccot.
//! - [`fjsums`]: `L(x, μ)`, its truncations, the odd-frequency variant and
//!   the special value `Sπ(λ)`.
//! - [`dirichlet`]: Dirichlet kernel and the integrated kernels Ssi, Eci.
//! - [`bounds`]: every envelope / comparison bound as a pure function.
//! - [`verify`]: grid sweeps, threshold roots, identity and limit checks.
//! - [`cli`]: command-line front end and CSV/JSON emitters.

// `!(a < b)` is used on purpose so that NaN fails domain checks
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision, clippy::manual_is_multiple_of)]

pub mod bounds;
pub mod cli;
pub mod complex;
pub mod consts;
pub mod dirichlet;
pub mod error;
pub mod fjsums;
pub mod quad;
pub mod series;
pub mod specfun;
pub mod verify;

pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use quad::Estimate;
pub use specfun::EvalOptions;
