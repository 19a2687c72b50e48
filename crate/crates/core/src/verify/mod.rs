//! Certification harness: inequality sweeps over grids and seeded samples,
//! the threshold roots `t₀`, `t₁`, identity residuals and limit tables.
//!
//! Sweeps evaluate points in parallel and reduce sequentially in input
//! order, so reports are identical for identical inputs. A sample counts as
//! a violation only when its margin is below minus its evaluation budget;
//! samples whose margin is within the budget of zero are counted as near
//! equalities.

pub mod checks;
pub mod grid;
pub mod sample;
pub mod sweep;
pub mod threshold;

pub use checks::{check_identities, check_limits, IdentityResidual, LimitTable};
pub use grid::{Axis, Endpoints, GridSpec, Spacing};
pub use sweep::{evaluate_margin, sweep, sweep_points, InequalityReport, Sample, SampleDomain};
pub use threshold::{find_threshold, Threshold, ThresholdResult};
