//! `(1+eps)`-approximate 1-center for permutations under the Ulam metric.
//!
//! The input is split into two regimes by measuring every permutation
//! against the first one. When all of them are close (Low), pairwise
//! distances are computed exactly on compressed strings whose length is
//! proportional to the number of moved symbols. Otherwise (High) the optimal
//! radius is known to exceed `ceil(sqrt(d))` and a budgeted estimator with
//! that threshold is enough for a `(1+eps)` answer.

mod approx;
mod compress;
mod regime;

pub use approx::{ulam_center_approx, ulam_center_approx_with};
pub use compress::{bucket_decomposition, compress_pair, BucketDecomposition};
pub use regime::{ceil_sqrt, detect_regime, low_regime_limit, Regime};
