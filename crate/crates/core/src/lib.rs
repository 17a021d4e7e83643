//! Discrete 1-center, 1-median and diameter solvers over `l_p`, Hamming,
//! edit and Ulam metrics.
//!
//! The crate has four layers:
//!
//! - [`metrics`]: exact distances, bounded edit distance, Ulam distance via
//!   longest increasing subsequence, weighted Ulam distance over compressed
//!   permutations, and a budgeted Ulam estimator interface.
//! - [`solvers`]: the signed-sum `l_1` center/diameter algorithm running in
//!   `O(2^d n d)`, an `O(nd)` `l_inf` center, and quadratic brute-force
//!   oracles for every supported metric.
//! - [`ulam_center`]: a two-regime `(1+eps)`-approximate 1-center for
//!   permutations that is exact whenever all inputs are close to one another.
//! - [`reductions`]: instance generators for hitting-set, Hamming-to-Ulam,
//!   Hamming-to-edit and facility-padding constructions with their
//!   ground-truth oracles.
//!
//! [`cli_io`] holds the instance/result file formats and the command
//! implementations behind the `onecenter` binary.

pub mod cli_io;
pub mod error;
pub mod metrics;
pub mod reductions;
pub mod solvers;
pub mod ulam_center;

pub use error::{Error, Result};
