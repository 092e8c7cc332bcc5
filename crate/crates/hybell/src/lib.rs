//! Bell-nonlocality and nonclassicality tests for a hybrid homodyne measurement scheme.
//!
//! One radiation mode (Alice) is probed by balanced homodyne detection with two
//! local-oscillator phases, the other (Bob) by unbalanced homodyne detection with
//! two displacement settings. The crate evaluates the resulting joint outcome
//! distributions ("behaviors") in closed form for two-mode squeezed vacuum and
//! Schrödinger-cat states, runs a constructive locality test that either exhibits
//! a non-negative joint distribution of all observables or reports the violation
//! margin, and checks a Bell-like inequality whose violation certifies that the
//! correlations cannot be simulated with non-negative phase-space functions.
//!
//! Heavy inner loops (multistart searches, parameter scans, Monte-Carlo sampling)
//! run on rayon when the default `parallel` feature is enabled and fall back to
//! sequential iteration otherwise. All results are deterministic for a fixed seed
//! regardless of thread count.

pub mod behaviors;
mod error;
pub mod locality;
pub mod nonclassicality;
pub mod numerics;
mod parallel;
pub mod phase_space;
pub mod protocols;
pub mod rng;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_support;
