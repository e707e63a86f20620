//! Spectral and degree-based sufficient conditions for Hamiltonian paths and
//! cycles, with certificates that can be cross-checked against an exact
//! oracle and an exhaustive verification harness for small graphs.
//!
//! * [`graph`]: bit-row graphs of order at most 64, named graphs, extremal
//!   recognizers, graph6.
//! * [`spectral`]: certified spectral radius intervals and exact threshold
//!   comparisons.
//! * [`closure`]: the Bondy–Chvátal k-closure.
//! * [`hamilton`]: subset-DP oracle, Ore and edge-count conditions.
//! * [`certify`]: the theorem pipeline.
//! * [`harness`]: enumeration, sweeps, reports and the command line.

pub mod certify;
pub mod closure;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod harness;
pub mod spectral;

pub use certify::{certify, Certificate, Verdict};
pub use error::{Error, Graph6Error, Result};
pub use graph::{DegreeSequence, Extremal, Graph, NamedGraph};
pub use spectral::{Relation, SpectralBound, ThresholdComparison};
