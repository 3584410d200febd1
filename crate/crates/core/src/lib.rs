//! Exact enumeration of resonant wave-vector tuples on the integer lattice.
//!
//! Frequencies of the form `(m² + n²)^(1/c)` are split into classes: every
//! norm `t` is written uniquely as `t = γ^|c| · q` with `q` free of `|c|`-th
//! powers. Numbers of distinct classes are linearly independent over the
//! rationals, so a resonance can only occur inside a single class, where the
//! irrational frequency condition collapses to an integer equation on the
//! weights `γ`. The search is therefore run class by class:
//!
//! 1. [`class_sieve`] enumerates admissible class indices and multiplicities,
//! 2. [`two_squares`] finds every lattice point on each class circle,
//! 3. [`weights`] solves the per-class weight equation,
//! 4. [`search`] combines weights, decompositions and signs into tuples,
//! 5. [`pipeline`] orchestrates the classes and aggregates [`stats`].
//!
//! [`oracle`] is an independent brute-force enumerator for small domains.
//!
//! Everything here is integer arithmetic; the crate is `no_std` and only
//! needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod class_sieve;
pub mod config;
pub mod error;
pub mod factor;
pub mod oracle;
pub mod pipeline;
pub mod search;
pub mod stats;
pub mod two_squares;
pub mod weights;

pub use class_sieve::{is_class_index, multiplicity, sieve_classes, ClassIndex, ClassRecord};
pub use config::{QuotientMode, RunConfig, WaveKind};
pub use error::Error;
pub use factor::{Factorization, SpfTable};
pub use pipeline::{ClassOutcome, ClassSolutions, Pipeline, RunOutput};
pub use search::{ResonanceQuad, ResonanceTriad, TrivialPairing, WaveVector};
pub use stats::RunStats;
pub use two_squares::TwoSquareDecomposition;
pub use weights::{Degeneracy, WeightQuad, WeightTriad};
