//! Distinct squares in words: last-occurrence sequences, FS-double-squares,
//! extremal word families and checks of their closed-form predictions.
//!
//! The word engine is integer-only. Ratios derived from counts (densities,
//! probabilities) are generic over [`Scalar`]; the aliases below name the
//! instantiations used throughout the crate.

pub mod analysis;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod scalar;
pub mod verify;
pub mod word;

pub use engine::{
    density, distinct_square_sequence, enumerate_distinct_squares, expand_fs, fs_factorize,
    fs_positions, DensityReport, DistinctSquareRecord, DoubleSquare, Engine, FsFactorization,
    FsPosition, SquareAnalysis, SquareOccurrence, SquareSequence,
};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use word::{FactorRef, Word};

/// Exact ratio of two counts; densities of words fit comfortably.
pub type Rational = num_rational::Rational64;

/// Arbitrary-precision rational, for quantities such as `|A|^-(7m+3)`.
pub type Exact = num_rational::BigRational;

/// Floating-point evaluation of the same closed forms, for display only.
pub type Approx = f64;
