//! Exact-arithmetic engine for S_n-equivariant quadratic complete
//! intersections: Lefschetz property checks, symmetric-group isotypic
//! decompositions, Young-subgroup invariant rings and their gradings,
//! and block-Vandermonde generators for intersected ideals.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! arithmetic; no floating point enters any decision.

pub mod cli;
pub mod family;
pub mod invariants;
pub mod lefschetz;
pub mod polycore;
pub mod quotient;
pub mod symmetry;

pub use family::{FamilyInstance, FamilyParams, PointClass, ScanRow};
pub use invariants::{InvariantSlice, VandermondeGenerators, YoungSubgroup};
pub use lefschetz::{GradedSubspaceFamily, LefschetzReport};
pub use polycore::{Monomial, Permutation, Polynomial, Rational};
pub use quotient::{GradedIdealPresentation, GradedQuotient, HilbertFunction};
pub use symmetry::{CharacterTable, CycleType, PartitionOfN};

use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ambient variable count mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero generator in ideal presentation")]
    ZeroGenerator,
    #[error("degree {0} exceeds built range {1}")]
    DegreeOutOfRange(usize, usize),
    #[error("permutation length {0} does not match ambient {1}")]
    PermutationLength(usize, usize),
    #[error("expected {expected} generators, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("ideal is not stable under {0}")]
    NonStableIdeal(String),
    #[error("non-integer multiplicity for {partition} in degree {degree}: {value}")]
    NonIntegerMultiplicity {
        partition: String,
        degree: usize,
        value: String,
    },
    #[error("linear form is not invariant under the subgroup")]
    NotInvariant,
    #[error("subspace family is not stable under multiplication (witness degree {0})")]
    NotStable(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
