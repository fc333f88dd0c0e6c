use thiserror::Error;

use crate::scalar::FieldSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    NonPrimeModulus(u64),
    #[error("unrecognised field `{0}` (expected `Q` or `p=<prime>`)")]
    BadField(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("structure constants violate the dialgebra axioms ({0} violations)")]
    AxiomFailure(usize),
    #[error("algebra is not perfect (dim L' = {derived} < dim L = {dim})")]
    NotPerfect { dim: usize, derived: usize },
    #[error("extension is not central")]
    NotCentral,
    #[error("cochain pair is not a 2-cocycle")]
    NotACocycle,
    #[error("map is not a section of the projection")]
    InvalidSection,
    #[error("map is not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("extension tower mismatch: {0}")]
    TowerMismatch(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
