//! Error types shared across the library.

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("resultant of the zero polynomial is undefined")]
    ResultantOfZero,
    #[error("division by zero rational function")]
    DivisionByZeroRatFun,
    #[error("subset cardinality {k} out of range for degree {degree}")]
    SubsetCardinality { k: usize, degree: usize },
    #[error("subset-product dimension {dim} exceeds cap {cap} (set CIRCTREE_MAX_DIM to override)")]
    DimensionCap { dim: u128, cap: u64 },
    #[error("composed product requires monic operands")]
    NotMonic,
    #[error("log-derivative input must have constant term 1")]
    ConstantTermNotOne,
    #[error("series expansion undefined: pole at x = 0")]
    PoleAtZero,
    #[error("series coefficient at n = {n} is not an integer")]
    NonIntegerCoefficient { n: usize },
}

/// Errors from graph construction and the determinant oracle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("jump list must be nonempty, strictly increasing and positive")]
    BadJumps,
    #[error("instance parameter n must be at least 1")]
    BadParameter,
    #[error("vertex count {count} exceeds cap {cap} (pass the unsafe-limits override)")]
    VertexCap { count: u64, cap: u64 },
}

/// Errors from the closed-form τ engine and numeric cross-checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("family kind mismatch: {0}")]
    KindMismatch(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("root finder failed to converge")]
    RootFinder,
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// Errors from the generating-function builders and verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenFuncError {
    #[error("integrality violation: {0}")]
    Integrality(String),
    #[error("palindromy violation: F(x) != F(1/x) for {0}")]
    Palindromy(String),
    #[error(
        "series mismatch at n = {n}: generating function gives {got}, closed form gives {want}"
    )]
    SeriesMismatch { n: usize, got: String, want: String },
    #[error("input to w-substitution is not palindromic (x-linear component nonzero)")]
    NotPalindromic,
    #[error("rational fit failed: {0}")]
    FitFailed(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
}
