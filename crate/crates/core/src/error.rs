//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong when constructing or evaluating the
/// crate's domain objects.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two operands (or an operand and an expected shape) disagree in dimension.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A matrix that must be Hermitian is not, beyond tolerance.
    #[error("matrix is not Hermitian (max |M - M†| = {defect:e})")]
    NotHermitian { defect: f64 },

    /// A density matrix does not have unit trace.
    #[error("trace is {trace}, expected 1")]
    NotUnitTrace { trace: f64 },

    /// A matrix that must be positive semidefinite has a negative eigenvalue.
    #[error("matrix is not positive semidefinite (min eigenvalue = {min_eigenvalue:e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// A Bloch vector or state vector does not have unit norm.
    #[error("vector norm is {norm}, expected 1")]
    NotUnitNorm { norm: f64 },

    /// A trace that should be real carries a non-negligible imaginary part,
    /// which signals a non-Hermitian input somewhere upstream.
    #[error("non-negligible imaginary part {imag:e} in a quantity that must be real")]
    NonNegligibleImaginary { imag: f64 },

    /// An index into a setting list or outcome table is out of range.
    #[error("index {index} out of range (< {len})")]
    IndexOutOfRange { index: usize, len: usize },

    /// A witness only supports specific measurement-setting counts.
    #[error("unsupported setting count n = {n} (supported: {supported})")]
    UnsupportedSettingCount { n: usize, supported: &'static str },

    /// Alice's and Bob's setting lists differ in length, or are empty.
    #[error("invalid setting lists: alice has {alice}, bob has {bob} (need equal, nonzero)")]
    InvalidSettings { alice: usize, bob: usize },

    /// A probability table failed normalization or no-signalling validation.
    #[error("invalid probability table: {reason} (defect = {defect:e})")]
    InvalidDistribution { reason: &'static str, defect: f64 },

    /// Deterministic-strategy enumeration is cut off to catch accidental
    /// exponential blowups.
    #[error("strategy enumeration with n = {n} settings exceeds the cutoff ({max})")]
    EnumerationTooLarge { n: usize, max: usize },

    /// A scalar parameter lies outside its admissible range.
    #[error("parameter `{name}` = {value} out of range")]
    InvalidParameter { name: &'static str, value: f64 },

    /// Mixture weights must be normalized before they describe a state.
    #[error("mixture weights sum to {sum}, expected 1")]
    UnnormalizedWeights { sum: f64 },

    /// A witness kind was combined with a setting count it does not define.
    #[error("witness kind `{kind}` does not support n = {n}")]
    InvalidKindSettings { kind: &'static str, n: usize },

    /// A tomography count record does not cover all required setting pairs.
    #[error("count record incomplete: {reason}")]
    IncompleteCounts { reason: &'static str },
}
