//! Centralized numerical tolerances.
//!
//! Every validation threshold used by the crate lives in one configuration
//! record with documented defaults. Operations that validate their inputs take
//! the record (or use [`Tolerances::default`]); nothing else in the crate
//! hard-codes a comparison epsilon.

/// Validation thresholds for the whole crate.
///
/// The defaults are deliberate, not interchangeable:
/// matrix-level identities that hold exactly in real arithmetic get 1e-10
/// (a few hundred ulps of headroom for 4×4 products), quantities that pass
/// through an iterative eigensolver get 1e-9, and accumulated multi-step
/// pipelines (fidelity of reconstructed states) get 1e-8.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Entrywise absolute tolerance for matrix equality comparisons.
    pub matrix_eq: f64,
    /// Max |M − M†| entrywise for a matrix to count as Hermitian.
    pub hermiticity: f64,
    /// |Tr M − 1| for a matrix to count as unit trace.
    pub unit_trace: f64,
    /// A matrix is accepted as positive semidefinite when its smallest
    /// eigenvalue is ≥ −`psd_floor`.
    pub psd_floor: f64,
    /// | ‖v‖ − 1 | for Bloch vectors and state vectors.
    pub unit_norm: f64,
    /// Tolerance on the ±1 eigenvalues of a Bloch observable.
    pub observable_eigen: f64,
    /// Imaginary parts of Born-rule traces up to this size are discarded;
    /// anything larger is an error (it signals a non-Hermitian input).
    pub imag_trace: f64,
    /// Probabilities in [−`prob_clamp`, 0) are rounded-up floating-point
    /// noise and get clamped to 0 before validation.
    pub prob_clamp: f64,
    /// |Σ_{a,b} P(a,b|i,j) − 1| per setting pair.
    pub normalization: f64,
    /// Max spread of a party's marginals across the other party's settings.
    pub no_signalling: f64,
    /// A witness counts as violated when value > bound + `violation`.
    pub violation: f64,
    /// |F(ρ,σ) − F(σ,ρ)| allowed for the fidelity, which runs through two
    /// eigendecompositions per direction.
    pub fidelity_symmetry: f64,
}

impl Tolerances {
    /// The documented defaults, usable in `const` contexts.
    pub const DEFAULT: Tolerances = Tolerances {
        matrix_eq: 1e-10,
        hermiticity: 1e-10,
        unit_trace: 1e-10,
        psd_floor: 1e-10,
        unit_norm: 1e-10,
        observable_eigen: 1e-9,
        imag_trace: 1e-10,
        prob_clamp: 1e-12,
        normalization: 1e-9,
        no_signalling: 1e-9,
        violation: 1e-9,
        fidelity_symmetry: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
