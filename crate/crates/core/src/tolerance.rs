//! Numerical tolerances shared across the crate.
//!
//! Every threshold used by validation code lives here so the library and the
//! acceptance suite agree on what "equal" means.

/// Hermiticity of a density matrix, `max |rho - rho^dagger|`.
pub const HERMITIAN: f64 = 1e-12;

/// Hermiticity accepted on input to the eigensolver.
pub const EIGEN_INPUT_HERMITIAN: f64 = 1e-10;

/// Unit trace of a density matrix.
pub const TRACE: f64 = 1e-12;

/// Smallest admissible eigenvalue of a positive semidefinite state.
pub const PSD: f64 = -1e-10;

/// Eigenvalues in `[ENTROPY_CLIP, 0)` are treated as exact zeros by the entropy.
pub const ENTROPY_CLIP: f64 = -1e-10;

/// Completeness `sum K^dagger K = 1` of a trace-preserving Kraus set.
pub const KRAUS_COMPLETENESS: f64 = 1e-12;

/// Largest off-X entry tolerated by the X-state discord formula.
pub const X_STATE: f64 = 1e-12;

/// Agreement required between a closed form and the numeric pipeline.
pub const DUAL_PATH: f64 = 1e-9;

/// Success probabilities at or below this are a failed post-selection.
pub const POST_SELECTION: f64 = 1e-14;
