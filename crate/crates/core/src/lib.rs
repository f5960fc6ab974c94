//! Entropic uncertainty with quantum memory for a qubit pair whose memory
//! half sits near a Schwarzschild horizon.
//!
//! The crate builds Bell-diagonal states, embeds the memory qubit into
//! Hawking-radiation modes, applies local noise and weak measurement, and
//! reports the uncertainty, its lower bound, discord and mixedness. Every
//! quantity with a closed form is computed twice: once from the formula and
//! once from explicit density matrices.

// `!(x <= tol)` is used on purpose so that NaN fails every check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod closed_form;
pub mod correlations;
pub mod error;
pub mod linalg;
pub mod scenario;
pub mod state;
pub mod sweep;
pub mod tolerance;
pub mod uncertainty;

pub use error::{Error, Result};
