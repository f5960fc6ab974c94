//! Kraus channels on single qubits and their action inside larger systems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, pauli_x, pauli_y, pauli_z, tensor, ComplexMatrix, DensityMatrix};
use crate::tolerance;

/// Ordered single-qubit Kraus operators.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel {
    operators: Vec<ComplexMatrix>,
    trace_preserving: bool,
}

impl KrausChannel {
    /// Checks completeness (or sub-normalisation when not trace preserving).
    pub fn new(operators: Vec<ComplexMatrix>, trace_preserving: bool) -> Result<Self> {
        if operators.is_empty() {
            return Err(Error::domain("a channel needs at least one Kraus operator"));
        }
        if let Some(k) = operators.iter().find(|k| k.rows() != 2 || k.cols() != 2) {
            return Err(Error::dim(format!(
                "Kraus operators must be 2x2, got {}x{}",
                k.rows(),
                k.cols()
            )));
        }
        let ch = Self {
            operators,
            trace_preserving,
        };
        let gram = ch.completeness();
        let id = ComplexMatrix::identity(2);
        if trace_preserving {
            let err = gram.max_abs_diff(&id);
            if err > tolerance::KRAUS_COMPLETENESS {
                return Err(Error::domain(format!(
                    "Kraus operators are not complete (defect {err:e})"
                )));
            }
        } else {
            let slack = crate::linalg::hermitian_eigen(&(&id - &gram))?;
            let min = slack.values.last().copied().unwrap_or(0.0);
            if min < -tolerance::KRAUS_COMPLETENESS {
                return Err(Error::domain(format!(
                    "sum K^dagger K exceeds the identity (min slack {min:e})"
                )));
            }
        }
        Ok(ch)
    }

    pub fn identity() -> Self {
        Self {
            operators: vec![ComplexMatrix::identity(2)],
            trace_preserving: true,
        }
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn is_trace_preserving(&self) -> bool {
        self.trace_preserving
    }

    /// `sum K^dagger K`.
    pub fn completeness(&self) -> ComplexMatrix {
        self.operators
            .iter()
            .map(|k| &k.dagger() * k)
            .fold(ComplexMatrix::zeros(2, 2), |acc, m| &acc + &m)
    }
}

/// Noise strength, optionally derived from a decay exponent `x` as `1 - e^-x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoiseParams {
    pub strength: f64,
    pub decay_exponent: Option<f64>,
}

impl NoiseParams {
    pub fn new(strength: f64) -> Result<Self> {
        check_unit(strength, "noise strength")?;
        Ok(Self {
            strength,
            decay_exponent: None,
        })
    }

    pub fn from_decay(exponent: f64) -> Result<Self> {
        if !(exponent >= 0.0) {
            return Err(Error::domain(format!(
                "decay exponent must be non-negative, got {exponent}"
            )));
        }
        Ok(Self {
            strength: -(-exponent).exp_m1(),
            decay_exponent: Some(exponent),
        })
    }
}

fn check_unit(x: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("{what} must lie in [0, 1], got {x}")));
    }
    Ok(())
}

/// `{sqrt(1-p) 1, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}`.
pub fn depolarizing_channel(p: f64) -> Result<KrausChannel> {
    check_unit(p, "depolarizing strength p")?;
    let w = c((p / 3.0).sqrt());
    KrausChannel::new(
        vec![
            ComplexMatrix::identity(2).scale(c((1.0 - p).sqrt())),
            pauli_x().scale(w),
            pauli_y().scale(w),
            pauli_z().scale(w),
        ],
        true,
    )
}

/// `{diag(1, sqrt(1-q)), diag(0, sqrt(q))}`.
pub fn phase_damping_channel(q: f64) -> Result<KrausChannel> {
    check_unit(q, "phase-damping strength q")?;
    KrausChannel::new(
        vec![
            ComplexMatrix::from_diagonal(&[1.0, (1.0 - q).sqrt()]),
            ComplexMatrix::from_diagonal(&[0.0, q.sqrt()]),
        ],
        true,
    )
}

/// Weak measurement `diag(1, sqrt(1-gamma))`, followed by post-selection.
pub fn weak_measurement(gamma: f64) -> Result<KrausChannel> {
    check_unit(gamma, "measurement strength gamma")?;
    KrausChannel::new(
        vec![ComplexMatrix::from_diagonal(&[1.0, (1.0 - gamma).sqrt()])],
        false,
    )
}

/// `{sqrt(1-2p/3) 1, sqrt(p/3) X, sqrt(p/3) Z}`.
///
/// Applied to the Region-I mode this is the memory-side noise model whose
/// traced output is the standard DP-scenario X-state.
pub fn xz_flip_channel(p: f64) -> Result<KrausChannel> {
    check_unit(p, "flip strength p")?;
    let w = c((p / 3.0).sqrt());
    KrausChannel::new(
        vec![
            ComplexMatrix::identity(2).scale(c((1.0 - 2.0 * p / 3.0).sqrt())),
            pauli_x().scale(w),
            pauli_z().scale(w),
        ],
        true,
    )
}

/// Applies `channel` to qubit `target` of a state on qubits with `dims`.
///
/// Returns the unnormalised output and its trace.
pub fn apply_unnormalized(
    rho: &ComplexMatrix,
    dims: &[usize],
    target: usize,
    channel: &KrausChannel,
) -> Result<(ComplexMatrix, f64)> {
    let total: usize = dims.iter().product();
    if !rho.is_square() || rho.rows() != total {
        return Err(Error::dim(format!(
            "dims {dims:?} do not match a {}x{} state",
            rho.rows(),
            rho.cols()
        )));
    }
    if target >= dims.len() || dims[target] != 2 {
        return Err(Error::dim(format!(
            "target subsystem {target} of {dims:?} is not a qubit"
        )));
    }
    let left = ComplexMatrix::identity(dims[..target].iter().product());
    let right = ComplexMatrix::identity(dims[target + 1..].iter().product());
    let mut out = ComplexMatrix::zeros(total, total);
    for k in channel.operators() {
        let full = tensor(&tensor(&left, k), &right);
        out = &out + &full.conjugate(rho)?;
    }
    let tr = out.trace().re;
    Ok((out, tr))
}

/// Applies a channel to one qubit of a validated state.
///
/// Non-trace-preserving channels are renormalised by their success
/// probability, which is returned alongside the state (1 otherwise).
pub fn apply_on_subsystem(
    rho: &DensityMatrix,
    dims: &[usize],
    target: usize,
    channel: &KrausChannel,
) -> Result<(DensityMatrix, f64)> {
    let (out, p_succ) = apply_unnormalized(rho.matrix(), dims, target, channel)?;
    if channel.is_trace_preserving() {
        return Ok((DensityMatrix::new(out)?, 1.0));
    }
    if !(p_succ > tolerance::POST_SELECTION) {
        return Err(Error::DegeneratePostSelection(p_succ));
    }
    Ok((DensityMatrix::new(out.scale(c(1.0 / p_succ)))?, p_succ))
}

/// Applies a channel to qubit A, the first tensor factor.
pub fn apply_on_a(rho: &DensityMatrix, channel: &KrausChannel) -> Result<(DensityMatrix, f64)> {
    let d = rho.dim();
    if !d.is_multiple_of(2) {
        return Err(Error::dim(format!("dimension {d} has no leading qubit")));
    }
    apply_on_subsystem(rho, &[2, d / 2], 0, channel)
}
