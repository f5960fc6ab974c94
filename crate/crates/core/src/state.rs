//! Initial states and the Hawking embedding of qubit B.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, pauli_x, pauli_y, pauli_z, tensor, ComplexMatrix, DensityMatrix};

/// Temperatures at or above this multiple of `omega` are treated as infinite.
pub const INFINITE_TEMPERATURE_RATIO: f64 = 1e12;

const PHYSICAL_SLACK: f64 = 1e-12;

/// Correlation coefficients of a Bell-diagonal state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BellParams {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl BellParams {
    /// Validated constructor: every `|c_i| <= 1` and the state is positive.
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        let p = Self::unchecked(c1, c2, c3);
        p.validate()?;
        Ok(p)
    }

    /// Skips the positivity check. Callers that accept unphysical initial
    /// parameters must validate the evolved state themselves.
    pub const fn unchecked(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("c1", self.c1), ("c2", self.c2), ("c3", self.c3)] {
            if !v.is_finite() || v.abs() > 1.0 + PHYSICAL_SLACK {
                return Err(Error::domain(format!("{name} = {v} is outside [-1, 1]")));
            }
        }
        for (label, lambda) in self.labelled_eigenvalues() {
            if lambda < -PHYSICAL_SLACK {
                return Err(Error::domain(format!(
                    "Bell-diagonal eigenvalue {label} = {lambda:.6} is negative for {self}"
                )));
            }
        }
        Ok(())
    }

    pub fn is_physical(&self) -> bool {
        self.validate().is_ok()
    }

    /// Bell-basis weights of the state.
    pub fn eigenvalues(&self) -> [f64; 4] {
        self.labelled_eigenvalues().map(|(_, v)| v)
    }

    fn labelled_eigenvalues(&self) -> [(&'static str, f64); 4] {
        let Self { c1, c2, c3 } = *self;
        [
            ("(1-c1-c2-c3)/4", 0.25 * (1.0 - c1 - c2 - c3)),
            ("(1-c1+c2+c3)/4", 0.25 * (1.0 - c1 + c2 + c3)),
            ("(1+c1-c2+c3)/4", 0.25 * (1.0 + c1 - c2 + c3)),
            ("(1+c1+c2-c3)/4", 0.25 * (1.0 + c1 + c2 - c3)),
        ]
    }
}

impl std::fmt::Display for BellParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.c1, self.c2, self.c3)
    }
}

/// A single fermionic mode near the horizon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HawkingMode {
    omega: f64,
    temperature: f64,
    a: f64,
    b: f64,
}

impl HawkingMode {
    pub fn new(omega: f64, temperature: f64) -> Result<Self> {
        let (a, b) = hawking_coeffs(omega, temperature)?;
        Ok(Self {
            omega,
            temperature,
            a,
            b,
        })
    }

    /// Mode with unit frequency at temperature `t_over_omega`.
    pub fn from_ratio(t_over_omega: f64) -> Result<Self> {
        Self::new(1.0, t_over_omega)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn t_over_omega(&self) -> f64 {
        self.temperature / self.omega
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// Vacuum and excitation amplitudes `(a, b)` of the Kruskal mode.
///
/// `T = 0` is the exact limit `(1, 0)`; `T >= 1e12 omega` is the infinite
/// temperature limit. In between, `b` is computed from `a` through the
/// logistic form so that `a^2 + b^2 = 1` holds to rounding.
pub fn hawking_coeffs(omega: f64, temperature: f64) -> Result<(f64, f64)> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::domain(format!("omega must be positive, got {omega}")));
    }
    if !(temperature >= 0.0) {
        return Err(Error::domain(format!(
            "temperature must be non-negative, got {temperature}"
        )));
    }
    if temperature == 0.0 {
        return Ok((1.0, 0.0));
    }
    if temperature >= INFINITE_TEMPERATURE_RATIO * omega {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        return Ok((h, h));
    }
    let x = omega / temperature;
    // a^2 = 1/(1+e^-x), b^2 = 1/(1+e^x); both stay finite for any x > 0.
    let a2 = 1.0 / (1.0 + (-x).exp());
    let b2 = 1.0 / (1.0 + x.exp());
    Ok((a2.sqrt(), b2.sqrt()))
}

/// `(1/4)(1 + sum c_i sigma_i (x) sigma_i)`.
pub fn bell_diagonal(params: BellParams) -> Result<DensityMatrix> {
    params.validate()?;
    DensityMatrix::new(bell_diagonal_matrix(params))
}

/// Same matrix without any validation.
pub fn bell_diagonal_matrix(params: BellParams) -> ComplexMatrix {
    let xx = tensor(&pauli_x(), &pauli_x()).scale(c(params.c1));
    let yy = tensor(&pauli_y(), &pauli_y()).scale(c(params.c2));
    let zz = tensor(&pauli_z(), &pauli_z()).scale(c(params.c3));
    let sum = &(&(&ComplexMatrix::identity(4) + &xx) + &yy) + &zz;
    sum.scale(c(0.25))
}

/// Isometry `B -> B_I (x) B_II` of the Kruskal vacuum/excitation structure.
pub fn hawking_isometry(mode: &HawkingMode) -> ComplexMatrix {
    let mut v = ComplexMatrix::zeros(4, 2);
    v[(0, 0)] = c(mode.a);
    v[(3, 0)] = c(mode.b);
    v[(2, 1)] = c(1.0);
    v
}

/// Embeds qubit B of a two-qubit state into the `B_I (x) B_II` mode pair.
pub fn embed_hawking(rho_ab: &DensityMatrix, mode: &HawkingMode) -> Result<DensityMatrix> {
    DensityMatrix::new(embed_hawking_matrix(rho_ab.matrix(), mode)?)
}

pub fn embed_hawking_matrix(rho_ab: &ComplexMatrix, mode: &HawkingMode) -> Result<ComplexMatrix> {
    if rho_ab.rows() != 4 || !rho_ab.is_square() {
        return Err(Error::dim(format!(
            "Hawking embedding needs a 4x4 state, got {}x{}",
            rho_ab.rows(),
            rho_ab.cols()
        )));
    }
    let w = tensor(&ComplexMatrix::identity(2), &hawking_isometry(mode));
    w.conjugate(rho_ab)
}

/// Discards the inaccessible interior mode.
pub fn trace_region_ii(rho_abb: &DensityMatrix) -> Result<DensityMatrix> {
    if rho_abb.dim() != 8 {
        return Err(Error::dim(format!(
            "expected an 8x8 tripartite state, got dimension {}",
            rho_abb.dim()
        )));
    }
    crate::linalg::partial_trace(rho_abb, &[2, 2, 2], &[0, 1])
}
