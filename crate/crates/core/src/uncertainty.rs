//! Entropies and the memory-assisted uncertainty relation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{bloch_operator, c, tensor, ComplexMatrix, DensityMatrix};
use crate::tolerance;

pub use crate::closed_form::{
    analytic_u_dp, analytic_u_pd, analytic_u_qwm_dp, analytic_u_qwm_pd, analytic_ub_dp,
    analytic_ub_pd,
};

const UNIT_NORM: f64 = 1e-12;

/// Two single-qubit observables measured on A, given by Bloch axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObservablePair {
    first: [f64; 3],
    second: [f64; 3],
    overlap_c: f64,
}

impl ObservablePair {
    pub fn new(first: [f64; 3], second: [f64; 3]) -> Result<Self> {
        for n in [first, second] {
            let norm = n.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !((norm - 1.0).abs() <= UNIT_NORM) {
                return Err(Error::domain(format!(
                    "Bloch vector {n:?} has norm {norm}, expected 1"
                )));
            }
        }
        let overlap_c = max_overlap(first, second)?;
        Ok(Self {
            first,
            second,
            overlap_c,
        })
    }

    /// The `(sigma_x, sigma_z)` pair, with `c = 1/2`.
    pub fn pauli_xz() -> Self {
        Self::new([1.0, 0.0, 0.0], [0.0, 0.0, 1.0]).expect("unit axes")
    }

    pub fn first(&self) -> [f64; 3] {
        self.first
    }

    pub fn second(&self) -> [f64; 3] {
        self.second
    }

    pub fn overlap_c(&self) -> f64 {
        self.overlap_c
    }

    /// `log2(1/c)`.
    pub fn complementarity(&self) -> f64 {
        -self.overlap_c.log2()
    }
}

fn projectors(n: [f64; 3]) -> [ComplexMatrix; 2] {
    let id = ComplexMatrix::identity(2);
    let s = bloch_operator(n);
    [
        (&id + &s).scale(c(0.5)),
        (&id - &s).scale(c(0.5)),
    ]
}

/// Largest `|<psi|phi>|^2 = Tr(P Q)` over eigenprojectors of the two observables.
fn max_overlap(first: [f64; 3], second: [f64; 3]) -> Result<f64> {
    let mut best = 0.0f64;
    for p in projectors(first) {
        for q in projectors(second) {
            best = best.max(p.matmul(&q)?.trace().re);
        }
    }
    Ok(best)
}

/// Shannon entropy of a spectrum, in bits.
///
/// Values in `[ENTROPY_CLIP, 0)` count as zero; anything more negative is an error.
pub fn spectrum_entropy(values: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &x in values {
        if x > 0.0 {
            s -= x * x.log2();
        } else if x < tolerance::ENTROPY_CLIP {
            return Err(Error::NegativeEigenvalue(x));
        }
    }
    Ok(s)
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    spectrum_entropy(&rho.eigenvalues()?)
}

pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("binary entropy needs x in [0, 1], got {x}")));
    }
    spectrum_entropy(&[x, 1.0 - x])
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::dim(format!(
            "expected a two-qubit state, got dimension {}",
            rho.dim()
        )));
    }
    Ok(())
}

/// Non-selective measurement of `n . sigma` on qubit A.
pub fn dephase_after_measurement(rho_ab: &DensityMatrix, observable: [f64; 3]) -> Result<DensityMatrix> {
    require_two_qubits(rho_ab)?;
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4, 4);
    for p in projectors(observable) {
        out = &out + &tensor(&p, &id).conjugate(rho_ab.matrix())?;
    }
    DensityMatrix::new(out)
}

fn memory_entropy(rho_ab: &DensityMatrix) -> Result<f64> {
    von_neumann_entropy(&crate::linalg::partial_trace(rho_ab, &[2, 2], &[1])?)
}

/// `S(A|B) = S(rho_AB) - S(rho_B)`.
pub fn conditional_entropy(rho_ab: &DensityMatrix) -> Result<f64> {
    require_two_qubits(rho_ab)?;
    Ok(von_neumann_entropy(rho_ab)? - memory_entropy(rho_ab)?)
}

/// `H(S|B) + H(R|B)`.
pub fn eur_lhs_numeric(rho_ab: &DensityMatrix, pair: &ObservablePair) -> Result<f64> {
    require_two_qubits(rho_ab)?;
    let sb = memory_entropy(rho_ab)?;
    let h1 = von_neumann_entropy(&dephase_after_measurement(rho_ab, pair.first)?)? - sb;
    let h2 = von_neumann_entropy(&dephase_after_measurement(rho_ab, pair.second)?)? - sb;
    Ok(h1 + h2)
}

/// `S(A|B) + log2(1/c)`.
pub fn eur_bound_numeric(rho_ab: &DensityMatrix, pair: &ObservablePair) -> Result<f64> {
    Ok(conditional_entropy(rho_ab)? + pair.complementarity())
}

/// Everything computed at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub lhs_numeric: f64,
    pub lhs_analytic: Option<f64>,
    pub bound_numeric: f64,
    pub bound_analytic: Option<f64>,
    pub conditional_entropy: f64,
    pub discord: f64,
    pub mixedness: f64,
    pub success_probability: f64,
}

impl UncertaintyReport {
    /// Largest analytic-vs-numeric gap, if any closed form was available.
    pub fn dual_path_gap(&self) -> Option<f64> {
        let gaps = [
            self.lhs_analytic.map(|u| (u - self.lhs_numeric).abs()),
            self.bound_analytic.map(|u| (u - self.bound_numeric).abs()),
        ];
        gaps.into_iter().flatten().reduce(|x, y| if x.is_nan() || y.is_nan() { f64::NAN } else { x.max(y) })
    }
}
