//! Quantum discord and mixedness.
//!
//! Discord here is one-sided: the classical correlation is optimised over
//! rank-1 projective measurements on qubit B.

use std::f64::consts::PI;

use serde::Serialize;

use crate::closed_form::{h2, shannon};
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, DensityMatrix, C64};
use crate::tolerance;
use crate::uncertainty::von_neumann_entropy;

const GRID_THETA: usize = 64;
const GRID_PHI: usize = 128;
const ANGULAR_RESOLUTION: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiscordBranch {
    L1,
    L2,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiscordResult {
    pub discord: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub branch_used: DiscordBranch,
    /// Bloch angles `(theta, phi)` of the optimal measurement on B.
    pub measurement_angles: Option<(f64, f64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MixednessResult {
    pub mixedness: f64,
    pub purity: f64,
    pub dimension: usize,
}

fn require_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::dim(format!(
            "discord needs a two-qubit state, got dimension {}",
            rho.dim()
        )));
    }
    Ok(())
}

/// Largest modulus among entries outside the diagonal and anti-diagonal.
pub fn off_x_magnitude(rho: &DensityMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                worst = worst.max(rho[(i, j)].norm());
            }
        }
    }
    worst
}

fn marginal_entropies(rho: &DensityMatrix) -> Result<(f64, f64, f64)> {
    let sa = von_neumann_entropy(&partial_trace(rho, &[2, 2], &[0])?)?;
    let sb = von_neumann_entropy(&partial_trace(rho, &[2, 2], &[1])?)?;
    let sab = von_neumann_entropy(rho)?;
    Ok((sa, sb, sab))
}

fn assemble(
    rho: &DensityMatrix,
    min_conditional: f64,
    branch_used: DiscordBranch,
    measurement_angles: Option<(f64, f64)>,
) -> Result<DiscordResult> {
    let (sa, sb, sab) = marginal_entropies(rho)?;
    let mutual_information = sa + sb - sab;
    let classical_correlation = sa - min_conditional;
    Ok(DiscordResult {
        discord: mutual_information - classical_correlation,
        mutual_information,
        classical_correlation,
        branch_used,
        measurement_angles,
    })
}

/// The two-branch formula for X-states.
///
/// Only the `sigma_x` and `sigma_z` measurement directions on B are compared,
/// so the result bounds the true discord from above.
pub fn discord_xstate_closed_form(rho: &DensityMatrix) -> Result<DiscordResult> {
    require_two_qubits(rho)?;
    let off = off_x_magnitude(rho);
    if off > tolerance::X_STATE {
        return Err(Error::NotXState(off));
    }
    let d: Vec<f64> = rho.matrix().diagonal().iter().map(|z| z.re).collect();
    let coh = rho[(0, 3)].norm() + rho[(1, 2)].norm();
    let xi = (1.0 + ((1.0 - 2.0 * (d[2] + d[3])).powi(2) + 4.0 * coh * coh).sqrt()) / 2.0;
    let l1 = h2(xi);
    let l2 = shannon(&d) - h2(d[0] + d[2]);
    let (min_conditional, branch) = if l1 <= l2 {
        (l1, DiscordBranch::L1)
    } else {
        (l2, DiscordBranch::L2)
    };
    if !min_conditional.is_finite() {
        return Err(Error::InvalidState("closed-form discord branches are not finite".into()));
    }
    let mut r = assemble(rho, min_conditional, branch, None)?;
    // Reproduce the printed grouping H(rho22+rho44) - S + min, which equals
    // I - C up to rounding.
    r.discord = h2(d[1] + d[3]) - von_neumann_entropy(rho)? + min_conditional;
    Ok(r)
}

/// `sum_k p_k S(rho_A|k)` for the measurement on B along `(theta, phi)`.
fn measured_conditional_entropy(rho: &[[C64; 4]; 4], theta: f64, phi: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let n = [st * cp, st * sp, ct];
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        // Projector (1 + s n.sigma)/2 on B.
        let pi = [
            [C64::new(0.5 * (1.0 + sign * n[2]), 0.0), C64::new(0.5 * sign * n[0], -0.5 * sign * n[1])],
            [C64::new(0.5 * sign * n[0], 0.5 * sign * n[1]), C64::new(0.5 * (1.0 - sign * n[2]), 0.0)],
        ];
        // Unnormalised conditional state of A: Tr_B[(1 (x) Pi) rho].
        let mut m = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                for b in 0..2 {
                    for bp in 0..2 {
                        *entry += rho[2 * i + b][2 * j + bp] * pi[bp][b];
                    }
                }
            }
        }
        let (a, dd, off) = (m[0][0].re, m[1][1].re, m[0][1]);
        let pk = a + dd;
        if pk <= 0.0 {
            continue;
        }
        let disc = ((a - dd).powi(2) + 4.0 * off.norm_sqr()).sqrt();
        for mu in [(pk + disc) / 2.0, (pk - disc) / 2.0] {
            if mu > 0.0 {
                total -= mu * (mu / pk).log2();
            }
        }
    }
    total
}

/// Grid search plus coordinate descent over measurement axes on B.
pub fn discord_numeric(rho: &DensityMatrix) -> Result<DiscordResult> {
    require_two_qubits(rho)?;
    let mut r = [[C64::new(0.0, 0.0); 4]; 4];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = rho[(i, j)];
        }
    }
    let f = |t: f64, p: f64| measured_conditional_entropy(&r, t, p);

    let dt = PI / (GRID_THETA - 1) as f64;
    let dp = 2.0 * PI / GRID_PHI as f64;
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..GRID_THETA {
        let t = i as f64 * dt;
        for j in 0..GRID_PHI {
            let p = j as f64 * dp;
            let v = f(t, p);
            if v < best.0 {
                best = (v, t, p);
            }
        }
    }

    let (mut val, mut t, mut p) = best;
    let mut step = dt.max(dp);
    while step >= ANGULAR_RESOLUTION {
        let mut moved = false;
        for (nt, np) in [(t + step, p), (t - step, p), (t, p + step), (t, p - step)] {
            let v = f(nt, np);
            if v < val {
                (val, t, p) = (v, nt, np);
                moved = true;
            }
        }
        if !moved {
            step /= 2.0;
        }
    }
    let (t, p) = canonical_angles(t, p);
    assemble(rho, val, DiscordBranch::Numeric, Some((t, p)))
}

/// Maps any axis to `theta in [0, pi]`, `phi in [0, 2 pi)`.
fn canonical_angles(theta: f64, phi: f64) -> (f64, f64) {
    let mut t = theta.rem_euclid(2.0 * PI);
    let mut p = phi;
    if t > PI {
        t = 2.0 * PI - t;
        p += PI;
    }
    (t, p.rem_euclid(2.0 * PI))
}

/// `d/(d-1) (1 - Tr rho^2)`.
pub fn mixedness(rho: &DensityMatrix) -> MixednessResult {
    let d = rho.dim();
    let purity = rho.purity();
    let df = d as f64;
    MixednessResult {
        mixedness: df / (df - 1.0) * (1.0 - purity),
        purity,
        dimension: d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, tensor, ComplexMatrix};

    fn phi_plus() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = C64::new(0.0, 0.0);
        DensityMatrix::pure(&[c(s), z, z, c(s)]).unwrap()
    }

    #[test]
    fn bell_state_discord_is_one() {
        let cf = discord_xstate_closed_form(&phi_plus()).unwrap();
        assert!((cf.discord - 1.0).abs() < 1e-12);
        assert!((cf.mutual_information - 2.0).abs() < 1e-12);
        let num = discord_numeric(&phi_plus()).unwrap();
        assert!((num.discord - 1.0).abs() < 1e-6);
        assert_eq!(num.branch_used, DiscordBranch::Numeric);
    }

    #[test]
    fn maximally_mixed_has_no_discord() {
        let mm = DensityMatrix::maximally_mixed(4);
        assert!(discord_xstate_closed_form(&mm).unwrap().discord.abs() < 1e-14);
        assert!(discord_numeric(&mm).unwrap().discord.abs() < 1e-12);
    }

    #[test]
    fn product_state_numeric_discord_vanishes() {
        let mut ra = ComplexMatrix::from_diagonal(&[0.7, 0.3]);
        ra[(0, 1)] = C64::new(0.2, 0.1);
        ra[(1, 0)] = C64::new(0.2, -0.1);
        let rb = ComplexMatrix::from_diagonal(&[0.4, 0.6]);
        let rho = DensityMatrix::new(tensor(&ra, &rb)).unwrap();
        assert!(discord_numeric(&rho).unwrap().discord.abs() < 1e-8);
        // Not an X-state: the closed form must refuse.
        assert!(matches!(discord_xstate_closed_form(&rho), Err(Error::NotXState(_))));
    }

    #[test]
    fn tie_prefers_first_branch() {
        // Bell state: both branches give conditional entropy 0.
        let cf = discord_xstate_closed_form(&phi_plus()).unwrap();
        assert_eq!(cf.branch_used, DiscordBranch::L1);
    }

    #[test]
    fn z_dominated_state_uses_second_branch() {
        let mut m = ComplexMatrix::from_diagonal(&[0.45, 0.05, 0.05, 0.45]);
        m[(0, 3)] = c(0.05);
        m[(3, 0)] = c(0.05);
        let rho = DensityMatrix::new(m).unwrap();
        let cf = discord_xstate_closed_form(&rho).unwrap();
        assert_eq!(cf.branch_used, DiscordBranch::L2);
        let num = discord_numeric(&rho).unwrap();
        assert!(num.discord <= cf.discord + 1e-9);
        assert!((num.discord - cf.discord).abs() < 1e-6);
    }

    #[test]
    fn discord_is_information_minus_classical() {
        let rho = crate::state::bell_diagonal(crate::state::BellParams::new(0.3, -0.5, 0.2).unwrap()).unwrap();
        for r in [discord_xstate_closed_form(&rho).unwrap(), discord_numeric(&rho).unwrap()] {
            assert!((r.discord - (r.mutual_information - r.classical_correlation)).abs() < 1e-9);
        }
    }

    #[test]
    fn angles_are_canonical() {
        let (t, p) = canonical_angles(-0.3, -0.1);
        assert!((0.0..=PI).contains(&t) && (0.0..2.0 * PI).contains(&p));
        assert!((t - 0.3).abs() < 1e-15);
    }

    #[test]
    fn mixedness_extremes() {
        assert!(mixedness(&phi_plus()).mixedness.abs() < 1e-15);
        let m = mixedness(&DensityMatrix::maximally_mixed(4));
        assert!((m.mixedness - 1.0).abs() < 1e-15);
        assert_eq!(m.dimension, 4);
        assert!((m.purity - 0.25).abs() < 1e-15);
    }
}
