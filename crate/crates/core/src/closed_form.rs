//! Closed-form states and uncertainties for the three noise scenarios.
//!
//! These are the analytic half of the dual-path check. Nothing here touches
//! the density-matrix pipeline, so a disagreement between the two paths points
//! at a formula rather than at shared code.
//!
//! Inputs are not validated. An unphysical point yields `NaN` rather than an
//! error, so sweeps can flag it and move on.

use crate::error::{Error, Result};
use crate::linalg::{c, ComplexMatrix};
use crate::state::BellParams;
use crate::tolerance;

/// Real two-qubit X-state: diagonal plus the two anti-diagonal pairs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XState {
    pub diag: [f64; 4],
    pub r14: f64,
    pub r23: f64,
}

impl XState {
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::from_diagonal(&self.diag);
        m[(0, 3)] = c(self.r14);
        m[(3, 0)] = c(self.r14);
        m[(1, 2)] = c(self.r23);
        m[(2, 1)] = c(self.r23);
        m
    }

    /// The four eigenvalues, outer block first.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let [r11, r22, r33, r44] = self.diag;
        let (s1, d1) = (r11 + r44, ((r11 - r44).powi(2) + 4.0 * self.r14.powi(2)).sqrt());
        let (s2, d2) = (r22 + r33, ((r22 - r33).powi(2) + 4.0 * self.r23.powi(2)).sqrt());
        [(s1 + d1) / 2.0, (s1 - d1) / 2.0, (s2 + d2) / 2.0, (s2 - d2) / 2.0]
    }
}

/// `-x log2 x` with tiny negative rounding treated as zero.
fn neg_xlogx(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.log2()
    } else if x >= tolerance::ENTROPY_CLIP {
        0.0
    } else {
        f64::NAN
    }
}

pub(crate) fn shannon(values: &[f64]) -> f64 {
    values.iter().map(|&x| neg_xlogx(x)).sum()
}

/// Binary entropy that tolerates rounding just outside `[0, 1]`.
pub(crate) fn h2(x: f64) -> f64 {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=1.0 + SLACK).contains(&x) {
        return f64::NAN;
    }
    let x = x.clamp(0.0, 1.0);
    neg_xlogx(x) + neg_xlogx(1.0 - x)
}

/// Bipartite state `rho_{AB_I}` of the DP scenario.
pub fn dp_state(params: BellParams, p: f64, a: f64) -> XState {
    let BellParams { c1, c2, c3 } = params;
    let a2 = a * a;
    let k = -3.0 + 2.0 * p;
    XState {
        diag: [
            (2.0 * p - a2 * (1.0 + c3) * k) / 12.0,
            (6.0 - 2.0 * p + a2 * (1.0 + c3) * k) / 12.0,
            (2.0 * p + a2 * (-1.0 + c3) * k) / 12.0,
            (6.0 - 2.0 * p - a2 * (-1.0 + c3) * k) / 12.0,
        ],
        r14: a * (c1 * (3.0 - 2.0 * p) + c2 * (-3.0 + 4.0 * p)) / 12.0,
        r23: a * (c1 + c2) / 4.0 - a * (c1 + 2.0 * c2) * p / 6.0,
    }
}

/// Bipartite state `rho_{AB_I}` of the PD scenario.
pub fn pd_state(params: BellParams, q: f64, a: f64) -> XState {
    let BellParams { c1, c2, c3 } = params;
    let a2 = a * a;
    let s = (1.0 - q).sqrt();
    XState {
        diag: [
            a2 * (1.0 + c3) / 4.0,
            (2.0 - a2 * (1.0 + c3)) / 4.0,
            a2 * (1.0 - c3) / 4.0,
            (2.0 + a2 * (c3 - 1.0)) / 4.0,
        ],
        r14: a * (c1 - c2) * s / 4.0,
        r23: a * (c1 + c2) * s / 4.0,
    }
}

/// DP-scenario state after the weak measurement and post-selection.
pub fn qwm_dp_state(params: BellParams, p: f64, a: f64, gamma: f64) -> XState {
    let BellParams { c1, c2, c3 } = params;
    let a2 = a * a;
    let k = -3.0 + 2.0 * p;
    let n = 1.0 / (6.0 * (gamma - 2.0));
    let root = (1.0 - gamma).sqrt();
    XState {
        diag: [
            n * (-2.0 * p + a2 * (1.0 + c3) * k),
            -n * (6.0 - 2.0 * p + a2 * (1.0 + c3) * k),
            n * ((gamma - 1.0) * (2.0 * p + a2 * (-1.0 + c3) * k)),
            n * ((1.0 - gamma) * (2.0 * (-3.0 + p) + a2 * (-1.0 + c3) * k)),
        ],
        r14: n * (a * root * (c2 * (3.0 - 4.0 * p) + c1 * (-3.0 + 2.0 * p))),
        r23: n * (a * root * (-3.0 * (c1 + c2) + 2.0 * (c1 + 2.0 * c2) * p)),
    }
}

/// Success probability of the weak measurement on either scenario state.
///
/// Both scenario states have a maximally mixed A marginal, so this is
/// `1 - gamma/2` independent of the other parameters.
pub fn qwm_success_probability(gamma: f64) -> f64 {
    1.0 - gamma / 2.0
}

/// Entropy of the Region-I marginal in the DP scenario.
fn dp_memory_entropy(p: f64, a: f64) -> f64 {
    h2((a * a * (3.0 - 2.0 * p) + 2.0 * p) / 6.0)
}

/// Uncertainty `U` for the DP scenario.
pub fn u_dp(params: BellParams, p: f64, a: f64) -> f64 {
    let c1 = params.c1;
    let a2 = a * a;
    let lambda = ((1.0 + a2 * a2 + a2 * (c1 * c1 - 2.0)) * (3.0 - 2.0 * p).powi(2)).sqrt();
    let diag = dp_state(params, p, a).diag;
    h2((3.0 + lambda) / 6.0) + shannon(&diag) - 2.0 * dp_memory_entropy(p, a) + 1.0
}

/// Eigenvalues `lambda_+-`, `eta_+-` of the DP-scenario state.
pub fn dp_eigenvalues(params: BellParams, p: f64, a: f64) -> [f64; 4] {
    let BellParams { c1, c2, c3 } = params;
    let a2 = a * a;
    let m = 3.0 - 2.0 * p;
    let eps = 3.0 + a2 * c3 * m;
    let jj = 3.0 - a2 * c3 * m;
    let common = m * m + a2 * a2 * m * m;
    let tau = (common
        + a2 * (9.0 * (-2.0 + (c1 - c2).powi(2))
            - 12.0 * (-2.0 + c1 * c1 - 3.0 * c1 * c2 + 2.0 * c2 * c2) * p
            + 4.0 * (-2.0 + (c1 - 2.0 * c2).powi(2)) * p * p))
        .sqrt();
    let ell = (common
        + a2 * (9.0 * (-2.0 + (c1 + c2).powi(2))
            - 12.0 * (-2.0 + (c1 + c2) * (c1 + 2.0 * c2)) * p
            + 4.0 * (-2.0 + (c1 + 2.0 * c2).powi(2)) * p * p))
        .sqrt();
    [
        (eps + tau) / 12.0,
        (eps - tau) / 12.0,
        (jj + ell) / 12.0,
        (jj - ell) / 12.0,
    ]
}

/// Lower bound `U_b` for the DP scenario.
pub fn ub_dp(params: BellParams, p: f64, a: f64) -> f64 {
    1.0 + shannon(&dp_eigenvalues(params, p, a)) - dp_memory_entropy(p, a)
}

/// Uncertainty for the PD scenario.
pub fn u_pd(params: BellParams, q: f64, a: f64) -> f64 {
    let c1 = params.c1;
    let a2 = a * a;
    let kappa = (1.0 + a2 * a2 - a2 * (2.0 + c1 * c1 * (q - 1.0))).sqrt();
    let diag = pd_state(params, q, a).diag;
    h2((1.0 + kappa) / 2.0) + shannon(&diag) - 2.0 * h2(a2 / 2.0) + 1.0
}

/// Eigenvalues `iota_+-`, `zeta_+-` of the PD-scenario state.
pub fn pd_eigenvalues(params: BellParams, q: f64, a: f64) -> [f64; 4] {
    let BellParams { c1, c2, c3 } = params;
    let a2 = a * a;
    let x = 1.0 - a2 * c3;
    let vs = 1.0 + a2 * c3;
    let y = (1.0 + a2 * a2 + a2 * (-2.0 - (c1 + c2).powi(2) * (q - 1.0))).sqrt();
    let u = (1.0 + a2 * a2 + a2 * (-2.0 - (c1 - c2).powi(2) * (q - 1.0))).sqrt();
    [(x + y) / 4.0, (x - y) / 4.0, (vs + u) / 4.0, (vs - u) / 4.0]
}

/// Lower bound for the PD scenario.
pub fn ub_pd(params: BellParams, q: f64, a: f64) -> f64 {
    shannon(&pd_eigenvalues(params, q, a)) - h2(a * a / 2.0) + 1.0
}

/// Uncertainty after the weak measurement, DP scenario.
pub fn u_qwm_dp(params: BellParams, p: f64, a: f64, gamma: f64) -> f64 {
    let BellParams { c1, c3, .. } = params;
    let a2 = a * a;
    let g2 = gamma - 2.0;
    let s = 2.0 + (c3 - 1.0) * gamma;
    let lt = ((g2 * g2 + a2 * a2 * s * s - 2.0 * a2 * (2.0 * c1 * c1 * (gamma - 1.0) - g2 * s))
        * (3.0 - 2.0 * p).powi(2))
    .sqrt()
        / (12.0 * g2);
    let delta = (2.0 * g2 * p + a2 * s * (-3.0 + 2.0 * p)) / (6.0 * g2);
    let diag = qwm_dp_state(params, p, a, gamma).diag;
    h2((1.0 + 4.0 * lt) / 2.0) + shannon(&diag) - 2.0 * h2(delta) + 1.0
}

/// Uncertainty after the weak measurement, PD scenario.
pub fn u_qwm_pd(params: BellParams, q: f64, a: f64, gamma: f64) -> f64 {
    let BellParams { c1, c3, .. } = params;
    let a2 = a * a;
    let g2 = gamma - 2.0;
    let s = 2.0 + (c3 - 1.0) * gamma;
    let kt = (g2 * g2 + a2 * a2 * s * s + 2.0 * a2 * (2.0 * c1 * c1 * (q - 1.0) * (gamma - 1.0) + g2 * s))
        .sqrt()
        / g2;
    let d = 2.0 * (2.0 - gamma);
    let kappas = [
        a2 * (1.0 + c3) / d,
        (2.0 - a2 * (1.0 + c3)) / d,
        a2 * (c3 - 1.0) * (gamma - 1.0) / d,
        (2.0 + a2 * (c3 - 1.0)) * (1.0 - gamma) / d,
    ];
    let memory = a2 * (gamma - 2.0 - c3 * gamma) / (2.0 * g2);
    h2((1.0 + kt) / 2.0) + shannon(&kappas) - 2.0 * h2(memory) + 1.0
}

/// Mixedness of the post-measurement DP state in its printed form.
///
/// This keeps only the diagonal of `Tr rho^2`; the full value is
/// smaller by `8/3 (r14^2 + r23^2)`.
pub fn mixedness_qwm_dp_as_printed(params: BellParams, p: f64, a: f64, gamma: f64) -> f64 {
    let c3 = params.c3;
    let a2 = a * a;
    let g1 = gamma - 1.0;
    let k = 2.0 * p - 3.0;
    let t1 = g1 * g1 * (a2 * (c3 - 1.0) * k + 2.0 * (p - 3.0)).powi(2);
    let t2 = g1 * g1 * (a2 * (c3 - 1.0) * k + 2.0 * p).powi(2);
    let t3 = (a2 * (c3 + 1.0) * k - 2.0 * p).powi(2);
    let t4 = (a2 * (c3 + 1.0) * k - 2.0 * p + 6.0).powi(2);
    4.0 / 3.0 * (1.0 - (t1 + t2 + t3 + t4) / (36.0 * (gamma - 2.0).powi(2)))
}

fn check_strength(x: f64, name: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("{name} must lie in [0, 1], got {x}")));
    }
    Ok(())
}

fn check_a(a: f64) -> Result<()> {
    if !(std::f64::consts::FRAC_1_SQRT_2 - 1e-12..=1.0).contains(&a) {
        return Err(Error::domain(format!(
            "Hawking amplitude a must lie in [1/sqrt(2), 1], got {a}"
        )));
    }
    Ok(())
}

/// Validated analytic uncertainty, DP scenario.
pub fn analytic_u_dp(params: BellParams, p: f64, a: f64) -> Result<f64> {
    params.validate()?;
    check_strength(p, "p")?;
    check_a(a)?;
    Ok(u_dp(params, p, a))
}

pub fn analytic_ub_dp(params: BellParams, p: f64, a: f64) -> Result<f64> {
    params.validate()?;
    check_strength(p, "p")?;
    check_a(a)?;
    Ok(ub_dp(params, p, a))
}

pub fn analytic_u_pd(params: BellParams, q: f64, a: f64) -> Result<f64> {
    params.validate()?;
    check_strength(q, "q")?;
    check_a(a)?;
    Ok(u_pd(params, q, a))
}

pub fn analytic_ub_pd(params: BellParams, q: f64, a: f64) -> Result<f64> {
    params.validate()?;
    check_strength(q, "q")?;
    check_a(a)?;
    Ok(ub_pd(params, q, a))
}

fn check_gamma(gamma: f64) -> Result<()> {
    check_strength(gamma, "gamma")?;
    let ps = qwm_success_probability(gamma);
    if !(ps > tolerance::POST_SELECTION) {
        return Err(Error::DegeneratePostSelection(ps));
    }
    Ok(())
}

pub fn analytic_u_qwm_dp(params: BellParams, p: f64, a: f64, gamma: f64) -> Result<f64> {
    params.validate()?;
    check_strength(p, "p")?;
    check_a(a)?;
    check_gamma(gamma)?;
    Ok(u_qwm_dp(params, p, a, gamma))
}

pub fn analytic_u_qwm_pd(params: BellParams, q: f64, a: f64, gamma: f64) -> Result<f64> {
    params.validate()?;
    check_strength(q, "q")?;
    check_a(a)?;
    check_gamma(gamma)?;
    Ok(u_qwm_pd(params, q, a, gamma))
}
