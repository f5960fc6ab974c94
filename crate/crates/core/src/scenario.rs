//! One parameter point, end to end.
//!
//! The constructive pipeline is: Bell-diagonal state, Hawking embedding of B,
//! noise, trace over Region II, optional weak measurement on A, then the
//! metrics. Closed forms are evaluated alongside and compared.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::channels::{
    apply_on_subsystem, apply_unnormalized, depolarizing_channel, phase_damping_channel,
    weak_measurement, xz_flip_channel,
};
use crate::closed_form;
use crate::correlations::{discord_numeric, discord_xstate_closed_form, mixedness};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};
use crate::state::{bell_diagonal_matrix, embed_hawking_matrix, BellParams, HawkingMode};
use crate::tolerance;
use crate::uncertainty::{conditional_entropy, eur_bound_numeric, eur_lhs_numeric, ObservablePair, UncertaintyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseKind {
    Dp,
    Pd,
}

/// Where the depolarizing-type noise of the DP scenario acts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DpModel {
    /// `{sqrt(1-2p/3) 1, sqrt(p/3) X, sqrt(p/3) Z}` on the Region-I mode.
    /// This is the model the DP closed forms describe.
    #[default]
    XzFlipMemory,
    /// The four-operator depolarizing set on qubit A.
    KrausOnA,
}

impl DpModel {
    pub fn as_str(&self) -> &'static str {
        match self {
            DpModel::XzFlipMemory => "xz_flip_memory",
            DpModel::KrausOnA => "kraus_on_a",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointStatus {
    Ok,
    AnalyticMismatch,
    DegeneratePostselection,
    UnphysicalState,
}

impl PointStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointStatus::Ok => "ok",
            PointStatus::AnalyticMismatch => "analytic_mismatch",
            PointStatus::DegeneratePostselection => "degenerate_postselection",
            PointStatus::UnphysicalState => "unphysical_state",
        }
    }
}

impl fmt::Display for PointStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointParams {
    pub bell: BellParams,
    pub noise: NoiseKind,
    /// `p` for DP, `q` for PD.
    pub strength: f64,
    pub mode: HawkingMode,
    pub gamma: Option<f64>,
    pub dp_model: DpModel,
    /// Evaluate Bell parameters that are not a valid initial state.
    pub allow_unphysical_initial: bool,
}

impl PointParams {
    pub fn new(bell: BellParams, noise: NoiseKind, strength: f64, mode: HawkingMode) -> Self {
        Self {
            bell,
            noise,
            strength,
            mode,
            gamma: None,
            dp_model: DpModel::default(),
            allow_unphysical_initial: false,
        }
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn with_dp_model(mut self, model: DpModel) -> Self {
        self.dp_model = model;
        self
    }

    pub fn allowing_unphysical(mut self) -> Self {
        self.allow_unphysical_initial = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if !self.allow_unphysical_initial {
            self.bell.validate()?;
        } else {
            // Range is still enforced; only positivity is waived.
            for v in [self.bell.c1, self.bell.c2, self.bell.c3] {
                if !(v.abs() <= 1.0) {
                    return Err(Error::domain(format!("correlation {v} outside [-1, 1]")));
                }
            }
        }
        if !(0.0..=1.0).contains(&self.strength) {
            return Err(Error::domain(format!(
                "noise strength must lie in [0, 1], got {}",
                self.strength
            )));
        }
        if let Some(g) = self.gamma {
            if !(0.0..=1.0).contains(&g) {
                return Err(Error::domain(format!("gamma must lie in [0, 1], got {g}")));
            }
        }
        Ok(())
    }
}

/// Closed-form values that exist for this point, if any.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticValues {
    pub u: Option<f64>,
    pub ub: Option<f64>,
}

pub fn analytic_values(params: &PointParams) -> AnalyticValues {
    let (b, s, a) = (params.bell, params.strength, params.mode.a());
    match (params.noise, params.gamma) {
        (NoiseKind::Dp, None) => AnalyticValues {
            u: Some(closed_form::u_dp(b, s, a)),
            ub: Some(closed_form::ub_dp(b, s, a)),
        },
        (NoiseKind::Pd, None) => AnalyticValues {
            u: Some(closed_form::u_pd(b, s, a)),
            ub: Some(closed_form::ub_pd(b, s, a)),
        },
        (NoiseKind::Dp, Some(g)) => AnalyticValues {
            u: Some(closed_form::u_qwm_dp(b, s, a, g)),
            ub: None,
        },
        (NoiseKind::Pd, Some(g)) => AnalyticValues {
            u: Some(closed_form::u_qwm_pd(b, s, a, g)),
            ub: None,
        },
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointOutcome {
    pub status: PointStatus,
    /// Final two-qubit state, when it is a valid density matrix.
    pub state: Option<DensityMatrix>,
    pub report: Option<UncertaintyReport>,
    /// Largest analytic-vs-numeric difference.
    pub mismatch: Option<f64>,
}

impl PointOutcome {
    fn without_state(status: PointStatus) -> Self {
        Self {
            status,
            state: None,
            report: None,
            mismatch: None,
        }
    }
}

/// Builds `rho_{AB_I}` before any weak measurement.
///
/// Intermediate states are validated whenever the initial state is physical,
/// so a failure there is a broken invariant and surfaces as an error.
pub fn noisy_state(params: &PointParams) -> Result<ComplexMatrix> {
    let physical = params.bell.is_physical();
    let check = |m: &ComplexMatrix| if physical { DensityMatrix::check(m) } else { Ok(()) };

    let rho_ab = bell_diagonal_matrix(params.bell);
    check(&rho_ab)?;
    let embedded = embed_hawking_matrix(&rho_ab, &params.mode)?;
    check(&embedded)?;
    let channel = match (params.noise, params.dp_model) {
        (NoiseKind::Dp, DpModel::XzFlipMemory) => (xz_flip_channel(params.strength)?, 1),
        (NoiseKind::Dp, DpModel::KrausOnA) => (depolarizing_channel(params.strength)?, 0),
        (NoiseKind::Pd, _) => (phase_damping_channel(params.strength)?, 0),
    };
    let (noisy, _) = apply_unnormalized(&embedded, &[2, 2, 2], channel.1, &channel.0)?;
    check(&noisy)?;
    noisy.partial_trace(&[2, 2, 2], &[0, 1])
}

pub fn evaluate_point(params: &PointParams) -> Result<PointOutcome> {
    params.validate()?;
    let traced = noisy_state(params)?;
    let rho = match DensityMatrix::new(traced) {
        Ok(r) => r,
        Err(e) if params.bell.is_physical() => return Err(e),
        Err(_) => return Ok(PointOutcome::without_state(PointStatus::UnphysicalState)),
    };

    let (rho, p_succ) = match params.gamma {
        None => (rho, 1.0),
        Some(g) => match apply_on_subsystem(&rho, &[2, 2], 0, &weak_measurement(g)?) {
            Ok(v) => v,
            Err(Error::DegeneratePostSelection(_)) => {
                return Ok(PointOutcome::without_state(PointStatus::DegeneratePostselection))
            }
            Err(e) => return Err(e),
        },
    };

    let pair = ObservablePair::pauli_xz();
    let discord = match discord_xstate_closed_form(&rho) {
        Ok(d) => d.discord,
        Err(Error::NotXState(_)) => discord_numeric(&rho)?.discord,
        Err(e) => return Err(e),
    };
    let analytic = analytic_values(params);
    let report = UncertaintyReport {
        lhs_numeric: eur_lhs_numeric(&rho, &pair)?,
        lhs_analytic: analytic.u,
        bound_numeric: eur_bound_numeric(&rho, &pair)?,
        bound_analytic: analytic.ub,
        conditional_entropy: conditional_entropy(&rho)?,
        discord,
        mixedness: mixedness(&rho).mixedness,
        success_probability: p_succ,
    };
    let mismatch = report.dual_path_gap();
    let status = match mismatch {
        Some(gap) if !(gap <= tolerance::DUAL_PATH) => PointStatus::AnalyticMismatch,
        _ => PointStatus::Ok,
    };
    Ok(PointOutcome {
        status,
        state: Some(rho),
        report: Some(report),
        mismatch,
    })
}
