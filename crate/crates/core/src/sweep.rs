//! Parameter sweeps, figure presets, CSV output and run manifests.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::channels::NoiseParams;
use crate::scenario::{evaluate_point, DpModel, NoiseKind, PointOutcome, PointParams, PointStatus};
use crate::state::{BellParams, HawkingMode};

/// Why a sweep did not produce output.
#[derive(Debug, Error)]
pub enum SweepError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical contract violated at {point}: {source}")]
    Numerical {
        point: String,
        #[source]
        source: crate::Error,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn config(msg: impl Into<String>) -> SweepError {
    SweepError::Config(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScenarioKind {
    #[serde(rename = "dp_vs_T")]
    DpVsT,
    #[serde(rename = "dp_vs_p")]
    DpVsP,
    #[serde(rename = "dp_heatmap_pT")]
    DpHeatmapPT,
    #[serde(rename = "pd_vs_T")]
    PdVsT,
    #[serde(rename = "pd_vs_gammat")]
    PdVsGammat,
    #[serde(rename = "pd_heatmap")]
    PdHeatmap,
    #[serde(rename = "qwm_dp")]
    QwmDp,
    #[serde(rename = "qwm_pd")]
    QwmPd,
    #[serde(rename = "mixedness_sync")]
    MixednessSync,
}

impl ScenarioKind {
    pub fn noise(self) -> NoiseKind {
        use ScenarioKind::*;
        match self {
            DpVsT | DpVsP | DpHeatmapPT | QwmDp | MixednessSync => NoiseKind::Dp,
            PdVsT | PdVsGammat | PdHeatmap | QwmPd => NoiseKind::Pd,
        }
    }

    pub fn uses_weak_measurement(self) -> bool {
        matches!(self, ScenarioKind::QwmDp | ScenarioKind::QwmPd)
    }

    fn is_heatmap(self) -> bool {
        matches!(self, ScenarioKind::DpHeatmapPT | ScenarioKind::PdHeatmap)
    }

    /// Parameters the x axis may take, if restricted.
    fn x_axis_choices(self) -> Option<&'static [Param]> {
        use Param::*;
        match self {
            ScenarioKind::DpVsT | ScenarioKind::PdVsT => Some(&[TOverOmega]),
            ScenarioKind::DpVsP => Some(&[P, DeltaT]),
            ScenarioKind::PdVsGammat => Some(&[GammaT, Q]),
            _ => None,
        }
    }

    fn allows(self, param: Param) -> bool {
        use Param::*;
        match param {
            TOverOmega | Omega => true,
            P | DeltaT => self.noise() == NoiseKind::Dp,
            Q | GammaT => self.noise() == NoiseKind::Pd,
            Gamma => self.uses_weak_measurement(),
        }
    }
}

/// Every scalar a sweep can hold fixed or vary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Param {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "delta_t")]
    DeltaT,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "gamma_t")]
    GammaT,
    #[serde(rename = "T_over_omega")]
    TOverOmega,
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "omega")]
    Omega,
}

impl Param {
    pub fn as_str(self) -> &'static str {
        match self {
            Param::P => "p",
            Param::DeltaT => "delta_t",
            Param::Q => "q",
            Param::GammaT => "gamma_t",
            Param::TOverOmega => "T_over_omega",
            Param::Gamma => "gamma",
            Param::Omega => "omega",
        }
    }

    fn check(self, v: f64) -> Result<(), SweepError> {
        let ok = match self {
            Param::P | Param::Q | Param::Gamma => (0.0..=1.0).contains(&v),
            Param::DeltaT | Param::GammaT | Param::TOverOmega => v >= 0.0 && v.is_finite(),
            Param::Omega => v > 0.0 && v.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(config(format!("{} = {v} is outside its domain", self.as_str())))
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A swept parameter: either an even grid or explicit values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub name: Param,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<f64>>,
}

impl AxisSpec {
    pub fn range(name: Param, min: f64, max: f64, points: usize) -> Self {
        Self {
            name,
            min: Some(min),
            max: Some(max),
            points: Some(points),
            values: None,
        }
    }

    pub fn list(name: Param, values: &[f64]) -> Self {
        Self {
            name,
            min: None,
            max: None,
            points: None,
            values: Some(values.to_vec()),
        }
    }

    /// Grid values in order. Even grids hit both endpoints exactly.
    pub fn grid(&self) -> Result<Vec<f64>, SweepError> {
        let name = self.name;
        let values = match (&self.values, self.min, self.max, self.points) {
            (Some(v), None, None, None) => {
                if v.is_empty() {
                    return Err(config(format!("axis {name}: values must not be empty")));
                }
                v.clone()
            }
            (None, Some(lo), Some(hi), Some(n)) => {
                if n < 2 {
                    return Err(config(format!("axis {name}: points must be at least 2, got {n}")));
                }
                if !(lo <= hi) {
                    return Err(config(format!("axis {name}: min {lo} exceeds max {hi}")));
                }
                let step = (hi - lo) / (n - 1) as f64;
                (0..n)
                    .map(|i| if i == n - 1 { hi } else { lo + i as f64 * step })
                    .collect()
            }
            _ => {
                return Err(config(format!(
                    "axis {name}: give either min, max and points, or values"
                )))
            }
        };
        for &v in &values {
            name.check(v)?;
        }
        Ok(values)
    }
}

/// Columns a sweep can emit besides the axes and `status`.
pub const QUANTITY_COLUMNS: [&str; 7] = [
    "U_analytic",
    "U_numeric",
    "Ub_analytic",
    "Ub_numeric",
    "QD",
    "mixedness",
    "Psucc",
];

/// A complete sweep description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure_id: Option<String>,
    pub scenario: ScenarioKind,
    pub bell: BellParams,
    #[serde(default)]
    pub fixed: BTreeMap<Param, f64>,
    pub sweep_axis: AxisSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_axis: Option<AxisSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Vec<String>>,
    #[serde(default)]
    pub dp_model: DpModel,
    #[serde(default)]
    pub allow_unphysical_initial: bool,
}

impl FromStr for SweepSpec {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        let spec: SweepSpec = toml::from_str(s).map_err(|e| config(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }
}

/// A validated sweep ready to evaluate.
#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub x_name: Param,
    pub x: Vec<f64>,
    pub y_name: Option<Param>,
    pub y: Vec<f64>,
    pub columns: Vec<&'static str>,
}

impl SweepSpec {
    pub fn from_file(path: &Path) -> Result<Self, SweepError> {
        let text = fs::read_to_string(path).map_err(|source| SweepError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        text.parse()
    }

    pub fn figure_id(&self) -> String {
        self.figure_id.clone().unwrap_or_else(|| "sweep".to_string())
    }

    pub fn validate(&self) -> Result<SweepPlan, SweepError> {
        if !self.allow_unphysical_initial {
            self.bell.validate().map_err(|e| config(e.to_string()))?;
        }
        let b = self.bell;
        for v in [b.c1, b.c2, b.c3] {
            if !(v.abs() <= 1.0) {
                return Err(config(format!("correlation {v} outside [-1, 1]")));
            }
        }
        if let Some(id) = &self.figure_id {
            let ok = !id.is_empty()
                && id.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_' || ch == '-');
            if !ok {
                return Err(config(format!(
                    "figure_id {id:?} must be non-empty ASCII letters, digits, '_' or '-'"
                )));
            }
        }

        let kind = self.scenario;
        let x_name = self.sweep_axis.name;
        let x = self.sweep_axis.grid()?;
        if x.len() < 2 {
            return Err(config("sweep_axis needs at least 2 points"));
        }
        if let Some(choices) = kind.x_axis_choices() {
            if !choices.contains(&x_name) {
                return Err(config(format!(
                    "scenario {:?} sweeps one of {:?}, not {x_name}",
                    kind,
                    choices.iter().map(|p| p.as_str()).collect::<Vec<_>>()
                )));
            }
        }
        let (y_name, y) = match &self.series_axis {
            Some(axis) => (Some(axis.name), axis.grid()?),
            None => (None, vec![f64::NAN]),
        };
        if kind.is_heatmap() && y_name.is_none() {
            return Err(config(format!("scenario {kind:?} needs a series_axis")));
        }

        let mut seen: BTreeMap<Param, &str> = BTreeMap::new();
        let mut claim = |p: Param, role: &'static str| -> Result<(), SweepError> {
            if !kind.allows(p) {
                return Err(config(format!("parameter {p} does not apply to scenario {kind:?}")));
            }
            if p == Param::Omega && role != "fixed" {
                return Err(config("omega only scales T; sweep T_over_omega instead"));
            }
            if let Some(prev) = seen.insert(p, role) {
                return Err(config(format!("parameter {p} is both {prev} and {role}")));
            }
            Ok(())
        };
        for (&p, &v) in &self.fixed {
            claim(p, "fixed")?;
            p.check(v)?;
        }
        claim(x_name, "sweep_axis")?;
        if let Some(yn) = y_name {
            claim(yn, "series_axis")?;
        }

        let strength = match kind.noise() {
            NoiseKind::Dp => [Param::P, Param::DeltaT],
            NoiseKind::Pd => [Param::Q, Param::GammaT],
        };
        match strength.iter().filter(|p| seen.contains_key(p)).count() {
            1 => {}
            0 => return Err(config(format!("set one of {} or {}", strength[0], strength[1]))),
            _ => return Err(config(format!("set only one of {} and {}", strength[0], strength[1]))),
        }
        if !seen.contains_key(&Param::TOverOmega) {
            return Err(config("T_over_omega must be fixed or swept"));
        }
        if kind.uses_weak_measurement() && !seen.contains_key(&Param::Gamma) {
            return Err(config("gamma must be fixed or swept for weak-measurement scenarios"));
        }

        let columns = match &self.outputs {
            None => QUANTITY_COLUMNS.to_vec(),
            Some(req) => {
                if let Some(bad) = req.iter().find(|c| !QUANTITY_COLUMNS.contains(&c.as_str())) {
                    return Err(config(format!(
                        "unknown output column {bad:?}; choose from {QUANTITY_COLUMNS:?}"
                    )));
                }
                QUANTITY_COLUMNS
                    .iter()
                    .copied()
                    .filter(|c| req.iter().any(|r| r == c))
                    .collect()
            }
        };
        Ok(SweepPlan {
            x_name,
            x,
            y_name,
            y,
            columns,
        })
    }

    /// Point parameters at one grid node.
    pub fn point(&self, plan: &SweepPlan, x: f64, y: f64) -> Result<PointParams, SweepError> {
        let mut vals = self.fixed.clone();
        vals.insert(plan.x_name, x);
        if let Some(yn) = plan.y_name {
            vals.insert(yn, y);
        }
        let get = |p: Param| vals.get(&p).copied();
        let strength = match self.scenario.noise() {
            NoiseKind::Dp => get(Param::P).map(Ok).or_else(|| get(Param::DeltaT).map(from_decay)),
            NoiseKind::Pd => get(Param::Q).map(Ok).or_else(|| get(Param::GammaT).map(from_decay)),
        }
        .ok_or_else(|| config("missing noise strength"))??;
        let omega = get(Param::Omega).unwrap_or(1.0);
        let t = get(Param::TOverOmega).ok_or_else(|| config("missing T_over_omega"))?;
        let mode = HawkingMode::new(omega, t * omega).map_err(|e| config(e.to_string()))?;
        let mut params = PointParams::new(self.bell, self.scenario.noise(), strength, mode)
            .with_dp_model(self.dp_model);
        if self.scenario.uses_weak_measurement() {
            params = params.with_gamma(get(Param::Gamma).ok_or_else(|| config("missing gamma"))?);
        }
        if self.allow_unphysical_initial {
            params = params.allowing_unphysical();
        }
        Ok(params)
    }
}

fn from_decay(x: f64) -> Result<f64, SweepError> {
    NoiseParams::from_decay(x)
        .map(|n| n.strength)
        .map_err(|e| config(e.to_string()))
}

/// One evaluated grid node.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub y: Option<f64>,
    pub outcome: PointOutcome,
}

impl SweepRow {
    /// Value of a quantity column; `None` when it does not exist at this point.
    pub fn value(&self, column: &str) -> Option<f64> {
        let r = self.outcome.report.as_ref()?;
        match column {
            "U_analytic" => r.lhs_analytic,
            "U_numeric" => Some(r.lhs_numeric),
            "Ub_analytic" => r.bound_analytic,
            "Ub_numeric" => Some(r.bound_numeric),
            "QD" => Some(r.discord),
            "mixedness" => Some(r.mixedness),
            "Psucc" => Some(r.success_probability),
            _ => None,
        }
    }

    pub fn status(&self) -> PointStatus {
        self.outcome.status
    }
}

/// Evaluates every grid node, in grid order, on `jobs` worker threads.
///
/// Series values form the outer loop and sweep values the inner one.
pub fn evaluate_sweep(spec: &SweepSpec, jobs: usize) -> Result<(SweepPlan, Vec<SweepRow>), SweepError> {
    let plan = spec.validate()?;
    let nodes: Vec<(f64, f64)> = plan
        .y
        .iter()
        .flat_map(|&y| plan.x.iter().map(move |&x| (x, y)))
        .collect();
    let eval = |&(x, y): &(f64, f64)| -> Result<SweepRow, SweepError> {
        let params = spec.point(&plan, x, y)?;
        let outcome = evaluate_point(&params).map_err(|source| SweepError::Numerical {
            point: match plan.y_name {
                Some(yn) => format!("{}={x}, {yn}={y}", plan.x_name),
                None => format!("{}={x}", plan.x_name),
            },
            source,
        })?;
        Ok(SweepRow {
            x,
            y: plan.y_name.map(|_| y),
            outcome,
        })
    };
    let rows = if jobs <= 1 {
        nodes.iter().map(eval).collect::<Result<Vec<_>, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| config(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| nodes.par_iter().map(eval).collect::<Result<Vec<_>, _>>())?
    };
    Ok((plan, rows))
}

/// Twelve significant digits, no negative zero, empty for missing values.
pub fn format_value(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => {
            let x = if x == 0.0 { 0.0 } else { x };
            format!("{x:.11e}")
        }
        _ => String::new(),
    }
}

pub fn csv_header(plan: &SweepPlan) -> Vec<&'static str> {
    let mut h = vec!["x"];
    if plan.y_name.is_some() {
        h.push("y");
    }
    h.extend(plan.columns.iter().copied());
    h.push("status");
    h
}

pub fn write_csv<W: std::io::Write>(out: W, plan: &SweepPlan, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(csv_header(plan))?;
    for row in rows {
        let mut rec = vec![format_value(Some(row.x))];
        if plan.y_name.is_some() {
            rec.push(format_value(row.y));
        }
        for col in &plan.columns {
            rec.push(format_value(row.value(col)));
        }
        rec.push(row.status().as_str().to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColumnSchema {
    pub name: String,
    /// `float` or `string`.
    #[serde(rename = "type")]
    pub kind: String,
    /// What the column holds, e.g. the parameter behind an axis.
    pub meaning: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisRecord {
    pub parameter: Param,
    pub values: usize,
    pub min: f64,
    pub max: f64,
}

/// Machine-readable record of one sweep run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureManifest {
    pub figure_id: String,
    pub scenario: ScenarioKind,
    /// The full spec, so a run can be repeated from its manifest.
    pub parameters: SweepSpec,
    pub x_axis: AxisRecord,
    pub y_axis: Option<AxisRecord>,
    /// CSV file name, relative to the manifest's directory.
    pub csv_path: String,
    pub columns: Vec<ColumnSchema>,
    pub rows: usize,
    pub status_counts: BTreeMap<String, usize>,
    pub code_version: String,
    pub duration_seconds: f64,
}

impl FigureManifest {
    pub fn manifest_file_name(figure_id: &str) -> String {
        format!("{figure_id}.manifest.json")
    }
}

fn describe(col: &str) -> &'static str {
    match col {
        "U_analytic" => "uncertainty, closed form (bits)",
        "U_numeric" => "uncertainty, density-matrix pipeline (bits)",
        "Ub_analytic" => "lower bound, closed form (bits)",
        "Ub_numeric" => "lower bound, density-matrix pipeline (bits)",
        "QD" => "quantum discord of rho_AB_I (bits)",
        "mixedness" => "mixedness d/(d-1)(1 - Tr rho^2)",
        "Psucc" => "weak-measurement success probability",
        _ => "",
    }
}

fn axis_record(param: Param, grid: &[f64]) -> AxisRecord {
    AxisRecord {
        parameter: param,
        values: grid.len(),
        min: grid.iter().copied().fold(f64::INFINITY, f64::min),
        max: grid.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    }
}

/// Runs a sweep and writes `<figure_id>.csv` and its manifest into `out_dir`.
pub fn run_sweep(spec: &SweepSpec, out_dir: &Path, jobs: usize) -> Result<FigureManifest, SweepError> {
    let started = Instant::now();
    let (plan, rows) = evaluate_sweep(spec, jobs)?;
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| SweepError::Io { path, source }
    };
    fs::create_dir_all(out_dir).map_err(io(out_dir))?;
    let id = spec.figure_id();
    let csv_name = format!("{id}.csv");
    let csv_path = out_dir.join(&csv_name);
    let mut buf = Vec::new();
    write_csv(&mut buf, &plan, &rows).map_err(|e| SweepError::Io {
        path: csv_path.clone(),
        source: std::io::Error::other(e),
    })?;
    fs::write(&csv_path, &buf).map_err(io(&csv_path))?;

    let mut columns = vec![ColumnSchema {
        name: "x".into(),
        kind: "float".into(),
        meaning: plan.x_name.as_str().into(),
    }];
    if let Some(yn) = plan.y_name {
        columns.push(ColumnSchema {
            name: "y".into(),
            kind: "float".into(),
            meaning: yn.as_str().into(),
        });
    }
    for c in &plan.columns {
        columns.push(ColumnSchema {
            name: (*c).into(),
            kind: "float".into(),
            meaning: describe(c).into(),
        });
    }
    columns.push(ColumnSchema {
        name: "status".into(),
        kind: "string".into(),
        meaning: "ok | analytic_mismatch | degenerate_postselection | unphysical_state".into(),
    });
    let mut status_counts = BTreeMap::new();
    for r in &rows {
        *status_counts.entry(r.status().as_str().to_string()).or_insert(0) += 1;
    }

    let manifest = FigureManifest {
        figure_id: id.clone(),
        scenario: spec.scenario,
        parameters: spec.clone(),
        x_axis: axis_record(plan.x_name, &plan.x),
        y_axis: plan.y_name.map(|yn| axis_record(yn, &plan.y)),
        csv_path: csv_name,
        columns,
        rows: rows.len(),
        status_counts,
        code_version: env!("CARGO_PKG_VERSION").to_string(),
        duration_seconds: started.elapsed().as_secs_f64(),
    };
    let man_path = out_dir.join(FigureManifest::manifest_file_name(&id));
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
    fs::write(&man_path, json + "\n").map_err(io(&man_path))?;
    Ok(manifest)
}

const DEFAULT_POINTS: usize = 121;
const HEATMAP_POINTS: usize = 41;
const GAMMA_SERIES: [f64; 4] = [0.2, 0.4, 0.6, 0.8];

/// Names of the built-in figure presets, in display order.
pub const PRESETS: [&str; 19] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig44a", "fig44b",
    "fig5a", "fig5b", "fig7", "fig8a", "fig8b", "fig88a", "fig88b", "fig9a", "fig9b",
];

/// Built-in spec for a figure.
pub fn preset(name: &str) -> Option<SweepSpec> {
    use Param::*;
    use ScenarioKind::*;
    let bell = BellParams::unchecked;
    let phi = bell(1.0, -1.0, 1.0);
    let spec = |scenario, b, fixed: &[(Param, f64)], x: AxisSpec, y: Option<AxisSpec>| SweepSpec {
        figure_id: Some(name.to_string()),
        scenario,
        bell: b,
        fixed: fixed.iter().copied().collect(),
        sweep_axis: x,
        series_axis: y,
        outputs: None,
        dp_model: DpModel::default(),
        allow_unphysical_initial: false,
    };
    let t_axis = AxisSpec::range(TOverOmega, 0.0, 3.0, DEFAULT_POINTS);
    let p_axis = AxisSpec::range(P, 0.0, 1.0, DEFAULT_POINTS);
    // Long enough to reach T = 200 omega on a 0.5 omega grid.
    let t_long = AxisSpec::range(TOverOmega, 0.0, 200.0, 401);
    let gt_axis = AxisSpec::range(GammaT, 0.0, 5.0, DEFAULT_POINTS);
    let gammas = AxisSpec::list(Gamma, &GAMMA_SERIES);
    let hp = AxisSpec::range(P, 0.0, 1.0, HEATMAP_POINTS);
    let ht = AxisSpec::range(TOverOmega, 0.0, 3.0, HEATMAP_POINTS);
    let hgt = AxisSpec::range(GammaT, 0.0, 5.0, HEATMAP_POINTS);
    let hg = AxisSpec::range(Gamma, 0.0, 1.0, HEATMAP_POINTS);
    let fig8_state = bell(0.9, -0.8, 0.6);
    let fig9_state = bell(0.7, 0.6, -0.8);

    let mut s = match name {
        "fig1a" => spec(DpVsT, phi, &[(P, 0.0)], t_axis, None),
        "fig1b" => spec(DpVsT, bell(0.9, 0.8, -0.9), &[(P, 0.2)], t_axis, None),
        "fig2a" => spec(DpVsP, phi, &[(TOverOmega, 1.0)], p_axis, None),
        "fig2b" => spec(DpVsP, bell(0.5, 0.5, 0.5), &[(TOverOmega, 1.0)], p_axis, None),
        "fig3a" => spec(DpHeatmapPT, phi, &[], hp, Some(ht)),
        "fig3b" => spec(DpHeatmapPT, bell(0.7, 0.8, 0.9), &[], hp, Some(ht)),
        "fig4a" => spec(PdVsT, phi, &[(Q, 0.1)], t_long, None),
        "fig4b" => spec(PdVsT, bell(0.9, -0.63, 0.7), &[(Q, 0.1)], t_long, None),
        "fig44a" => spec(
            MixednessSync,
            phi,
            &[],
            AxisSpec::range(P, 0.0, 1.0, 101),
            Some(AxisSpec::list(TOverOmega, &[0.0, 1.0, 2.0])),
        ),
        "fig44b" => spec(
            MixednessSync,
            phi,
            &[],
            AxisSpec::range(TOverOmega, 0.0, 3.0, 301),
            Some(AxisSpec::list(P, &[0.0, 0.2, 0.4])),
        ),
        "fig5a" => spec(PdVsGammat, phi, &[(TOverOmega, 2.0)], gt_axis, None),
        "fig5b" => spec(PdVsGammat, bell(0.8, 0.9, -0.7), &[(TOverOmega, 2.0)], gt_axis, None),
        "fig7" => spec(PdHeatmap, phi, &[], hgt, Some(ht)),
        "fig8a" | "fig88a" | "fig88b" => {
            spec(QwmDp, fig8_state, &[(TOverOmega, 1.0)], p_axis, Some(gammas))
        }
        "fig8b" => spec(QwmDp, fig8_state, &[(P, 0.5)], hg, Some(ht)),
        "fig9a" => spec(QwmPd, fig9_state, &[(Q, 0.6)], t_axis, Some(gammas)),
        "fig9b" => spec(QwmPd, fig9_state, &[(TOverOmega, 1.0)], hgt, Some(hg)),
        _ => return None,
    };
    s.allow_unphysical_initial = !s.bell.is_physical();
    Some(s)
}
