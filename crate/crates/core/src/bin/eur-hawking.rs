use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eur_hawking::correlations::discord_numeric;
use eur_hawking::scenario::{evaluate_point, DpModel, NoiseKind, PointParams};
use eur_hawking::state::{BellParams, HawkingMode};
use eur_hawking::sweep::{preset, run_sweep, SweepError, SweepSpec, PRESETS};
use eur_hawking::Error;

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "eur-hawking", version, about = "Entropic uncertainty near a Schwarzschild horizon")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Noise {
    Dp,
    Pd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    XzFlipMemory,
    KrausOnA,
}

#[derive(Subcommand)]
enum Command {
    /// Run a figure preset or a TOML sweep file.
    Run {
        #[arg(long, conflicts_with = "config", required_unless_present = "config")]
        preset: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (1 runs serially).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Evaluate a single parameter point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        c1: f64,
        #[arg(long, allow_hyphen_values = true)]
        c2: f64,
        #[arg(long, allow_hyphen_values = true)]
        c3: f64,
        #[arg(long, value_enum)]
        noise: Noise,
        /// p for DP, q for PD.
        #[arg(long)]
        strength: f64,
        /// Hawking temperature, in the same units as omega.
        #[arg(long)]
        temperature: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// Weak-measurement strength.
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, value_enum, default_value = "xz-flip-memory")]
        dp_model: Model,
        /// Also print the report as a one-row CSV.
        #[arg(long)]
        csv: bool,
    },
    /// List the built-in figure presets.
    ListPresets,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListPresets => {
            let mut out = std::io::stdout().lock();
            for name in PRESETS {
                let s = preset(name).expect("listed preset exists");
                let kind = serde_json::to_string(&s.scenario).expect("scenario serialises");
                // A closed pipe (e.g. `| head`) is not an error worth reporting.
                if writeln!(out, "{name}\t{}", kind.trim_matches('"')).is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            preset: name,
            config,
            out,
            jobs,
            format: Format::Csv,
        } => {
            let spec = match (name, config) {
                (Some(n), _) => match preset(&n) {
                    Some(s) => Ok(s),
                    None => Err(SweepError::Config(format!(
                        "unknown preset {n:?}; see `eur-hawking list-presets`"
                    ))),
                },
                (None, Some(path)) => SweepSpec::from_file(&path),
                (None, None) => unreachable!("clap enforces one source"),
            };
            match spec.and_then(|s| run_sweep(&s, &out, jobs.max(1))) {
                Ok(m) => {
                    println!(
                        "{}: {} rows -> {}",
                        m.figure_id,
                        m.rows,
                        out.join(&m.csv_path).display()
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(match e {
                        SweepError::Numerical { .. } => EXIT_NUMERICAL,
                        _ => EXIT_CONFIG,
                    })
                }
            }
        }
        Command::Eval {
            c1,
            c2,
            c3,
            noise,
            strength,
            temperature,
            omega,
            gamma,
            dp_model,
            csv,
        } => eval(
            BellParams::unchecked(c1, c2, c3),
            match noise {
                Noise::Dp => NoiseKind::Dp,
                Noise::Pd => NoiseKind::Pd,
            },
            strength,
            temperature,
            omega,
            gamma,
            match dp_model {
                Model::XzFlipMemory => DpModel::XzFlipMemory,
                Model::KrausOnA => DpModel::KrausOnA,
            },
            csv,
        ),
    }
}

fn is_config_error(e: &Error) -> bool {
    matches!(e, Error::Domain(_))
}

#[allow(clippy::too_many_arguments)]
fn eval(
    bell: BellParams,
    noise: NoiseKind,
    strength: f64,
    temperature: f64,
    omega: f64,
    gamma: Option<f64>,
    dp_model: DpModel,
    csv: bool,
) -> ExitCode {
    let fail = |e: Error| {
        eprintln!("error: {e}");
        ExitCode::from(if is_config_error(&e) { EXIT_CONFIG } else { EXIT_NUMERICAL })
    };
    let mode = match HawkingMode::new(omega, temperature) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let mut params = PointParams::new(bell, noise, strength, mode).with_dp_model(dp_model);
    if let Some(g) = gamma {
        params = params.with_gamma(g);
    }
    let out = match evaluate_point(&params) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let Some(report) = out.report else {
        println!("status = {}", out.status);
        return ExitCode::SUCCESS;
    };
    let numeric_qd = match discord_numeric(out.state.as_ref().expect("report implies state")) {
        Ok(d) => d.discord,
        Err(e) => return fail(e),
    };
    let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.12}"));
    println!("T_over_omega = {:.12}", mode.t_over_omega());
    println!("a = {:.12}", mode.a());
    println!("b = {:.12}", mode.b());
    println!("U_numeric = {:.12}", report.lhs_numeric);
    println!("U_analytic = {}", opt(report.lhs_analytic));
    println!("Ub_numeric = {:.12}", report.bound_numeric);
    println!("Ub_analytic = {}", opt(report.bound_analytic));
    println!("conditional_entropy = {:.12}", report.conditional_entropy);
    println!("QD = {:.12}", report.discord);
    println!("QD_numeric = {numeric_qd:.12}");
    println!("mixedness = {:.12}", report.mixedness);
    println!("Psucc = {:.12}", report.success_probability);
    println!("status = {}", out.status);
    if csv {
        use eur_hawking::sweep::format_value as f;
        println!("U_analytic,U_numeric,Ub_analytic,Ub_numeric,QD,mixedness,Psucc,status");
        println!(
            "{},{},{},{},{},{},{},{}",
            f(report.lhs_analytic),
            f(Some(report.lhs_numeric)),
            f(report.bound_analytic),
            f(Some(report.bound_numeric)),
            f(Some(report.discord)),
            f(Some(report.mixedness)),
            f(Some(report.success_probability)),
            out.status
        );
    }
    ExitCode::SUCCESS
}
