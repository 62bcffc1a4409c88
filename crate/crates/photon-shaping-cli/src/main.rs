//! Command-line front end for the heralded photon-shaping simulator.
//!
//! Times are dimensionless in units of the pair correlation time t_c; pass
//! `--unit ns --tc 7` to attach physical units to emitted datasets. Exit
//! codes: 0 success, 2 configuration/usage errors, 3 resolution and
//! containment errors.

// validators use `!(x > 0.0)` so that NaN is rejected along with
// non-positive values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod config;
mod figures;
mod output;
mod report;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use photon_shaping::{
    cw_heralding_probability, default_windowed_grid, heralding_probability,
    heralding_probability_estimate, joint_amplitude, validate_regime, Error, PairModel,
    RegimeParams, SpectralFilter,
};

use config::ScenarioConfig;
use figures::{reproduce_figure, FigureId, FigurePipeline};
use output::{Format, UnitScale};
use report::{leading_warnings, regime_table};

#[derive(Parser)]
#[command(
    name = "photon-shaping",
    about = "Heralded single-photon temporal shaping via nonlocal spectral filtering",
    version
)]
struct Cli {
    /// Physical unit label for time outputs (requires --tc).
    #[arg(long, global = true, requires = "tc")]
    unit: Option<String>,
    /// Pair correlation time expressed in --unit (e.g. 7 with --unit ns).
    #[arg(long, global = true, requires = "unit")]
    tc: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output directory for datasets.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Dataset format.
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Heralded conditional shapes for a pair model and filter.
    Shape {
        /// Pair model: windowed | cw | ideal.
        #[arg(long, default_value = "windowed")]
        model: String,
        /// Pair window duration t_u (windowed model), in t_c units.
        #[arg(long, default_value_t = 150.0)]
        tu: f64,
        /// Mean pair flux n̄ (cw model), in 1/t_c units.
        #[arg(long, default_value_t = 0.01)]
        nbar: f64,
        /// Filter response time t_m, in t_c units.
        #[arg(long, default_value_t = 10.0)]
        tm: f64,
        /// Filter central-frequency drift ω_d.
        #[arg(long, default_value_t = 0.0)]
        drift: f64,
        /// Herald instant(s) t′ (repeatable).
        #[arg(long = "herald", required = true)]
        heralds: Vec<f64>,
        /// Grid step override.
        #[arg(long)]
        step: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Heralding probability: exact integral (windowed) or closed form (cw),
    /// with the width-ratio estimate.
    HeraldProb {
        /// Pair model: windowed | cw.
        #[arg(long, default_value = "windowed")]
        model: String,
        #[arg(long, default_value_t = 150.0)]
        tu: f64,
        #[arg(long, default_value_t = 10.0)]
        tm: f64,
        #[arg(long, default_value_t = 0.0)]
        drift: f64,
    },
    /// Second-order signal–idler cross-correlation of the stationary model.
    G2 {
        /// Mean pair flux n̄·t_c.
        #[arg(long, default_value_t = 0.01)]
        nbar: f64,
        #[arg(long, default_value_t = 10.0)]
        tm: f64,
        /// Delay range as lo:hi in t_c units.
        #[arg(long, default_value = "-300:10", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 4001)]
        points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Excitation of a two-level atom by the closed-form heralded shape.
    Atom {
        /// ε = t_m/t_c of the heralded shape.
        #[arg(long, default_value_t = 10.0)]
        epsilon: f64,
        /// Atomic lifetime; defaults to the matched case (= t_m).
        #[arg(long)]
        lifetime: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Validity-regime report for a parameter set.
    Validate {
        #[arg(long, default_value_t = 10.0)]
        tm: f64,
        #[arg(long)]
        tu: Option<f64>,
        /// Detector time resolution t_d.
        #[arg(long)]
        td: Option<f64>,
        /// Filter drift ω_d.
        #[arg(long)]
        drift: Option<f64>,
        /// Mean pair flux n̄.
        #[arg(long)]
        nbar: Option<f64>,
        /// Pump coherence time t_coh.
        #[arg(long)]
        tcoh: Option<f64>,
    },
    /// Reference figure datasets (fig3a, fig3b, fig4, fig5, or all).
    Figure {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a scenario from a JSON configuration file.
    Run {
        config: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let unit = cli.unit.as_ref().zip(cli.tc).map(|(label, tc)| UnitScale {
        label: label.clone(),
        correlation_time: tc,
    });
    match dispatch(cli.command, unit) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Resolution(_) | Error::Containment(_) | Error::NoHerald { .. } => {
                    ExitCode::from(3)
                }
                Error::InvalidArgument(_) | Error::Table(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

enum CliError {
    Config(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn dispatch(command: Command, unit: Option<UnitScale>) -> Result<(), CliError> {
    match command {
        Command::Shape { model, tu, nbar, tm, drift, heralds, step, output } => {
            let mut cfg_json = serde_json::json!({
                "pair_model": pair_model_json(&model, tu, nbar)?,
                "filter": {"kind": "lorentzian", "response_time": tm, "drift": drift},
                "herald_instants": heralds,
                "output": {"directory": output.out, "format": format_name(output.format)},
            });
            if let Some(step) = step {
                cfg_json["grid"] = serde_json::json!({ "step": step });
            }
            attach_unit(&mut cfg_json, &unit);
            let cfg: ScenarioConfig =
                serde_json::from_value(cfg_json).map_err(|e| CliError::Config(e.to_string()))?;
            let report = scenario::run_scenario(&cfg)?;
            print!("{report}");
            Ok(())
        }
        Command::HeraldProb { model, tu, tm, drift } => {
            let filter = SpectralFilter::lorentzian(tm)
                .map_err(CliError::Core)?
                .with_drift(drift);
            let estimate = heralding_probability_estimate(1.0 / tm, 1.0)
                .map_err(CliError::Core)?
                .into_value();
            match model.as_str() {
                "windowed" => {
                    let pair = PairModel::finite_window(1.0, tu).map_err(CliError::Core)?;
                    let grid = default_windowed_grid(tu, 1.0, tm).map_err(CliError::Core)?;
                    let joint = joint_amplitude(&pair, &grid).map_err(CliError::Core)?;
                    let r = heralding_probability(&joint, &filter).map_err(CliError::Core)?;
                    println!("heralding probability (exact integral): R = {r:.4}");
                    println!("width-ratio estimate: {estimate:.4}");
                }
                "cw" => {
                    let r = cw_heralding_probability(1.0, tm);
                    println!("heralding probability (closed form): R = {:.4}", r.exact);
                    println!("t_m >> t_c asymptote: {:.4}", r.asymptotic);
                    println!("width-ratio estimate: {estimate:.4}");
                }
                other => {
                    return Err(CliError::Config(format!(
                        "herald-prob supports windowed or cw models, got {other:?}"
                    )))
                }
            }
            Ok(())
        }
        Command::G2 { nbar, tm, range, points, output } => {
            let (lo, hi) = parse_range(&range).map_err(CliError::Config)?;
            if points < 2 {
                return Err(CliError::Config("g2 needs at least 2 points".into()));
            }
            let ds = scenario::g2_dataset(nbar, 1.0, tm, lo, hi, points);
            let path = ds
                .write(&output.out, "g2", output.format, unit.as_ref())
                .map_err(CliError::Core)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        Command::Atom { epsilon, lifetime, output } => {
            use photon_shaping::{
                cw_conditional_envelope, excitation_curve, p_max_closed_form, AtomModel, Grid,
            };
            if epsilon <= 0.0 {
                return Err(CliError::Config("epsilon must be positive".into()));
            }
            let t_m = epsilon;
            let lifetime = lifetime.unwrap_or(t_m);
            let step = (1.0f64 / 8.0).min(lifetime / 16.0);
            let count = (36.0 * t_m / step) as usize + 1;
            let grid =
                Grid::with_step(-24.0 * t_m, step, count).map_err(CliError::Core)?;
            let psi = cw_conditional_envelope(&grid, 0.0, 1.0, t_m)
                .normalized()
                .map_err(CliError::Core)?;
            let atom = AtomModel::new(lifetime).map_err(CliError::Core)?;
            let curve = excitation_curve(&psi, &atom).map_err(CliError::Core)?;
            println!(
                "p_max = {:.4} at t = {:.4} (herald at 0); matched closed form {:.4}",
                curve.p_max,
                curve.t_peak,
                p_max_closed_form(epsilon)
            );
            let mut ds = output::Dataset::new();
            ds.push_time("t", {
                use photon_shaping::UniformAxis;
                curve.probability.axis().points()
            });
            ds.push("p", curve.probability.values().to_vec());
            let path = ds
                .write(&output.out, "excitation", output.format, unit.as_ref())
                .map_err(CliError::Core)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        Command::Validate { tm, tu, td, drift, nbar, tcoh } => {
            let params = RegimeParams {
                correlation_time: 1.0,
                response_time: tm,
                window: tu,
                detector_resolution: td,
                filter_drift: drift,
                pair_flux: nbar,
                pump_coherence_time: tcoh,
            };
            let conditions = validate_regime(&params);
            print!("{}", leading_warnings(&conditions));
            print!("{}", regime_table(&conditions));
            Ok(())
        }
        Command::Figure { id, output } => {
            let ids: Vec<FigureId> = if id == "all" {
                vec![FigureId::Fig3a, FigureId::Fig3b, FigureId::Fig4, FigureId::Fig5]
            } else {
                vec![id.parse().map_err(CliError::Config)?]
            };
            let mut pipeline: Option<FigurePipeline> = None;
            for id in ids {
                let path =
                    reproduce_figure(id, &output.out, output.format, unit.as_ref(), &mut pipeline)
                        .map_err(CliError::Core)?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Run { config } => {
            let cfg = ScenarioConfig::from_file(&config).map_err(CliError::Config)?;
            let report = scenario::run_scenario(&cfg)?;
            print!("{report}");
            Ok(())
        }
    }
}

fn pair_model_json(model: &str, tu: f64, nbar: f64) -> Result<serde_json::Value, CliError> {
    match model {
        "windowed" => Ok(serde_json::json!({"kind": "finite_window", "window": tu})),
        "cw" => Ok(serde_json::json!({"kind": "stationary_cw", "pair_flux": nbar})),
        "ideal" => Ok(serde_json::json!({"kind": "ideal"})),
        other => Err(CliError::Config(format!(
            "unknown pair model {other:?}; use windowed, cw or ideal"
        ))),
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

fn attach_unit(cfg: &mut serde_json::Value, unit: &Option<UnitScale>) {
    if let Some(u) = unit {
        cfg["unit"] = serde_json::json!({
            "label": u.label,
            "correlation_time": u.correlation_time,
        });
    }
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("range must be lo:hi, got {s:?}"))?;
    let lo: f64 = lo.parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if !(hi > lo) {
        return Err(format!("range needs hi > lo, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}
