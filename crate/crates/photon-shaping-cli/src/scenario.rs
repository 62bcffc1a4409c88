//! Full scenario execution: datasets plus a text report.

use std::fmt::Write as _;

use photon_shaping::{
    apply_detector_jitter, apply_filter, conditional_shape, cw_conditional_envelope,
    cw_heralding_probability, default_stationary_grid, default_windowed_grid, excitation_curve,
    g2_cross, heralding_probability, heralding_probability_estimate, validate_regime, AtomModel,
    Error, Grid, PairModel, RealEnvelope, RegimeParams, Result, TimeEnvelope,
    UniformAxis,
};

use crate::config::{GridConfig, ScenarioConfig, UnitConfig};
use crate::output::{write_atomic, Dataset, UnitScale};
use crate::report::{leading_warnings, regime_table};

fn format_instant(t: f64) -> String {
    let s = format!("{t}");
    s.replace('-', "m").replace('.', "p")
}

fn shape_dataset(shape: &TimeEnvelope) -> Dataset {
    let grid = shape.axis();
    let mut ds = Dataset::new();
    ds.push_time("t", grid.points());
    ds.push("re", shape.samples().iter().map(|v| v.re).collect());
    ds.push("im", shape.samples().iter().map(|v| v.im).collect());
    ds.push(
        "intensity",
        shape.samples().iter().map(|v| v.norm_sqr()).collect(),
    );
    ds
}

fn intensity_dataset(profile: &RealEnvelope<Grid>) -> Dataset {
    let mut ds = Dataset::new();
    ds.push_time("t", profile.axis().points());
    ds.push("intensity", profile.values().to_vec());
    ds
}

fn resolve_grid(
    config: &Option<GridConfig>,
    default: impl FnOnce() -> Result<Grid>,
) -> Result<Grid> {
    match config {
        None => default(),
        Some(over) => {
            let base = default()?;
            let step = over.step.unwrap_or_else(|| base.step());
            let t_min = over.t_min.unwrap_or_else(|| base.origin());
            let t_max = over.t_max.unwrap_or_else(|| base.last());
            if !(t_max > t_min) || !(step > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "grid override needs t_max > t_min and step > 0, got \
                     [{t_min}, {t_max}] step {step}"
                )));
            }
            let count = ((t_max - t_min) / step).round() as usize + 1;
            Grid::with_step(t_min, step, count.max(2))
        }
    }
}

fn unit_scale(unit: &Option<UnitConfig>) -> Option<UnitScale> {
    unit.as_ref().map(|u| UnitScale {
        label: u.label.clone(),
        correlation_time: u.correlation_time,
    })
}

/// Run a scenario end to end. The returned report is also written to
/// `report.txt` in the output directory.
pub fn run_scenario(config: &ScenarioConfig) -> Result<String> {
    let model = config.build_model()?;
    let filter = config.build_filter()?;
    let dir = config.output.directory.clone();
    let format = config.output.format;
    let unit = unit_scale(&config.unit);
    let t_d = config.imperfections.detector_resolution;

    let mut files = Vec::new();
    let mut body = String::new();
    let mut warnings_block = String::new();

    // regime table first: it needs the filter response time
    if let Some(t_m) = filter.response_time() {
        let t_c = model.correlation_time().unwrap_or(0.0);
        let params = RegimeParams {
            correlation_time: if t_c > 0.0 { t_c } else { 1e-9 * t_m },
            response_time: t_m,
            window: match &model {
                PairModel::FiniteWindowExponential { window, .. } => Some(*window),
                _ => None,
            },
            detector_resolution: (t_d > 0.0).then_some(t_d),
            filter_drift: (filter.drift() != 0.0).then_some(filter.drift()),
            pair_flux: match &model {
                PairModel::StationaryCw { pair_flux, .. } => Some(*pair_flux),
                _ => None,
            },
            pump_coherence_time: None,
        };
        let conditions = validate_regime(&params);
        warnings_block = leading_warnings(&conditions);
        body.push_str(&regime_table(&conditions));
    } else {
        body.push_str("regime conditions: skipped (tabulated filter has no response time)\n");
    }

    match &model {
        PairModel::StationaryCw { pair_flux, correlation_time } => {
            let t_m = filter.response_time().ok_or_else(|| {
                Error::InvalidArgument(
                    "stationary scenarios use the closed forms and need a Lorentzian filter"
                        .into(),
                )
            })?;
            let t_c = *correlation_time;
            let r = cw_heralding_probability(t_c, t_m);
            let estimate = heralding_probability_estimate(1.0 / t_m, 1.0 / t_c)?.into_value();
            writeln!(
                body,
                "heralding probability: R = {:.4} (closed form), {:.4} (t_m ≫ t_c asymptote), \
                 {estimate:.4} (width-ratio estimate)",
                r.exact, r.asymptotic
            )
            .ok();

            // g² curve
            let lo = -30.0 * t_m;
            let hi = 10.0 * t_c;
            let n = 4001;
            let step = (hi - lo) / (n - 1) as f64;
            let mut ds = Dataset::new();
            ds.push_time("dt", (0..n).map(|k| lo + k as f64 * step).collect());
            ds.push(
                "g2",
                (0..n)
                    .map(|k| g2_cross(lo + k as f64 * step, 0.0, *pair_flux, t_c, t_m))
                    .collect(),
            );
            files.push(ds.write(&dir, "g2", format, unit.as_ref())?);

            for t_prime in &config.herald_instants {
                let grid = resolve_grid(&config.grid, || {
                    default_stationary_grid(*t_prime, t_c, t_m)
                })?;
                let shape = cw_conditional_envelope(&grid, *t_prime, t_c, t_m).normalized()?;
                let stem = format!("shape_{}", format_instant(*t_prime));
                files.push(shape_dataset(&shape).write(&dir, &stem, format, unit.as_ref())?);
                if t_d > 0.0 {
                    let smeared = apply_detector_jitter(&shape.intensity(), t_d)?;
                    let stem = format!("shape_{}_jittered", format_instant(*t_prime));
                    files.push(
                        intensity_dataset(&smeared).write(&dir, &stem, format, unit.as_ref())?,
                    );
                }
            }

            if let Some(atom_cfg) = &config.atom {
                let t_prime = config.herald_instants.first().copied().unwrap_or(0.0);
                let grid = Grid::with_step(
                    t_prime - 24.0 * t_m,
                    (t_c / 8.0).min(atom_cfg.lifetime / 16.0),
                    (36.0 * t_m / (t_c / 8.0).min(atom_cfg.lifetime / 16.0)) as usize + 1,
                )?;
                let psi = cw_conditional_envelope(&grid, t_prime, t_c, t_m).normalized()?;
                let atom = AtomModel::new(atom_cfg.lifetime)?;
                let curve = excitation_curve(&psi, &atom)?;
                writeln!(
                    body,
                    "atom excitation: p_max = {:.4} at t = {:.4} (herald at {t_prime})",
                    curve.p_max, curve.t_peak
                )
                .ok();
                files.push(
                    excitation_dataset(&curve.probability).write(
                        &dir,
                        "excitation",
                        format,
                        unit.as_ref(),
                    )?,
                );
            }
        }
        PairModel::FiniteWindowExponential { correlation_time, window } => {
            let t_c = *correlation_time;
            let t_m = filter.response_time().unwrap_or(2.0 * t_c);
            let grid = resolve_grid(&config.grid, || {
                default_windowed_grid(*window, t_c, t_m)
            })?;
            let joint = photon_shaping::joint_amplitude(&model, &grid)?;
            let r = heralding_probability(&joint, &filter)?;
            let estimate =
                heralding_probability_estimate(1.0 / t_m, 1.0 / t_c)?.into_value();
            writeln!(
                body,
                "heralding probability: R = {r:.4} (exact integral), \
                 {estimate:.4} (width-ratio estimate)"
            )
            .ok();
            let filtered = apply_filter(&joint, &filter)?;

            let mut first_shape: Option<TimeEnvelope> = None;
            for t_prime in &config.herald_instants {
                let herald = conditional_shape(&filtered, *t_prime)?;
                for w in &herald.warnings {
                    writeln!(body, "note: {w}").ok();
                }
                let herald = herald.into_value();
                writeln!(
                    body,
                    "herald at t' = {}: slice density {:.4e}",
                    herald.herald_instant,
                    herald.raw_norm * herald.raw_norm
                )
                .ok();
                let stem = format!("shape_{}", format_instant(herald.herald_instant));
                files.push(
                    shape_dataset(&herald.shape).write(&dir, &stem, format, unit.as_ref())?,
                );
                if t_d > 0.0 {
                    let smeared = apply_detector_jitter(&herald.shape.intensity(), t_d)?;
                    let stem =
                        format!("shape_{}_jittered", format_instant(herald.herald_instant));
                    files.push(
                        intensity_dataset(&smeared).write(&dir, &stem, format, unit.as_ref())?,
                    );
                }
                if first_shape.is_none() {
                    first_shape = Some(herald.shape.clone());
                }
            }

            if let (Some(atom_cfg), Some(shape)) = (&config.atom, first_shape) {
                let atom = AtomModel::new(atom_cfg.lifetime)?;
                let curve = excitation_curve(&shape, &atom)?;
                writeln!(
                    body,
                    "atom excitation: p_max = {:.4} at t = {:.4}",
                    curve.p_max, curve.t_peak
                )
                .ok();
                files.push(
                    excitation_dataset(&curve.probability).write(
                        &dir,
                        "excitation",
                        format,
                        unit.as_ref(),
                    )?,
                );
            }
        }
        PairModel::IdealCorrelated => {
            let t_m = filter.response_time().ok_or_else(|| {
                Error::InvalidArgument(
                    "ideal-pair scenarios need a Lorentzian filter to size the grid".into(),
                )
            })?;
            let center = config.herald_instants.first().copied().unwrap_or(0.0);
            let grid = resolve_grid(&config.grid, || {
                let step = t_m / 16.0;
                let half = (32.0 * t_m / step).ceil() as i64;
                Grid::with_step(center - half as f64 * step, step, (2 * half) as usize)
            })?;
            let joint = photon_shaping::ideal_joint_amplitude(&grid)?;
            let r = heralding_probability(&joint, &filter)?;
            writeln!(
                body,
                "heralding probability: R = {r:.4e} (grid-resolution limited: ideal \
                 pairs have unbounded unconditional bandwidth)"
            )
            .ok();
            let filtered = apply_filter(&joint, &filter)?;
            for t_prime in &config.herald_instants {
                let herald = conditional_shape(&filtered, *t_prime)?.into_value();
                let stem = format!("shape_{}", format_instant(herald.herald_instant));
                files.push(
                    shape_dataset(&herald.shape).write(&dir, &stem, format, unit.as_ref())?,
                );
            }
        }
    }

    let mut report = String::new();
    report.push_str(&warnings_block);
    report.push_str(&body);
    if !files.is_empty() {
        report.push_str("files:\n");
        for f in &files {
            report.push_str(&format!("  {}\n", f.display()));
        }
    }
    write_atomic(&dir.join("report.txt"), report.as_bytes())?;
    Ok(report)
}

fn excitation_dataset(p: &RealEnvelope<Grid>) -> Dataset {
    let mut ds = Dataset::new();
    ds.push_time("t", p.axis().points());
    ds.push("p", p.values().to_vec());
    ds
}

/// Shared with the figure pipeline: CSV payload of a g² sweep.
pub fn g2_dataset(pair_flux: f64, t_c: f64, t_m: f64, lo: f64, hi: f64, n: usize) -> Dataset {
    let step = (hi - lo) / (n - 1) as f64;
    let mut ds = Dataset::new();
    ds.push_time("dt", (0..n).map(|k| lo + k as f64 * step).collect());
    ds.push(
        "g2",
        (0..n)
            .map(|k| g2_cross(lo + k as f64 * step, 0.0, pair_flux, t_c, t_m))
            .collect(),
    );
    ds
}
