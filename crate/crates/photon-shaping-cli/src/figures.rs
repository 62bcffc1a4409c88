//! Reference figure datasets for the t_u:t_m:t_c = 150:10:1 scenario and
//! the ε sweeps. Every dataset is a deterministic pure function of the baked
//! parameters and the output is byte-stable across runs.

use std::path::{Path, PathBuf};

use photon_shaping::{
    apply_filter, conditional_shape, cw_conditional_envelope, cw_heralding_probability,
    excitation_curve, joint_amplitude, p_max_closed_form, AtomModel, Grid, JointAmplitude,
    PairModel, Result, SpectralFilter, UniformAxis,
};

use crate::output::{Dataset, Format, UnitScale};

const T_C: f64 = 1.0;
const T_M: f64 = 10.0;
const T_U: f64 = 150.0;
const STEP: f64 = 0.125;
/// Herald instants marked in the conditional-shape panel.
const FIG3B_INSTANTS: [f64; 3] = [30.0, 75.0, 120.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig3a,
    Fig3b,
    Fig4,
    Fig5,
}

impl std::str::FromStr for FigureId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fig3a" => Ok(Self::Fig3a),
            "fig3b" => Ok(Self::Fig3b),
            "fig4" => Ok(Self::Fig4),
            "fig5" => Ok(Self::Fig5),
            other => Err(format!(
                "unknown figure {other:?}; use fig3a, fig3b, fig4, fig5 or all"
            )),
        }
    }
}

impl FigureId {
    pub fn stem(self) -> &'static str {
        match self {
            Self::Fig3a => "fig3a",
            Self::Fig3b => "fig3b",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
        }
    }
}

/// The filtered 150:10:1 pipeline, built once and shared by fig3a/fig3b.
pub struct FigurePipeline {
    joint: JointAmplitude,
    filtered: JointAmplitude,
}

impl FigurePipeline {
    pub fn build() -> Result<Self> {
        let model = PairModel::finite_window(T_C, T_U)?;
        let count = ((270.0 / STEP) as usize) + 1;
        let grid = Grid::with_step(-20.0, STEP, count)?;
        let joint = joint_amplitude(&model, &grid)?;
        let filter = SpectralFilter::lorentzian(T_M)?;
        let filtered = apply_filter(&joint, &filter)?;
        Ok(Self { joint, filtered })
    }

    /// Idler temporal distribution before and after the filter, unit-max
    /// normalized, over the configured window.
    fn fig3a(&self) -> Result<Dataset> {
        let grid = self.joint.idler_grid().clone();
        let before = self.joint.idler_marginal().normalized_to_unit_max()?;
        let after_full = self.filtered.idler_marginal().normalized_to_unit_max()?;
        let n = grid.count();
        let mut ds = Dataset::new();
        ds.push_time("t", grid.points());
        ds.push("unfiltered", before.values().to_vec());
        ds.push("filtered", after_full.values()[..n].to_vec());
        Ok(ds)
    }

    /// Conditional signal distributions at the marked herald instants, with
    /// the unfiltered slices as the dashed reference, each unit-max
    /// normalized.
    fn fig3b(&self) -> Result<Dataset> {
        let grid = self.joint.signal_grid().clone();
        let mut ds = Dataset::new();
        ds.push_time("t", grid.points());
        for t_prime in FIG3B_INSTANTS {
            let shaped = conditional_shape(&self.filtered, t_prime)?.into_value();
            let filtered = shaped.shape.intensity().normalized_to_unit_max()?;
            let (raw, _) = self.joint.idler_slice(t_prime).into_value();
            let unfiltered = raw.intensity().normalized_to_unit_max()?;
            let tag = format_tag(t_prime);
            ds.push(format!("filtered_{tag}"), filtered.values().to_vec());
            ds.push(format!("unfiltered_{tag}"), unfiltered.values().to_vec());
        }
        Ok(ds)
    }
}

fn format_tag(t: f64) -> String {
    format!("t{}", t as i64)
}

/// Excitation of a matched atom by the ε = 10 closed-form shape heralded at
/// t = 0: columns t, p, and the unit-max photon intensity.
fn fig4() -> Result<Dataset> {
    let step = T_C / 8.0;
    let count = (36.0 * T_M / step) as usize + 1;
    let grid = Grid::with_step(-24.0 * T_M, step, count)?;
    let psi = cw_conditional_envelope(&grid, 0.0, T_C, T_M).normalized()?;
    let curve = excitation_curve(&psi, &AtomModel::new(T_M)?)?;
    let intensity = psi.intensity().normalized_to_unit_max()?;
    let mut ds = Dataset::new();
    ds.push_time("t", grid.points());
    ds.push("p", curve.probability.values().to_vec());
    ds.push("intensity", intensity.values().to_vec());
    Ok(ds)
}

/// Heralding probability and maximum excitation probability over a log-
/// spaced ε sweep (with the round marker values included exactly).
fn fig5() -> Result<Dataset> {
    let mut eps: Vec<f64> = (0..57)
        .map(|k| 0.5 * (200.0f64).powf(k as f64 / 56.0))
        .collect();
    eps.extend_from_slice(&[0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0]);
    eps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eps.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * b.abs());

    let r: Vec<f64> = eps
        .iter()
        .map(|e| cw_heralding_probability(1.0, *e).exact)
        .collect();
    let p: Vec<f64> = eps.iter().map(|e| p_max_closed_form(*e)).collect();
    let mut ds = Dataset::new();
    ds.push("epsilon", eps);
    ds.push("R", r);
    ds.push("p_max", p);
    Ok(ds)
}

/// Emit one figure dataset. `pipeline` caches the heavy 150:10:1 filtering
/// across multiple figures in one invocation.
pub fn reproduce_figure(
    id: FigureId,
    dir: &Path,
    format: Format,
    unit: Option<&UnitScale>,
    pipeline: &mut Option<FigurePipeline>,
) -> Result<PathBuf> {
    let ds = match id {
        FigureId::Fig3a | FigureId::Fig3b => {
            if pipeline.is_none() {
                *pipeline = Some(FigurePipeline::build()?);
            }
            let p = pipeline.as_ref().unwrap();
            match id {
                FigureId::Fig3a => p.fig3a()?,
                _ => p.fig3b()?,
            }
        }
        FigureId::Fig4 => fig4()?,
        FigureId::Fig5 => fig5()?,
    };
    ds.write(dir, id.stem(), format, unit)
}
