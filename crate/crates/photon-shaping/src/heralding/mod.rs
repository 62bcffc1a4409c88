//! The shaping engine: apply the idler-arm filter to a joint amplitude,
//! extract heralded conditional signal shapes, compute heralding
//! probabilities (exact, estimated, and stationary closed forms), the
//! second-order cross-correlation, imperfection models, and the regime
//! validator.

mod closed_form;
mod filtering;
mod imperfections;
mod regime;

pub use closed_form::{
    cw_conditional_envelope, cw_conditional_shape, cw_heralding_probability, g2_cross,
    CwHeralding,
};
pub use filtering::{
    apply_filter, apply_filter_via, conditional_shape, heralding_probability,
    heralding_probability_estimate, temporal_modulation_rate_estimate, FilterPath,
    TemporalModulationEstimate,
};
pub use imperfections::{apply_detector_jitter, heralded_spectrum_shift};
pub use regime::{
    validate_regime, RegimeCondition, RegimeParams, RegimeStatus, REGIME_CLEAN_RATIO,
    REGIME_WARN_RATIO,
};

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result, Warned, Warning};
use crate::numerics::envelope::{RealEnvelope, TimeEnvelope};
use crate::numerics::grid::{Grid, UniformAxis};

/// Two-photon temporal amplitude Ψ(t, t′) on a signal × idler grid.
///
/// Unfiltered joint amplitudes are unit-normalized; after filtering the
/// squared norm equals the heralding probability. Rows index the signal
/// time, columns the idler time. Values are immutable after construction;
/// filtering returns a new joint amplitude.
#[derive(Debug, Clone)]
pub struct JointAmplitude {
    grid_s: Grid,
    grid_i: Grid,
    samples: Array2<C64>,
    filtered: bool,
}

/// A heralded conditional signal shape.
#[derive(Debug, Clone)]
pub struct HeraldResult {
    /// The (snapped) idler detection instant the shape is conditioned on.
    pub herald_instant: f64,
    /// Unit-normalized conditional shape over the signal grid.
    pub shape: TimeEnvelope,
    /// Pre-normalization L² norm of the slice; its square is the density of
    /// heralds at the herald instant.
    pub raw_norm: f64,
}

impl JointAmplitude {
    /// Build and unit-normalize a joint amplitude. The squared norm is the
    /// plain Riemann double sum Σ|Ψ|²·dt·dt′, which is what the spectral
    /// Parseval identities preserve exactly.
    pub fn new_normalized(grid_s: Grid, grid_i: Grid, samples: Array2<C64>) -> Result<Self> {
        let mut joint = Self::new_unchecked(grid_s, grid_i, samples, false)?;
        let norm_sq = joint.norm_sq();
        if norm_sq < 1e-300 {
            return Err(Error::InvalidArgument(
                "joint amplitude has zero norm".into(),
            ));
        }
        let scale = C64::new(1.0 / norm_sq.sqrt(), 0.0);
        joint.samples.mapv_inplace(|v| v * scale);
        Ok(joint)
    }

    pub(crate) fn new_unchecked(
        grid_s: Grid,
        grid_i: Grid,
        samples: Array2<C64>,
        filtered: bool,
    ) -> Result<Self> {
        if samples.nrows() != grid_s.count() || samples.ncols() != grid_i.count() {
            return Err(Error::InvalidArgument(format!(
                "joint amplitude shape {:?} does not match grids {}×{}",
                samples.dim(),
                grid_s.count(),
                grid_i.count()
            )));
        }
        Ok(Self { grid_s, grid_i, samples, filtered })
    }

    pub fn signal_grid(&self) -> &Grid {
        &self.grid_s
    }

    pub fn idler_grid(&self) -> &Grid {
        &self.grid_i
    }

    pub fn samples(&self) -> &Array2<C64> {
        &self.samples
    }

    pub fn is_filtered(&self) -> bool {
        self.filtered
    }

    /// Squared L² norm Σ|Ψ|²·dt·dt′: one for unfiltered joints, the
    /// heralding probability after filtering.
    pub fn norm_sq(&self) -> f64 {
        let cell = self.grid_s.step() * self.grid_i.step();
        self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>() * cell
    }

    /// Temporal distribution of the idler photon: ∫|Ψ(t,t′)|² dt.
    pub fn idler_marginal(&self) -> RealEnvelope {
        let h_s = self.grid_s.step();
        let values = (0..self.grid_i.count())
            .map(|c| {
                self.samples
                    .column(c)
                    .iter()
                    .map(|v| v.norm_sqr())
                    .sum::<f64>()
                    * h_s
            })
            .collect();
        RealEnvelope::new(self.grid_i.clone(), values).expect("column count matches grid")
    }

    /// Temporal distribution of the signal photon: ∫|Ψ(t,t′)|² dt′.
    pub fn signal_marginal(&self) -> RealEnvelope {
        let h_i = self.grid_i.step();
        let values = (0..self.grid_s.count())
            .map(|r| {
                self.samples
                    .row(r)
                    .iter()
                    .map(|v| v.norm_sqr())
                    .sum::<f64>()
                    * h_i
            })
            .collect();
        RealEnvelope::new(self.grid_s.clone(), values).expect("row count matches grid")
    }

    /// Raw complex slice Ψ(·, t′) at the idler time nearest to `t_prime`,
    /// together with the snapped instant. Works on filtered and unfiltered
    /// joints; attaches a warning when the requested instant is off-grid.
    pub fn idler_slice(&self, t_prime: f64) -> Warned<(TimeEnvelope, f64)> {
        let c = self.grid_i.nearest_index(t_prime);
        let snapped = self.grid_i.point(c);
        let samples: Vec<C64> = self.samples.column(c).iter().copied().collect();
        let env = TimeEnvelope::new(self.grid_s.clone(), samples)
            .expect("slice length matches signal grid");
        let mut warnings = Vec::new();
        if (t_prime - snapped).abs() > 1e-9 * self.grid_i.step() {
            warnings.push(Warning::OffGridHerald { requested: t_prime, snapped });
        }
        Warned::with((env, snapped), warnings)
    }
}
