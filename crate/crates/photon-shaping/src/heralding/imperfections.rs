//! Experimental-imperfection models: finite detector time resolution and
//! filter central-frequency drift.

use crate::error::{Error, Result};
use crate::numerics::envelope::RealEnvelope;
use crate::numerics::grid::{Grid, UniformAxis};

/// Smear an intensity profile with the detector's finite time resolution:
/// convolution with a unit-area box of width `t_d`. `t_d = 0` is the
/// identity; total intensity is preserved for profiles contained in the
/// grid. Negligible while t_d ≪ t_m.
pub fn apply_detector_jitter(intensity: &RealEnvelope<Grid>, t_d: f64) -> Result<RealEnvelope<Grid>> {
    if !(t_d >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "detector resolution must be non-negative, got {t_d}"
        )));
    }
    let step = intensity.axis().step();
    if t_d <= step * 1e-12 {
        return Ok(intensity.clone());
    }

    // cell-overlap weights of the box [−t_d/2, t_d/2] against cells of
    // width `step` centered on the samples; sums to one by construction
    let half_cells = (0.5 * t_d / step + 0.5).ceil() as i64;
    let mut weights = Vec::with_capacity((2 * half_cells + 1) as usize);
    for j in -half_cells..=half_cells {
        let cell_lo = (j as f64 - 0.5) * step;
        let cell_hi = (j as f64 + 0.5) * step;
        let lo = cell_lo.max(-0.5 * t_d);
        let hi = cell_hi.min(0.5 * t_d);
        weights.push(((hi - lo).max(0.0)) / t_d);
    }
    let wsum: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= wsum;
    }

    let n = intensity.axis().count();
    let values = intensity.values();
    let mut out = vec![0.0f64; n];
    for (slot, i) in out.iter_mut().zip(0..n as i64) {
        let mut acc = 0.0;
        for (w, j) in weights.iter().zip(-half_cells..=half_cells) {
            let k = i - j;
            if k >= 0 && (k as usize) < n {
                acc += w * values[k as usize];
            }
        }
        *slot = acc;
    }
    RealEnvelope::new(intensity.axis().clone(), out)
}

/// Expected spectral shift of the heralded photon when the filter center
/// drifts by `filter_drift`: the frequency anti-correlation of the pair
/// maps a positive filter shift to an equal and opposite shift of the
/// heralded spectrum.
pub fn heralded_spectrum_shift(filter_drift: f64) -> f64 {
    -filter_drift
}
