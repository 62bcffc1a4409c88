//! Idler-arm filtering of joint amplitudes, conditional shapes, and
//! heralding-probability computations.

use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use crate::error::{Error, Result, Warned, Warning};
use crate::filters::SpectralFilter;
use crate::heralding::{HeraldResult, JointAmplitude};
use crate::numerics::grid::{Grid, UniformAxis};

/// Which implementation route `apply_filter_via` takes. Both compute the
/// same linear convolution along the idler axis; `Spectral` is the fast
/// path, `TimeDomain` the direct summation used as its cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterPath {
    Spectral,
    TimeDomain,
}

/// Filter the idler arm: Ψ(t,t′) → ∫dτ 𝓕(τ) Ψ(t, t′−τ), row-wise along the
/// idler axis, via the spectral fast path.
///
/// The idler axis is extended by the kernel support so the transmitted
/// amplitude is kept in full; the output squared norm is then exactly the
/// heralding probability.
pub fn apply_filter(joint: &JointAmplitude, filter: &SpectralFilter) -> Result<JointAmplitude> {
    apply_filter_via(joint, filter, FilterPath::Spectral)
}

/// Filter the idler arm over an explicit implementation route.
pub fn apply_filter_via(
    joint: &JointAmplitude,
    filter: &SpectralFilter,
    path: FilterPath,
) -> Result<JointAmplitude> {
    if joint.is_filtered() {
        return Err(Error::AlreadyFiltered);
    }
    let grid_i = joint.idler_grid();
    let step = grid_i.step();
    let n = grid_i.count();
    let ext = filter.extension_len(step, n);
    let out_cols = n + ext;
    let out_grid_i = Grid::with_step(grid_i.origin(), step, out_cols)?;
    let rows = joint.signal_grid().count();

    let mut out = ndarray::Array2::<C64>::zeros((rows, out_cols));
    match path {
        FilterPath::Spectral => {
            let m = out_cols.next_power_of_two();
            let h = filter.spectral_samples(m, step);
            let mut planner = FftPlanner::new();
            let inv = planner.plan_fft_inverse(m);
            let fwd = planner.plan_fft_forward(m);
            let mut buf = vec![C64::new(0.0, 0.0); m];
            let scale = 1.0 / m as f64;
            for r in 0..rows {
                buf.fill(C64::new(0.0, 0.0));
                for (slot, v) in buf.iter_mut().zip(joint.samples().row(r)) {
                    *slot = *v;
                }
                inv.process(&mut buf);
                for (v, hk) in buf.iter_mut().zip(&h) {
                    *v *= hk;
                }
                fwd.process(&mut buf);
                for (c, slot) in out.row_mut(r).iter_mut().enumerate() {
                    *slot = buf[c] * scale;
                }
            }
        }
        FilterPath::TimeDomain => {
            let kernel = filter.convolution_kernel(step).ok_or_else(|| {
                Error::InvalidArgument(
                    "the direct time-domain path needs an analytic impulse response; \
                     tabulated filters are applied spectrally"
                        .into(),
                )
            })?;
            let kernel: Vec<C64> = kernel.iter().map(|k| k * step).collect();
            for r in 0..rows {
                let row = joint.samples().row(r);
                for (j, slot) in out.row_mut(r).iter_mut().enumerate() {
                    let mut acc = C64::new(0.0, 0.0);
                    let k_lo = j.saturating_sub(n - 1);
                    let k_hi = j.min(kernel.len() - 1);
                    for k in k_lo..=k_hi {
                        acc += kernel[k] * row[j - k];
                    }
                    *slot = acc;
                }
            }
        }
    }

    JointAmplitude::new_unchecked(joint.signal_grid().clone(), out_grid_i, out, true)
}

/// Heralding probability: the fraction of idler photons passing the filter,
/// computed as the frequency-domain integral ∬|F(ω′)Φ(ω,ω′)|² without
/// materializing the filtered joint amplitude.
///
/// By Parseval this equals the squared norm of `apply_filter`'s output; the
/// two routes are the dual pair the acceptance suite compares.
pub fn heralding_probability(joint: &JointAmplitude, filter: &SpectralFilter) -> Result<f64> {
    if joint.is_filtered() {
        return Err(Error::AlreadyFiltered);
    }
    let norm_sq = joint.norm_sq();
    if (norm_sq - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidArgument(format!(
            "heralding probability needs a unit-normalized joint amplitude, got norm² = {norm_sq}"
        )));
    }
    let grid_i = joint.idler_grid();
    let step = grid_i.step();
    let n = grid_i.count();
    let ext = filter.extension_len(step, n);
    let m = (n + ext).next_power_of_two();
    let h = filter.spectral_samples(m, step);
    let mut planner = FftPlanner::new();
    let inv = planner.plan_fft_inverse(m);

    let mut buf = vec![C64::new(0.0, 0.0); m];
    let mut acc = 0.0f64;
    for r in 0..joint.signal_grid().count() {
        buf.fill(C64::new(0.0, 0.0));
        for (slot, v) in buf.iter_mut().zip(joint.samples().row(r)) {
            *slot = *v;
        }
        inv.process(&mut buf);
        for (v, hk) in buf.iter().zip(&h) {
            acc += (v * hk).norm_sqr();
        }
    }
    Ok(joint.signal_grid().step() * step * acc / m as f64)
}

/// Conditional signal shape heralded by an idler detection at `t_prime`.
///
/// The instant snaps to the nearest idler sample (with a warning when it
/// was off-grid). Errors when detection at that instant has negligible
/// probability.
pub fn conditional_shape(joint: &JointAmplitude, t_prime: f64) -> Result<Warned<HeraldResult>> {
    if !joint.is_filtered() {
        return Err(Error::InvalidArgument(
            "conditional shapes are extracted from a filtered joint amplitude; \
             call apply_filter first"
                .into(),
        ));
    }
    let sliced = joint.idler_slice(t_prime);
    let (raw, snapped) = sliced.value;
    let raw_norm = raw.l2_norm();
    if raw_norm < 1e-12 {
        return Err(Error::NoHerald { instant: snapped, norm: raw_norm });
    }
    Ok(Warned::with(
        HeraldResult {
            herald_instant: snapped,
            shape: raw.scaled(C64::new(1.0 / raw_norm, 0.0)),
            raw_norm,
        },
        sliced.warnings,
    ))
}

/// Width-ratio estimate of the heralding probability, R ≈ ω_m/ω_u = t_c/t_m,
/// clamped to [0, 1]. Attaches a warning when ω_m > ω_u (the filter passband
/// exceeds the unconditional bandwidth and the estimate degenerates).
pub fn heralding_probability_estimate(omega_m: f64, omega_u: f64) -> Result<Warned<f64>> {
    if !(omega_m > 0.0 && omega_u > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "bandwidths must be positive, got ω_m = {omega_m}, ω_u = {omega_u}"
        )));
    }
    let ratio = omega_m / omega_u;
    let mut warnings = Vec::new();
    if ratio > 1.0 {
        warnings.push(Warning::EstimateOutOfRegime { ratio });
    }
    Ok(Warned::with(ratio.min(1.0), warnings))
}

/// Rate comparison against shaping by temporal modulation of the idler arm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemporalModulationEstimate {
    /// R′ ≈ (t_m/t_u)·ω_f·t_c: acceptance-window fraction times the
    /// frequency post-selection penalty.
    pub rate: f64,
    /// R/R′ ≈ 1/(ω_f·t_m): how much spectral filtering gains by not
    /// post-selecting detection frequencies.
    pub enhancement: f64,
}

/// Heralding-rate estimate for the temporal-modulation alternative, with
/// the filtering-over-modulation enhancement factor. `omega_f` is the
/// frequency acceptance window of the post-selecting detector and is an
/// explicit input.
pub fn temporal_modulation_rate_estimate(
    t_m: f64,
    t_u: f64,
    omega_f: f64,
    t_c: f64,
) -> Result<TemporalModulationEstimate> {
    if !(t_m > 0.0 && t_u > 0.0 && t_c > 0.0) {
        return Err(Error::InvalidArgument(
            "time constants must be positive".into(),
        ));
    }
    if !(omega_f >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "frequency window must be non-negative, got {omega_f}"
        )));
    }
    Ok(TemporalModulationEstimate {
        rate: (t_m / t_u) * omega_f * t_c,
        enhancement: if omega_f > 0.0 {
            1.0 / (omega_f * t_m)
        } else {
            f64::INFINITY
        },
    })
}
