//! Discrete Fourier transforms under the convention
//!
//! ```text
//! 𝓕(τ) = (1/2π) ∫ F(ω) e^{−iωτ} dω        (frequency → time)
//! F(ω) =        ∫ 𝓕(τ) e^{+iωτ} dτ        (time → frequency)
//! ```
//!
//! Both directions emit the centered dual axis of their input, so a
//! round trip over a centered axis reproduces the input samples exactly
//! (up to floating-point rounding).

use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use crate::error::{Warned, Warning};
use crate::numerics::envelope::{Spectrum, TimeEnvelope};
use crate::numerics::grid::UniformAxis;

/// Relative spectral magnitude allowed at the band edges before the result
/// is flagged as aliased.
pub const ALIASING_EDGE_THRESHOLD: f64 = 1e-4;

/// Transform a spectrum to the time domain on the centered dual grid.
///
/// Attaches an aliasing warning when the spectrum has not decayed below
/// `ALIASING_EDGE_THRESHOLD` of its peak at the band edges.
pub fn to_time_domain(spectrum: &Spectrum) -> Warned<TimeEnvelope> {
    let fgrid = spectrum.axis();
    let n = fgrid.count();
    let tgrid = fgrid.dual();
    let d_omega = fgrid.step();
    let omega0 = fgrid.origin();
    let tau0 = tgrid.origin();

    let mut buf: Vec<C64> = spectrum
        .samples()
        .iter()
        .enumerate()
        .map(|(j, f)| f * C64::from_polar(1.0, -(j as f64) * d_omega * tau0))
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let scale = d_omega / (2.0 * std::f64::consts::PI);
    let samples: Vec<C64> = buf
        .iter()
        .enumerate()
        .map(|(k, v)| v * scale * C64::from_polar(1.0, -omega0 * tgrid.point(k)))
        .collect();

    let mut warnings = Vec::new();
    let peak = spectrum.max_abs();
    if peak > 0.0 {
        let edge = spectrum.samples()[0]
            .norm()
            .max(spectrum.samples()[n - 1].norm());
        let edge_fraction = edge / peak;
        if edge_fraction > ALIASING_EDGE_THRESHOLD {
            warnings.push(Warning::Aliasing { edge_fraction });
        }
    }

    Warned::with(
        TimeEnvelope::new(tgrid, samples).expect("dual grid has matching length"),
        warnings,
    )
}

/// Transform a time-domain envelope to the centered dual frequency grid.
pub fn to_frequency_domain(envelope: &TimeEnvelope) -> Spectrum {
    let tgrid = envelope.axis();
    let n = tgrid.count();
    let fgrid = tgrid.dual();
    let step = tgrid.step();
    let omega0 = fgrid.origin();
    let tau0 = tgrid.origin();

    let mut buf: Vec<C64> = envelope
        .samples()
        .iter()
        .enumerate()
        .map(|(k, f)| f * C64::from_polar(1.0, omega0 * (k as f64) * step))
        .collect();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);

    let samples: Vec<C64> = buf
        .iter()
        .enumerate()
        .map(|(j, v)| v * step * C64::from_polar(1.0, fgrid.point(j) * tau0))
        .collect();

    Spectrum::new(fgrid, samples).expect("dual grid has matching length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::grid::{FrequencyGrid, Grid};

    #[test]
    fn flat_spectrum_gives_sharp_pulse_at_origin() {
        let fgrid = FrequencyGrid::centered(200.0, 4096).unwrap();
        let spec = Spectrum::from_real_fn(fgrid, |_| 1.0);
        let pulse = to_time_domain(&spec).into_value();
        // peaked at τ = 0
        let peak_idx = pulse.intensity().argmax();
        assert!((pulse.axis().point(peak_idx)).abs() < pulse.axis().step() / 2.0);
        // integrates to F(0) = 1
        let total = pulse.integral();
        assert!((total.re - 1.0).abs() < 1e-9, "integral {total}");
        assert!(total.im.abs() < 1e-9);
    }

    #[test]
    fn lorentzian_spectrum_transforms_to_decaying_exponential() {
        // F(ω) = 1/(1 − 2iω t_m)  →  (1/2t_m) e^{−τ/2t_m} Θ(τ).
        // Reconstructing a jump from a band of half-width Ω leaves an L²
        // residue of order (Ω t_m)^{-1/2}; Ω t_m = 6400 here.
        let t_m = 1.0;
        let fgrid = FrequencyGrid::centered(6400.0, 1 << 17).unwrap();
        let spec = Spectrum::from_fn(fgrid, |w| {
            C64::new(1.0, 0.0) / C64::new(1.0, -2.0 * w * t_m)
        });
        let pulse = to_time_domain(&spec).into_value();
        let analytic = TimeEnvelope::from_real_fn(pulse.axis().clone(), |tau| {
            if tau > 0.0 {
                (1.0 / (2.0 * t_m)) * (-tau / (2.0 * t_m)).exp()
            } else if tau == 0.0 {
                1.0 / (4.0 * t_m) // Fourier midpoint at the jump
            } else {
                0.0
            }
        });
        let diff: f64 = pulse
            .samples()
            .iter()
            .zip(analytic.samples())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let norm: f64 = analytic
            .samples()
            .iter()
            .map(|s| s.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(
            diff / norm < 1e-2,
            "relative L2 deviation from analytic impulse response: {:.3e}",
            diff / norm
        );
    }

    #[test]
    fn parseval_between_domains() {
        let tgrid = Grid::new(-32.0, 32.0, 4096).unwrap();
        let env = TimeEnvelope::from_fn(tgrid, |t| {
            C64::new((-0.5 * t * t).exp() * (2.0 * t).cos(), (-0.4 * t * t).exp() * t.sin())
        });
        let spec = to_frequency_domain(&env);
        let time_energy = env.l2_norm_sq();
        let freq_energy = spec.l2_norm_sq() / (2.0 * std::f64::consts::PI);
        assert!(
            ((time_energy - freq_energy) / time_energy).abs() < 1e-10,
            "Parseval violated: {time_energy} vs {freq_energy}"
        );
    }

    #[test]
    fn round_trip_recovers_band_limited_input() {
        let fgrid = FrequencyGrid::centered(64.0, 2048).unwrap();
        let spec = Spectrum::from_fn(fgrid, |w| {
            C64::new((-0.1 * w * w).exp(), 0.0) * C64::from_polar(1.0, 0.3 * w)
        });
        let back = to_frequency_domain(&to_time_domain(&spec).into_value());
        assert!(back.axis().same_axis(spec.axis()));
        let diff: f64 = back
            .samples()
            .iter()
            .zip(spec.samples())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let norm: f64 = spec.samples().iter().map(|s| s.norm_sqr()).sum::<f64>().sqrt();
        let err = diff / norm;
        assert!(err < 1e-10, "round-trip relative error {err:.3e}");
    }

    #[test]
    fn aliasing_warning_fires_for_truncated_spectrum() {
        let fgrid = FrequencyGrid::centered(4.0, 256).unwrap();
        // Lorentzian tail is ~1/(2·4) = 0.125 of peak at the band edge
        let spec = Spectrum::from_fn(fgrid, |w| C64::new(1.0, 0.0) / C64::new(1.0, -2.0 * w));
        let out = to_time_domain(&spec);
        assert!(matches!(out.warnings[..], [Warning::Aliasing { .. }]));

        let wide = FrequencyGrid::centered(1e6, 256).unwrap();
        let spec = Spectrum::from_fn(wide, |w| C64::new(1.0, 0.0) / C64::new(1.0, -2.0 * w));
        assert!(to_time_domain(&spec).is_clean());
    }

    #[test]
    fn frequency_shift_theorem() {
        // shifting the spectrum multiplies the time envelope by a phase ramp
        let fgrid = FrequencyGrid::centered(80.0, 4096).unwrap();
        let base = Spectrum::from_fn(fgrid.clone(), |w| C64::new((-0.05 * w * w).exp(), 0.0));
        let shift = 3.0;
        let shifted = Spectrum::from_fn(fgrid, |w| {
            C64::new((-0.05 * (w - shift) * (w - shift)).exp(), 0.0)
        });
        let a = to_time_domain(&base).into_value();
        let b = to_time_domain(&shifted).into_value();
        for (i, (x, y)) in a.samples().iter().zip(b.samples()).enumerate() {
            if x.norm() < 1e-6 {
                continue;
            }
            let tau = a.axis().point(i);
            let expected = x * C64::from_polar(1.0, -shift * tau);
            assert!(
                (expected - y).norm() < 1e-8 * x.norm().max(1.0),
                "phase ramp mismatch at τ={tau}"
            );
        }
    }
}
