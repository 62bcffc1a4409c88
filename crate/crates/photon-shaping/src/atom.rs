//! Excitation of a two-level atom by a shaped single-photon pulse under
//! full-solid-angle, resonant, mode-matched illumination.
//!
//! The atom responds like a single-port resonator: the scattered field is
//!
//! ```text
//! ψ̃(t) = (1/L) ∫_{−∞}^{t} e^{−(t−u)/2L} ψ(u) du − ψ(t),
//! ```
//!
//! with L the radiative lifetime (amplitude decay constant 2L), a unimodular
//! response that conserves pulse energy. The excitation probability is the
//! running energy balance p(t) = ∫_{−∞}^{t} (|ψ|² − |ψ̃|²) du. A photon with
//! amplitude rising as e^{t/2L} and terminating sharply is absorbed
//! completely; the shapes heralded through a matched Lorentzian filter
//! (lifetime = filter response time) reach p_max = ε/(ε + 1/2), ε = t_m/t_c.

use crate::error::{Error, Result};
use crate::numerics::envelope::{RealEnvelope, TimeEnvelope};
use crate::numerics::grid::{Grid, UniformAxis};
use num_complex::Complex64 as C64;

/// A resonant two-level emitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomModel {
    /// Radiative lifetime; the matched shaping case sets this equal to the
    /// filter response time.
    pub lifetime: f64,
}

/// Time-dependent excitation probability of the atom.
#[derive(Debug, Clone)]
pub struct ExcitationCurve {
    /// p(t) over the pulse grid.
    pub probability: RealEnvelope<Grid>,
    /// Maximum of p over the grid.
    pub p_max: f64,
    /// Grid position of the maximum.
    pub t_peak: f64,
}

impl AtomModel {
    pub fn new(lifetime: f64) -> Result<Self> {
        if !(lifetime > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "atomic lifetime must be positive, got {lifetime}"
            )));
        }
        Ok(Self { lifetime })
    }
}

/// Closed-form maximum excitation probability for the heralded closed-form
/// shape with a matched atom: p_max = ε/(ε + 1/2), ε = t_m/t_c. Strictly
/// increasing, → 1 as ε → ∞.
pub fn p_max_closed_form(epsilon: f64) -> f64 {
    assert!(epsilon > 0.0, "epsilon must be positive");
    epsilon / (epsilon + 0.5)
}

fn check_resolution(grid: &Grid, lifetime: f64) -> Result<()> {
    if grid.step() > lifetime / 16.0 {
        return Err(Error::Resolution(format!(
            "grid step {} does not resolve the atomic lifetime {lifetime}; \
             use step ≤ lifetime/16",
            grid.step()
        )));
    }
    Ok(())
}

/// The causal response integral y(t) = (1/L)∫_{−∞}^t e^{−(t−u)/2L} ψ(u) du,
/// advanced by the trapezoidal (bilinear) one-pole recursion. The bilinear
/// map keeps |2/(1−2iωL) − 1| = 1 exactly on the grid, so the discrete
/// scattering conserves energy to rounding.
fn response_integral(psi: &[C64], step: f64, lifetime: f64) -> Vec<C64> {
    let a = step / (4.0 * lifetime);
    let decay = (1.0 - a) / (1.0 + a);
    let gain = step / (2.0 * lifetime) / (1.0 + a);
    let mut y = Vec::with_capacity(psi.len());
    let mut prev = C64::new(0.0, 0.0);
    let mut prev_psi = C64::new(0.0, 0.0);
    for &s in psi {
        let next = prev * decay + (prev_psi + s) * gain;
        y.push(next);
        prev = next;
        prev_psi = s;
    }
    y
}

/// Shape of the photon scattered by the atom. Elastic: the output carries
/// the input energy (bar what leaks past the grid edges).
pub fn scattered_shape(psi: &TimeEnvelope, atom: &AtomModel) -> Result<TimeEnvelope> {
    check_resolution(psi.axis(), atom.lifetime)?;
    let y = response_integral(psi.samples(), psi.axis().step(), atom.lifetime);
    let samples: Vec<C64> = y
        .iter()
        .zip(psi.samples())
        .map(|(yk, pk)| yk - pk)
        .collect();
    TimeEnvelope::new(psi.axis().clone(), samples)
}

/// Time-dependent excitation probability for a unit-normalized pulse fully
/// contained in its grid.
pub fn excitation_curve(psi: &TimeEnvelope, atom: &AtomModel) -> Result<ExcitationCurve> {
    check_resolution(psi.axis(), atom.lifetime)?;
    let norm_sq = psi.l2_norm_sq();
    if (norm_sq - 1.0).abs() > 1e-6 {
        return Err(Error::InvalidArgument(format!(
            "excitation needs a unit-normalized pulse, got ∫|ψ|² = {norm_sq}"
        )));
    }
    let peak = psi.max_abs();
    let edge = psi.samples()[0]
        .norm()
        .max(psi.samples()[psi.len() - 1].norm());
    if edge > 1e-4 * peak {
        return Err(Error::Containment(format!(
            "pulse is truncated by the grid: edge amplitude is {:.2e} of the peak; \
             enlarge the grid window",
            edge / peak
        )));
    }

    let scattered = scattered_shape(psi, atom)?;
    let step = psi.axis().step();
    let mut p = Vec::with_capacity(psi.len());
    let mut acc = 0.0f64;
    let mut prev_flux = 0.0f64;
    for (s, o) in psi.samples().iter().zip(scattered.samples()) {
        let flux = s.norm_sqr() - o.norm_sqr();
        // running trapezoid; the leading zero makes p start at the edge
        acc += 0.5 * step * (prev_flux + flux);
        prev_flux = flux;
        p.push(acc);
    }
    let probability = RealEnvelope::new(psi.axis().clone(), p)?;
    let idx = probability.argmax();
    Ok(ExcitationCurve {
        p_max: probability.values()[idx],
        t_peak: probability.axis().point(idx),
        probability,
    })
}
