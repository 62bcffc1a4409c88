//! Models of time-energy entangled photon-pair resources.
//!
//! Three resources are covered: the idealized perfectly correlated pair
//! (diagonal joint amplitude), the finite-window double-exponential pair
//! Ψ(t,t′) ∝ e^{−|t−t′|/2t_c} on 0 ≤ t,t′ ≤ t_u, and the stationary
//! continuous-wave field characterized by its first-order auto- and
//! cross-correlation functions.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::heralding::JointAmplitude;
use crate::numerics::grid::{Grid, UniformAxis};

/// An entangled photon-pair resource.
#[derive(Debug, Clone, PartialEq)]
pub enum PairModel {
    /// Perfectly time-correlated pair, kept at grid resolution as a diagonal
    /// ridge one sample wide; the t_c → 0 limit reference.
    IdealCorrelated,
    /// Double-exponential pair confined to a hard window of duration
    /// `window`: Ψ(t,t′) ∝ e^{−|t−t′|/2·correlation_time} on [0, window]².
    FiniteWindowExponential {
        correlation_time: f64,
        window: f64,
    },
    /// Stationary continuous-wave pair stream with mean pair flux
    /// `pair_flux` and correlation time `correlation_time`.
    StationaryCw {
        pair_flux: f64,
        correlation_time: f64,
    },
}

impl PairModel {
    pub fn finite_window(correlation_time: f64, window: f64) -> Result<Self> {
        if !(correlation_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "correlation time must be positive, got {correlation_time}"
            )));
        }
        if !(window > correlation_time) {
            return Err(Error::InvalidArgument(format!(
                "window {window} must exceed the correlation time {correlation_time}"
            )));
        }
        Ok(Self::FiniteWindowExponential { correlation_time, window })
    }

    pub fn stationary_cw(pair_flux: f64, correlation_time: f64) -> Result<Self> {
        if !(correlation_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "correlation time must be positive, got {correlation_time}"
            )));
        }
        if !(pair_flux >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "pair flux must be non-negative, got {pair_flux}"
            )));
        }
        if pair_flux * correlation_time >= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "low-pump regime requires pair_flux·t_c < 1, got {}",
                pair_flux * correlation_time
            )));
        }
        Ok(Self::StationaryCw { pair_flux, correlation_time })
    }

    pub fn correlation_time(&self) -> Option<f64> {
        match self {
            Self::IdealCorrelated => None,
            Self::FiniteWindowExponential { correlation_time, .. }
            | Self::StationaryCw { correlation_time, .. } => Some(*correlation_time),
        }
    }

    /// First-order auto-correlation of the stationary field:
    /// G⁽¹⁾(Δ) = n̄ e^{−|Δ|/2t_c}(1 + |Δ|/2t_c). Even in Δ; G⁽¹⁾(0) = n̄.
    pub fn g1_auto(&self, dt: f64) -> Result<f64> {
        let Self::StationaryCw { pair_flux, correlation_time } = self else {
            return Err(Error::InvalidArgument(
                "auto-correlation is defined for the stationary model only".into(),
            ));
        };
        let x = dt.abs() / (2.0 * correlation_time);
        Ok(pair_flux * (-x).exp() * (1.0 + x))
    }

    /// First-order signal-idler cross-correlation of the stationary field:
    /// G_si⁽¹⁾(Δ) = √(n̄/2t_c) e^{−|Δ|/2t_c}.
    pub fn g1_cross(&self, dt: f64) -> Result<f64> {
        let Self::StationaryCw { pair_flux, correlation_time } = self else {
            return Err(Error::InvalidArgument(
                "cross-correlation is defined for the stationary model only".into(),
            ));
        };
        let x = dt.abs() / (2.0 * correlation_time);
        Ok((pair_flux / (2.0 * correlation_time)).sqrt() * (-x).exp())
    }
}

/// Characteristic spectral widths of a pair resource under the fixed
/// convention ω_u·t_c = 1 and ω_c·t_u = 1 (order-of-magnitude bookkeeping;
/// the stationary model uses t_u = 1/n̄).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralWidths {
    /// Unconditional bandwidth ≈ 1/t_c.
    pub omega_u: f64,
    /// Conditional bandwidth ≈ 1/t_u.
    pub omega_c: f64,
}

impl SpectralWidths {
    pub fn of(model: &PairModel) -> Option<Self> {
        match model {
            PairModel::IdealCorrelated => None,
            PairModel::FiniteWindowExponential { correlation_time, window } => Some(Self {
                omega_u: 1.0 / correlation_time,
                omega_c: 1.0 / window,
            }),
            PairModel::StationaryCw { pair_flux, correlation_time } => Some(Self {
                omega_u: 1.0 / correlation_time,
                omega_c: *pair_flux,
            }),
        }
    }
}

/// Joint temporal amplitude of a single pair on `grid` × `grid`,
/// unit-normalized. Dispatches on the model; the stationary model has no
/// finite joint amplitude and is rejected.
pub fn joint_amplitude(model: &PairModel, grid: &Grid) -> Result<JointAmplitude> {
    match model {
        PairModel::IdealCorrelated => ideal_joint_amplitude(grid),
        PairModel::FiniteWindowExponential { correlation_time, window } => {
            windowed_joint_amplitude(*correlation_time, *window, grid)
        }
        PairModel::StationaryCw { .. } => Err(Error::InvalidArgument(
            "the stationary model is described by correlation functions, not a \
             finite joint amplitude; use the closed-form heralding operations"
                .into(),
        )),
    }
}

fn windowed_joint_amplitude(t_c: f64, t_u: f64, grid: &Grid) -> Result<JointAmplitude> {
    if grid.step() > t_c / 4.0 {
        return Err(Error::Resolution(format!(
            "grid step {} is too coarse for correlation time {t_c}; use step ≤ t_c/4 \
             (t_c/8 recommended)",
            grid.step()
        )));
    }
    if !(grid.contains(0.0) && grid.contains(t_u)) {
        return Err(Error::Containment(format!(
            "grid [{}, {}] must contain the pair window [0, {t_u}] plus margin \
             for the filter response",
            grid.origin(),
            grid.last()
        )));
    }
    let n = grid.count();
    let mut samples = ndarray::Array2::<C64>::zeros((n, n));
    let inv = 1.0 / (2.0 * t_c);
    for r in 0..n {
        let t = grid.point(r);
        if !(0.0..=t_u).contains(&t) {
            continue;
        }
        for c in 0..n {
            let t_i = grid.point(c);
            if (0.0..=t_u).contains(&t_i) {
                samples[[r, c]] = C64::new((-(t - t_i).abs() * inv).exp(), 0.0);
            }
        }
    }
    JointAmplitude::new_normalized(grid.clone(), grid.clone(), samples)
}

/// Perfectly correlated pair at grid resolution: a Kronecker-delta ridge
/// Ψ(t,t′) = δ_{t,t′}/√(step²·count), unit-normalized.
pub fn ideal_joint_amplitude(grid: &Grid) -> Result<JointAmplitude> {
    let n = grid.count();
    let mut samples = ndarray::Array2::<C64>::zeros((n, n));
    let amp = 1.0 / (grid.step() * (n as f64).sqrt());
    for k in 0..n {
        samples[[k, k]] = C64::new(amp, 0.0);
    }
    JointAmplitude::new_normalized(grid.clone(), grid.clone(), samples)
}
