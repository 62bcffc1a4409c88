//! Numerical simulator of heralded single-photon temporal shaping via
//! nonlocal spectral filtering of time-energy entangled photon pairs.
//!
//! A photon pair is split into a signal and an idler arm; the idler passes a
//! spectral filter and is detected with time resolution. Each detection
//! heralds the signal photon in a conditional temporal shape given by the
//! time-reversed impulse response of the filter, terminated at the herald
//! instant. The crate computes these conditional shapes, heralding
//! probabilities (exact grid integrals, width-ratio estimates, and the
//! stationary closed forms), signal–idler correlation functions, the effect
//! of detector jitter and filter drift, and the excitation of a two-level
//! atom by the shaped photon.
//!
//! Modules:
//! - [`numerics`]: grids, Fourier transforms, convolution, quadrature.
//! - [`sources`]: entangled-pair models and their correlation functions.
//! - [`filters`]: complex spectral filters and causality diagnostics.
//! - [`heralding`]: the shaping engine and regime validation.
//! - [`atom`]: two-level-atom excitation by a shaped photon.
//!
//! All quantities are dimensionless, with times in units of the pair
//! correlation time unless a unit label is attached for I/O.

// validators use `!(x > 0.0)` so that NaN is rejected along with
// non-positive values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod atom;
pub mod error;
pub mod filters;
pub mod heralding;
pub mod numerics;
pub mod sources;

/// The complex sample type used throughout the public API.
pub use num_complex::Complex64;

pub use atom::{excitation_curve, p_max_closed_form, scattered_shape, AtomModel, ExcitationCurve};
pub use error::{Error, Result, Warned, Warning};
pub use filters::{filter_envelope, load_filter_table, CausalityReport, SpectralFilter};
pub use heralding::{
    apply_detector_jitter, apply_filter, apply_filter_via, conditional_shape,
    cw_conditional_envelope, cw_conditional_shape, cw_heralding_probability, g2_cross,
    heralded_spectrum_shift, heralding_probability, heralding_probability_estimate,
    temporal_modulation_rate_estimate, validate_regime, CwHeralding, FilterPath, HeraldResult,
    JointAmplitude, RegimeCondition, RegimeParams, RegimeStatus, TemporalModulationEstimate,
};
pub use numerics::{
    convolve, default_stationary_grid, default_windowed_grid, overlap, to_frequency_domain,
    to_time_domain, ComplexEnvelope, FrequencyGrid, Grid, RealEnvelope, Spectrum, TimeEnvelope,
    UniformAxis,
};
pub use sources::{ideal_joint_amplitude, joint_amplitude, PairModel, SpectralWidths};
