//! Numerical substrate: uniform grids, envelopes, Fourier transforms under
//! the fixed sign convention, linear convolution, and quadrature.
//!
//! Everything here is a pure function of immutable value inputs and safe to
//! call concurrently.

pub mod convolve;
pub mod envelope;
pub mod fourier;
pub mod grid;

pub use convolve::convolve;
pub use envelope::{overlap, ComplexEnvelope, RealEnvelope, Spectrum, TimeEnvelope};
pub use fourier::{to_frequency_domain, to_time_domain, ALIASING_EDGE_THRESHOLD};
pub use grid::{
    default_stationary_grid, default_windowed_grid, FrequencyGrid, Grid, UniformAxis,
};
