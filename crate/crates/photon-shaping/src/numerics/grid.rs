//! Uniform sampling axes in time and angular frequency.
//!
//! All internal times are dimensionless (units of the pair correlation time
//! unless a physical unit label is attached for I/O). Frequencies are counted
//! relative to the field's central frequency.

use crate::error::{Error, Result};

/// Uniform time axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    origin: f64,
    step: f64,
    count: usize,
    unit_label: Option<String>,
}

/// Uniform angular-frequency axis, dual to a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    origin: f64,
    step: f64,
    count: usize,
}

/// Shared behaviour of the two axis types. Implemented for [`Grid`] and
/// [`FrequencyGrid`] so envelopes can be generic over the domain.
pub trait UniformAxis: Clone + PartialEq {
    fn origin(&self) -> f64;
    fn step(&self) -> f64;
    fn count(&self) -> usize;

    fn point(&self, index: usize) -> f64 {
        self.origin() + self.step() * index as f64
    }

    fn last(&self) -> f64 {
        self.point(self.count() - 1)
    }

    fn span(&self) -> f64 {
        self.step() * (self.count() - 1) as f64
    }

    fn points(&self) -> Vec<f64> {
        (0..self.count()).map(|i| self.point(i)).collect()
    }

    /// Index of the sample nearest to `x`, clamped to the axis.
    fn nearest_index(&self, x: f64) -> usize {
        let raw = ((x - self.origin()) / self.step()).round();
        if raw <= 0.0 {
            0
        } else {
            (raw as usize).min(self.count() - 1)
        }
    }

    fn contains(&self, x: f64) -> bool {
        x >= self.origin() - 1e-12 * self.step() && x <= self.last() + 1e-12 * self.step()
    }

    /// True when two axes coincide sample-for-sample.
    fn same_axis(&self, other: &Self) -> bool {
        self.count() == other.count()
            && (self.step() - other.step()).abs() <= 1e-12 * self.step()
            && (self.origin() - other.origin()).abs() <= 1e-9 * self.step()
    }
}

fn validate(span: f64, count: usize) -> Result<f64> {
    if count < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid needs at least 2 samples, got {count}"
        )));
    }
    if !(span > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "grid span must be positive, got {span}"
        )));
    }
    Ok(span / (count - 1) as f64)
}

impl Grid {
    /// Uniform grid from `t_min` to `t_max` inclusive with `count` samples.
    pub fn new(t_min: f64, t_max: f64, count: usize) -> Result<Self> {
        let step = validate(t_max - t_min, count)?;
        Ok(Self { origin: t_min, step, count, unit_label: None })
    }

    /// Grid from an origin and an explicit step.
    pub fn with_step(origin: f64, step: f64, count: usize) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "grid step must be positive, got {step}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least 2 samples, got {count}"
            )));
        }
        Ok(Self { origin, step, count, unit_label: None })
    }

    /// Grid of `count` samples with origin −(count/2)·step, step
    /// 2·half_width/count, so that 0 lands on a sample and the axis is its
    /// own dual's dual.
    pub fn centered(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "half width must be positive, got {half_width}"
            )));
        }
        let step = 2.0 * half_width / count as f64;
        Self::with_step(-step * (count / 2) as f64, step, count)
    }

    pub fn unit_label(&self) -> Option<&str> {
        self.unit_label.as_deref()
    }

    pub fn with_unit_label(mut self, label: impl Into<String>) -> Self {
        self.unit_label = Some(label.into());
        self
    }

    /// Centered dual frequency axis: step 2π/(step·count), origin −⌊n/2⌋·step.
    pub fn dual(&self) -> FrequencyGrid {
        let step = 2.0 * std::f64::consts::PI / (self.step * self.count as f64);
        FrequencyGrid {
            origin: -step * (self.count / 2) as f64,
            step,
            count: self.count,
        }
    }
}

impl FrequencyGrid {
    pub fn new(omega_min: f64, omega_max: f64, count: usize) -> Result<Self> {
        let step = validate(omega_max - omega_min, count)?;
        Ok(Self { origin: omega_min, step, count })
    }

    pub fn with_step(origin: f64, step: f64, count: usize) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "frequency step must be positive, got {step}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidArgument(format!(
                "frequency grid needs at least 2 samples, got {count}"
            )));
        }
        Ok(Self { origin, step, count })
    }

    /// Frequency axis of `count` samples with origin −(count/2)·step and
    /// step 2·half_width/count: zero frequency lands on a sample and the
    /// axis round-trips through `dual()` exactly.
    pub fn centered(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "half width must be positive, got {half_width}"
            )));
        }
        let step = 2.0 * half_width / count as f64;
        Self::with_step(-step * (count / 2) as f64, step, count)
    }

    /// Centered dual time axis.
    pub fn dual(&self) -> Grid {
        let step = 2.0 * std::f64::consts::PI / (self.step * self.count as f64);
        Grid {
            origin: -step * (self.count / 2) as f64,
            step,
            count: self.count,
            unit_label: None,
        }
    }
}

impl UniformAxis for Grid {
    fn origin(&self) -> f64 {
        self.origin
    }
    fn step(&self) -> f64 {
        self.step
    }
    fn count(&self) -> usize {
        self.count
    }
}

impl UniformAxis for FrequencyGrid {
    fn origin(&self) -> f64 {
        self.origin
    }
    fn step(&self) -> f64 {
        self.step
    }
    fn count(&self) -> usize {
        self.count
    }
}

/// Default grid for the finite-window pair model: step t_c/8, window
/// [0, t_u] with a short lead-in and a 10·t_m tail for the filtered idler.
/// The origin is snapped so that t = 0 and t = t_u land on samples.
pub fn default_windowed_grid(window: f64, correlation_time: f64, response_time: f64) -> Result<Grid> {
    if !(window > 0.0 && correlation_time > 0.0 && response_time > 0.0) {
        return Err(Error::InvalidArgument(
            "window, correlation and response times must be positive".into(),
        ));
    }
    let step = correlation_time / 8.0;
    let lead = (2.0 * response_time / step).ceil() as i64;
    let tail = ((window + 10.0 * response_time) / step).ceil() as i64;
    Grid::with_step(-(lead as f64) * step, step, (lead + tail + 1) as usize)
}

/// Default grid for stationary models: step t_c/8, window 16·(t_m + t_c)
/// centered on the herald instant (which lands on a sample).
pub fn default_stationary_grid(
    herald_instant: f64,
    correlation_time: f64,
    response_time: f64,
) -> Result<Grid> {
    if !(correlation_time > 0.0 && response_time > 0.0) {
        return Err(Error::InvalidArgument(
            "correlation and response times must be positive".into(),
        ));
    }
    let step = correlation_time / 8.0;
    let half = (8.0 * (response_time + correlation_time) / step).ceil() as i64;
    Grid::with_step(
        herald_instant - half as f64 * step,
        step,
        (2 * half + 1) as usize,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_grid() {
        let g = Grid::new(0.0, 1.0, 2).unwrap();
        assert_eq!(g.origin(), 0.0);
        assert_eq!(g.step(), 1.0);
        assert_eq!(g.count(), 2);
    }

    #[test]
    fn step_is_span_over_count_minus_one() {
        let g = Grid::new(-50.0, 200.0, 4096).unwrap();
        assert!((g.step() - 250.0 / 4095.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_span_rejected() {
        assert!(Grid::new(0.0, 0.0, 10).is_err());
        assert!(Grid::new(1.0, 0.0, 10).is_err());
        assert!(Grid::new(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn dual_round_trip_preserves_axis() {
        let g = Grid::centered(8.0, 128).unwrap();
        let f = g.dual();
        let back = f.dual();
        assert!(back.same_axis(&g), "dual of dual should recover the grid");
        // spectral step satisfies dω = 2π/(dt·n)
        let expect = 2.0 * std::f64::consts::PI / (g.step() * g.count() as f64);
        assert!((f.step() - expect).abs() < 1e-15);
    }

    #[test]
    fn nearest_index_snaps_and_clamps() {
        let g = Grid::new(0.0, 10.0, 11).unwrap();
        assert_eq!(g.nearest_index(3.4), 3);
        assert_eq!(g.nearest_index(3.6), 4);
        assert_eq!(g.nearest_index(-5.0), 0);
        assert_eq!(g.nearest_index(50.0), 10);
    }

    #[test]
    fn default_windowed_grid_hits_window_edges() {
        let g = default_windowed_grid(150.0, 1.0, 10.0).unwrap();
        let i0 = g.nearest_index(0.0);
        let iu = g.nearest_index(150.0);
        assert!((g.point(i0) - 0.0).abs() < 1e-12);
        assert!((g.point(iu) - 150.0).abs() < 1e-9);
        assert!(g.origin() <= -2.0 * 10.0);
        assert!(g.last() >= 150.0 + 10.0 * 10.0);
        assert!(g.step() <= 1.0 / 8.0 + 1e-15);
    }
}
