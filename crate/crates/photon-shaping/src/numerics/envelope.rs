//! Complex and real sample envelopes over a uniform axis.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::numerics::grid::{FrequencyGrid, Grid, UniformAxis};

/// Complex amplitude samples over a uniform axis (a photon wave-packet shape,
/// an impulse response, or a spectral transmission).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexEnvelope<A: UniformAxis> {
    axis: A,
    samples: Vec<C64>,
}

/// A time-domain envelope.
pub type TimeEnvelope = ComplexEnvelope<Grid>;
/// A frequency-domain envelope.
pub type Spectrum = ComplexEnvelope<FrequencyGrid>;

impl<A: UniformAxis> ComplexEnvelope<A> {
    pub fn new(axis: A, samples: Vec<C64>) -> Result<Self> {
        if samples.len() != axis.count() {
            return Err(Error::InvalidArgument(format!(
                "envelope needs {} samples, got {}",
                axis.count(),
                samples.len()
            )));
        }
        Ok(Self { axis, samples })
    }

    /// Sample a function over the axis.
    pub fn from_fn(axis: A, f: impl Fn(f64) -> C64) -> Self {
        let samples = (0..axis.count()).map(|i| f(axis.point(i))).collect();
        Self { axis, samples }
    }

    /// Sample a real-valued function over the axis.
    pub fn from_real_fn(axis: A, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(axis, |x| C64::new(f(x), 0.0))
    }

    pub fn axis(&self) -> &A {
        &self.axis
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [C64] {
        &mut self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Trapezoidal L² norm: sqrt(∫|f|² dx).
    pub fn l2_norm(&self) -> f64 {
        self.l2_norm_sq().sqrt()
    }

    /// Trapezoidal ∫|f|² dx.
    pub fn l2_norm_sq(&self) -> f64 {
        trapezoid_weighted_sum(self.samples.len(), self.axis.step(), |i| {
            self.samples[i].norm_sqr()
        })
    }

    /// Trapezoidal ∫f dx.
    pub fn integral(&self) -> C64 {
        let re = trapezoid_weighted_sum(self.samples.len(), self.axis.step(), |i| {
            self.samples[i].re
        });
        let im = trapezoid_weighted_sum(self.samples.len(), self.axis.step(), |i| {
            self.samples[i].im
        });
        C64::new(re, im)
    }

    /// Unit-L²-normalized copy. Errors on an (effectively) zero envelope.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.l2_norm();
        if n < 1e-150 {
            return Err(Error::InvalidArgument(
                "cannot normalize an envelope with zero norm".into(),
            ));
        }
        Ok(self.scaled(C64::new(1.0 / n, 0.0)))
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            axis: self.axis.clone(),
            samples: self.samples.iter().map(|s| s * factor).collect(),
        }
    }

    /// Pointwise sum; both envelopes must share the axis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.axis.same_axis(&other.axis) {
            return Err(Error::GridMismatch("envelope sum needs identical axes".into()));
        }
        Ok(Self {
            axis: self.axis.clone(),
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// |f|² as a real envelope.
    pub fn intensity(&self) -> RealEnvelope<A> {
        RealEnvelope {
            axis: self.axis.clone(),
            values: self.samples.iter().map(|s| s.norm_sqr()).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }
}

impl TimeEnvelope {
    /// Copy shifted by an integer number of samples (positive = later times),
    /// zero-filled at the exposed edge. Used for translated-shape overlaps.
    pub fn shifted_samples(&self, offset: i64) -> Self {
        let n = self.samples.len() as i64;
        let samples = (0..n)
            .map(|i| {
                let j = i - offset;
                if j >= 0 && j < n {
                    self.samples[j as usize]
                } else {
                    C64::new(0.0, 0.0)
                }
            })
            .collect();
        Self { axis: self.axis.clone(), samples }
    }
}

/// Inner product ⟨a|b⟩ = ∫ conj(a)·b dx (trapezoidal). For unit-norm inputs
/// |⟨a|b⟩| ≤ 1 up to quadrature tolerance.
pub fn overlap<A: UniformAxis>(a: &ComplexEnvelope<A>, b: &ComplexEnvelope<A>) -> Result<C64> {
    if !a.axis.same_axis(&b.axis) {
        return Err(Error::GridMismatch("overlap needs identical axes".into()));
    }
    let re = trapezoid_weighted_sum(a.samples.len(), a.axis.step(), |i| {
        (a.samples[i].conj() * b.samples[i]).re
    });
    let im = trapezoid_weighted_sum(a.samples.len(), a.axis.step(), |i| {
        (a.samples[i].conj() * b.samples[i]).im
    });
    Ok(C64::new(re, im))
}

/// Real sample values over a uniform axis (intensities, marginals,
/// excitation probabilities).
#[derive(Debug, Clone, PartialEq)]
pub struct RealEnvelope<A: UniformAxis = Grid> {
    axis: A,
    values: Vec<f64>,
}

impl<A: UniformAxis> RealEnvelope<A> {
    pub fn new(axis: A, values: Vec<f64>) -> Result<Self> {
        if values.len() != axis.count() {
            return Err(Error::InvalidArgument(format!(
                "real envelope needs {} samples, got {}",
                axis.count(),
                values.len()
            )));
        }
        Ok(Self { axis, values })
    }

    pub fn from_fn(axis: A, f: impl Fn(f64) -> f64) -> Self {
        let values = (0..axis.count()).map(|i| f(axis.point(i))).collect();
        Self { axis, values }
    }

    pub fn axis(&self) -> &A {
        &self.axis
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Trapezoidal ∫f dx.
    pub fn integral(&self) -> f64 {
        trapezoid_weighted_sum(self.values.len(), self.axis.step(), |i| self.values[i])
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, v) in self.values.iter().enumerate() {
            if *v > self.values[best] {
                best = i;
            }
        }
        best
    }

    /// Axis position of the maximum.
    pub fn peak_position(&self) -> f64 {
        self.axis.point(self.argmax())
    }

    /// Copy rescaled to unit maximum (figure normalization).
    pub fn normalized_to_unit_max(&self) -> Result<Self> {
        let m = self.max();
        if !(m > 0.0) {
            return Err(Error::InvalidArgument(
                "cannot rescale an envelope with non-positive maximum".into(),
            ));
        }
        Ok(Self {
            axis: self.axis.clone(),
            values: self.values.iter().map(|v| v / m).collect(),
        })
    }

    /// Normalized inner product of two profiles on the same axis:
    /// ⟨a,b⟩ / (‖a‖·‖b‖). Equals 1 for proportional profiles.
    pub fn fidelity(&self, other: &Self) -> Result<f64> {
        if !self.axis.same_axis(&other.axis) {
            return Err(Error::GridMismatch("fidelity needs identical axes".into()));
        }
        let step = self.axis.step();
        let n = self.values.len();
        let dot = trapezoid_weighted_sum(n, step, |i| self.values[i] * other.values[i]);
        let na = trapezoid_weighted_sum(n, step, |i| self.values[i] * self.values[i]).sqrt();
        let nb = trapezoid_weighted_sum(n, step, |i| other.values[i] * other.values[i]).sqrt();
        if na < 1e-150 || nb < 1e-150 {
            return Err(Error::InvalidArgument("fidelity of a zero profile".into()));
        }
        Ok(dot / (na * nb))
    }

    /// Intensity-weighted centroid ∫x·f dx / ∫f dx.
    pub fn centroid(&self) -> f64 {
        let step = self.axis.step();
        let n = self.values.len();
        let num =
            trapezoid_weighted_sum(n, step, |i| self.axis.point(i) * self.values[i]);
        let den = trapezoid_weighted_sum(n, step, |i| self.values[i]);
        num / den
    }

    /// Full extent over which the profile exceeds peak/e, with linear
    /// interpolation of the two crossings. This is the single width
    /// convention used for all characteristic-width measurements.
    pub fn e_inv_width(&self) -> f64 {
        let peak_idx = self.argmax();
        let threshold = self.values[peak_idx] / std::f64::consts::E;
        let step = self.axis.step();

        // walk left from the peak to the crossing
        let mut left = self.axis.point(0);
        for i in (0..peak_idx).rev() {
            if self.values[i] < threshold {
                let frac = (threshold - self.values[i]) / (self.values[i + 1] - self.values[i]);
                left = self.axis.point(i) + frac * step;
                break;
            }
        }
        // walk right
        let mut right = self.axis.last();
        for i in peak_idx + 1..self.values.len() {
            if self.values[i] < threshold {
                let frac =
                    (threshold - self.values[i - 1]) / (self.values[i] - self.values[i - 1]);
                right = self.axis.point(i - 1) + frac * step;
                break;
            }
        }
        right - left
    }
}

/// Trapezoidal weighted sum: step · (x₀/2 + x₁ + … + x_{n−2} + x_{n−1}/2).
pub(crate) fn trapezoid_weighted_sum(n: usize, step: f64, f: impl Fn(usize) -> f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if n == 1 {
        return 0.0;
    }
    let mut acc = 0.5 * (f(0) + f(n - 1));
    for i in 1..n - 1 {
        acc += f(i);
    }
    acc * step
}
