//! Linear convolution of time envelopes with continuum normalization.

use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::numerics::envelope::TimeEnvelope;
use crate::numerics::grid::{Grid, UniformAxis};

/// Linear convolution (a ⊛ b)(t) = ∫ a(u) b(t − u) du on a shared step.
///
/// The result spans `a.count + b.count − 1` samples starting at the sum of
/// the two origins; each sum is multiplied by the step so the output
/// approximates the continuum integral. Commutative by construction.
pub fn convolve(a: &TimeEnvelope, b: &TimeEnvelope) -> Result<TimeEnvelope> {
    let step = a.axis().step();
    if (step - b.axis().step()).abs() > 1e-12 * step {
        return Err(Error::GridMismatch(format!(
            "convolution needs equal steps, got {} and {}",
            step,
            b.axis().step()
        )));
    }
    let out_len = a.len() + b.len() - 1;
    let origin = a.axis().origin() + b.axis().origin();
    let grid = Grid::with_step(origin, step, out_len)?;

    let raw = if out_len <= 256 {
        convolve_direct(a.samples(), b.samples())
    } else {
        convolve_fft(a.samples(), b.samples())
    };
    let samples = raw.into_iter().map(|v| v * step).collect();
    TimeEnvelope::new(grid, samples)
}

/// Plain O(n·m) linear convolution of sample vectors (no step factor).
pub(crate) fn convolve_direct(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.norm_sqr() == 0.0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// FFT-based linear convolution of sample vectors (no step factor).
/// Identical to [`convolve_direct`] up to floating-point rounding.
pub(crate) fn convolve_fft(a: &[C64], b: &[C64]) -> Vec<C64> {
    let out_len = a.len() + b.len() - 1;
    let m = out_len.next_power_of_two();
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(m);
    let inv = planner.plan_fft_inverse(m);

    let mut fa = vec![C64::new(0.0, 0.0); m];
    fa[..a.len()].copy_from_slice(a);
    let mut fb = vec![C64::new(0.0, 0.0); m];
    fb[..b.len()].copy_from_slice(b);
    fwd.process(&mut fa);
    fwd.process(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    inv.process(&mut fa);
    let scale = 1.0 / m as f64;
    fa.truncate(out_len);
    for v in &mut fa {
        *v *= scale;
    }
    fa
}
