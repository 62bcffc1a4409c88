//! Shared fixtures for the shaping benchmarks.

use photon_shaping::{joint_amplitude, Grid, JointAmplitude, PairModel, SpectralFilter};

/// A reduced windowed scenario: t_u:t_m:t_c = 30:2:1 on a step-h grid.
pub fn windowed_fixture(step: f64) -> (JointAmplitude, SpectralFilter) {
    let model = PairModel::finite_window(1.0, 30.0).expect("valid model");
    let lead = (4.0 / step).round() as i64;
    let count = ((54.0 / step).round() as i64 + 1) as usize;
    let grid = Grid::with_step(-(lead as f64) * step, step, count).expect("valid grid");
    let joint = joint_amplitude(&model, &grid).expect("valid joint amplitude");
    let filter = SpectralFilter::lorentzian(2.0).expect("valid filter");
    (joint, filter)
}
