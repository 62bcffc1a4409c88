//! Stationary (continuous-wave) closed forms: the exact heralding
//! probability, the piecewise conditional shape, and the normalized
//! second-order cross-correlation for the Lorentzian idler filter.

use num_complex::Complex64 as C64;

use crate::numerics::envelope::TimeEnvelope;
use crate::numerics::grid::Grid;

/// Relative distance from t_c = t_m below which the removable-singularity
/// branch takes over.
const SINGULAR_LIMIT: f64 = 1e-6;

/// Exact stationary heralding probability together with its wide-filter
/// asymptote.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CwHeralding {
    /// R = (2t_c⁻¹ + t_m⁻¹) / (t_m (t_c⁻¹ + t_m⁻¹)²) = (2ε+1)/(ε+1)² with
    /// ε = t_m/t_c.
    pub exact: f64,
    /// R ≈ 2t_c/t_m, valid for t_m ≫ t_c.
    pub asymptotic: f64,
}

/// Heralding probability for a stationary pair stream behind a Lorentzian
/// filter of response time `t_m`.
pub fn cw_heralding_probability(t_c: f64, t_m: f64) -> CwHeralding {
    assert!(t_c > 0.0 && t_m > 0.0, "time constants must be positive");
    let epsilon = t_m / t_c;
    CwHeralding {
        exact: (2.0 * epsilon + 1.0) / ((epsilon + 1.0) * (epsilon + 1.0)),
        asymptotic: 2.0 / epsilon,
    }
}

/// Shared rising-side bracket [2 − (1+κ)e^{(1−κ)s/2t_c}]/(1−κ), κ = t_c/t_m,
/// for s = t − t′ ≤ 0. Switches to its analytic limit (1 − s/t_c) when
/// t_c → t_m makes the printed form 0/0.
fn rising_bracket(s: f64, t_c: f64, t_m: f64) -> f64 {
    let kappa = t_c / t_m;
    if (1.0 - kappa).abs() < SINGULAR_LIMIT {
        1.0 - s / t_c
    } else {
        (2.0 - (1.0 + kappa) * ((1.0 - kappa) * s / (2.0 * t_c)).exp()) / (1.0 - kappa)
    }
}

/// Non-normalized heralded shape ψ_s(t|t′) of the stationary model:
///
/// ```text
/// t ≤ t′:  [2 − (1+κ)e^{(1−κ)(t−t′)/2t_c}]/(1−κ) · e^{(t−t′)/2t_m}
/// t > t′:  e^{−(t−t′)/2t_c}
/// ```
///
/// Continuous at the herald instant with value 1; rises on the filter
/// response scale and terminates on the correlation-time scale. The value
/// depends on t − t′ only (stationarity).
pub fn cw_conditional_shape(t: f64, t_prime: f64, t_c: f64, t_m: f64) -> f64 {
    assert!(t_c > 0.0 && t_m > 0.0, "time constants must be positive");
    let s = t - t_prime;
    if s > 0.0 {
        (-s / (2.0 * t_c)).exp()
    } else {
        rising_bracket(s, t_c, t_m) * (s / (2.0 * t_m)).exp()
    }
}

/// The closed-form heralded shape sampled over `grid` for a herald at
/// `t_prime` (raw normalization, ψ(t′) = 1).
pub fn cw_conditional_envelope(grid: &Grid, t_prime: f64, t_c: f64, t_m: f64) -> TimeEnvelope {
    TimeEnvelope::from_fn(grid.clone(), |t| {
        C64::new(cw_conditional_shape(t, t_prime, t_c, t_m), 0.0)
    })
}

/// Normalized second-order signal–idler cross-correlation after filtering,
///
/// g⁽²⁾(t,t′) = 1 + (1/2n̄t_c)·(1 + 2t_m/t_c)⁻¹ · |ψ_s(t|t′)|²,
///
/// with the rising branch carrying e^{(t−t′)/t_m} and the decaying branch
/// e^{−(t−t′)/t_c}. Floor 1 = accidental coincidences; the peak sits at the
/// herald instant and exceeds the floor while n̄·t_m ≪ 1.
pub fn g2_cross(t: f64, t_prime: f64, pair_flux: f64, t_c: f64, t_m: f64) -> f64 {
    assert!(pair_flux > 0.0, "pair flux must be positive");
    assert!(t_c > 0.0 && t_m > 0.0, "time constants must be positive");
    let prefactor = 1.0 / (2.0 * pair_flux * t_c) / (1.0 + 2.0 * t_m / t_c);
    let s = t - t_prime;
    let paired = if s > 0.0 {
        (-s / t_c).exp()
    } else {
        let b = rising_bracket(s, t_c, t_m);
        b * b * (s / t_m).exp()
    };
    1.0 + prefactor * paired
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::grid::UniformAxis;

    #[test]
    fn exact_fractions_of_the_heralding_probability() {
        // ε = 10: 21/121; ε = 1: 3/4; ε = 5: 11/36 (the design point R ≈ 0.3)
        let r10 = cw_heralding_probability(1.0, 10.0);
        assert!((r10.exact - 21.0 / 121.0).abs() < 1e-14);
        assert!((r10.asymptotic - 0.2).abs() < 1e-14);
        let r1 = cw_heralding_probability(1.0, 1.0);
        assert!((r1.exact - 0.75).abs() < 1e-14);
        let r5 = cw_heralding_probability(1.0, 5.0);
        assert!((r5.exact - 11.0 / 36.0).abs() < 1e-14);
        assert!((r5.exact - 0.3).abs() < 0.01);
    }

    #[test]
    fn heralding_probability_scale_invariance() {
        let a = cw_heralding_probability(1.0, 7.3);
        let b = cw_heralding_probability(2.0, 14.6);
        assert!((a.exact - b.exact).abs() < 1e-14);
    }

    #[test]
    fn shape_is_continuous_and_unity_at_the_herald() {
        for (t_c, t_m) in [(1.0, 10.0), (1.0, 2.0), (0.5, 25.0)] {
            let below = cw_conditional_shape(-1e-12, 0.0, t_c, t_m);
            let above = cw_conditional_shape(1e-12, 0.0, t_c, t_m);
            assert!((below - 1.0).abs() < 1e-9, "left limit {below}");
            assert!((above - 1.0).abs() < 1e-9, "right limit {above}");
        }
    }

    #[test]
    fn shape_vanishes_far_before_the_herald() {
        let v = cw_conditional_shape(-400.0, 0.0, 1.0, 10.0);
        assert!(v.abs() < 1e-8, "far tail {v}");
        assert!(cw_conditional_shape(-1e4, 0.0, 1.0, 10.0).abs() < 1e-200);
    }

    #[test]
    fn decay_branch_is_a_pure_correlation_time_exponential() {
        let t_c = 1.0;
        for s in [0.5, 1.0, 3.0] {
            let v = cw_conditional_shape(s, 0.0, t_c, 10.0);
            assert!((v - (-s / (2.0 * t_c)).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn translation_covariance() {
        // dyadic shifts keep t − t′ bit-identical, so equality is exact
        for delta in [-7.5, 0.5, 12.25] {
            let a = cw_conditional_shape(3.0, 5.0, 1.0, 10.0);
            let b = cw_conditional_shape(3.0 + delta, 5.0 + delta, 1.0, 10.0);
            assert_eq!(a, b, "shape must depend on t − t′ only");
        }
    }

    #[test]
    fn singular_limit_matches_the_exact_branch_nearby() {
        // at |1 − t_c/t_m| = 1e−3 the printed branch is still finite; the
        // series limit must agree with it to O(1e−3) relative
        let t_c = 1.0;
        for t_m in [1.0 / (1.0 - 1e-3), 1.0 / (1.0 + 1e-3)] {
            for s in [-5.0, -2.0, -0.5, -0.1] {
                let exact = cw_conditional_shape(s, 0.0, t_c, t_m);
                let limit = (1.0 - s / t_c) * (s / (2.0 * t_m)).exp();
                assert!(
                    ((exact - limit) / exact).abs() < 5e-3,
                    "s={s}, t_m={t_m}: exact {exact} vs limit {limit}"
                );
            }
        }
        // inside the switch window the limit branch is used and stays finite
        let v = cw_conditional_shape(-2.0, 0.0, 1.0, 1.0 + 1e-9);
        assert!((v - 3.0 * (-1.0_f64).exp()).abs() < 1e-6);
    }

    #[test]
    fn g2_peak_value_and_floor() {
        // n̄·t_c = 0.01, t_m = 10·t_c: peak = 1 + (1/0.02)·(1/21)
        let peak = g2_cross(0.0, 0.0, 0.01, 1.0, 10.0);
        let expect = 1.0 + 50.0 / 21.0;
        assert!((peak - expect).abs() < 1e-12, "peak {peak}");
        // both floors
        assert!((g2_cross(300.0, 0.0, 0.01, 1.0, 10.0) - 1.0).abs() < 1e-12);
        assert!((g2_cross(-300.0, 0.0, 0.01, 1.0, 10.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn g2_matches_one_plus_scaled_shape_intensity() {
        let (n, t_c, t_m) = (0.02, 1.0, 8.0);
        let a = 1.0 / (2.0 * n * t_c) / (1.0 + 2.0 * t_m / t_c);
        for s in [-30.0, -5.0, -1.0, 0.0, 0.7, 4.0] {
            let psi = cw_conditional_shape(s, 0.0, t_c, t_m);
            let expect = 1.0 + a * psi * psi;
            let got = g2_cross(s, 0.0, n, t_c, t_m);
            assert!(
                ((got - expect) / expect).abs() < 1e-12,
                "s={s}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn g2_peak_needs_low_flux_per_response_time() {
        // n̄·t_m ≪ 1 ⇒ peak ≫ 1; n̄·t_m ~ 1 ⇒ peak ~ 1
        let low = g2_cross(0.0, 0.0, 0.001, 1.0, 10.0);
        assert!(low > 20.0, "low flux peak {low}");
        let high = g2_cross(0.0, 0.0, 0.099, 1.0, 10.0);
        assert!(high < 1.5, "high flux peak {high}");
    }

    #[test]
    fn g2_never_drops_below_the_accidental_floor() {
        for s in (-200..=200).map(|k| k as f64 * 0.37) {
            let v = g2_cross(s, 0.0, 0.01, 1.0, 10.0);
            assert!(v >= 1.0 - 1e-12, "g2({s}) = {v}");
        }
    }

    #[test]
    fn envelope_sampling_matches_the_scalar_form() {
        let grid = Grid::new(-50.0, 10.0, 601).unwrap();
        let env = cw_conditional_envelope(&grid, -3.0, 1.0, 10.0);
        for (i, v) in env.samples().iter().enumerate() {
            let t = grid.point(i);
            assert_eq!(v.re, cw_conditional_shape(t, -3.0, 1.0, 10.0));
            assert_eq!(v.im, 0.0);
        }
    }
}
