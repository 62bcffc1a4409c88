//! Property-based invariants of the numerical substrate and the physics
//! operations.

use num_complex::Complex64 as C64;
use proptest::prelude::*;

use photon_shaping::{
    cw_conditional_shape, cw_heralding_probability, excitation_curve, filter_envelope, g2_cross,
    overlap, to_frequency_domain, to_time_domain, AtomModel, Grid, PairModel,
    Spectrum, SpectralFilter, TimeEnvelope, UniformAxis,
};

fn complex_samples(len: usize) -> impl Strategy<Value = Vec<C64>> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), len..=len)
        .prop_map(|v| v.into_iter().map(|(re, im)| C64::new(re, im)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn convolution_commutes(
        a in complex_samples(48),
        b in complex_samples(31),
        origin_a in -5.0..5.0f64,
        origin_b in -5.0..5.0f64,
    ) {
        let step = 0.1;
        let ga = Grid::with_step(origin_a, step, a.len()).unwrap();
        let gb = Grid::with_step(origin_b, step, b.len()).unwrap();
        let ea = TimeEnvelope::new(ga, a).unwrap();
        let eb = TimeEnvelope::new(gb, b).unwrap();
        let ab = photon_shaping::convolve(&ea, &eb).unwrap();
        let ba = photon_shaping::convolve(&eb, &ea).unwrap();
        prop_assert!(ab.axis().same_axis(ba.axis()));
        let scale = ab.max_abs().max(1e-12);
        for (x, y) in ab.samples().iter().zip(ba.samples()) {
            prop_assert!((x - y).norm() < 1e-10 * scale);
        }
    }

    #[test]
    fn convolution_is_linear(
        a in complex_samples(40),
        b in complex_samples(40),
        c in complex_samples(25),
        alpha in -2.0..2.0f64,
        beta in -2.0..2.0f64,
    ) {
        let step = 0.25;
        let g_ab = Grid::with_step(0.0, step, 40).unwrap();
        let g_c = Grid::with_step(-1.0, step, 25).unwrap();
        let ea = TimeEnvelope::new(g_ab.clone(), a).unwrap();
        let eb = TimeEnvelope::new(g_ab, b).unwrap();
        let ec = TimeEnvelope::new(g_c, c).unwrap();
        let combo = ea.scaled(C64::new(alpha, 0.0)).add(&eb.scaled(C64::new(beta, 0.0))).unwrap();
        let lhs = photon_shaping::convolve(&combo, &ec).unwrap();
        let ca = photon_shaping::convolve(&ea, &ec).unwrap();
        let cb = photon_shaping::convolve(&eb, &ec).unwrap();
        let rhs = ca.scaled(C64::new(alpha, 0.0)).add(&cb.scaled(C64::new(beta, 0.0))).unwrap();
        let scale = lhs.max_abs().max(1e-12);
        for (x, y) in lhs.samples().iter().zip(rhs.samples()) {
            prop_assert!((x - y).norm() < 1e-9 * scale);
        }
    }

    #[test]
    fn fourier_round_trip_on_band_limited_spectra(
        width in 0.05..0.5f64,
        center in -6.0..6.0f64,
        chirp in -0.5..0.5f64,
    ) {
        let fgrid = photon_shaping::FrequencyGrid::centered(40.0, 1024).unwrap();
        let spec = Spectrum::from_fn(fgrid, |w| {
            C64::from_polar((-width * (w - center) * (w - center)).exp(), chirp * w)
        });
        let back = to_frequency_domain(&to_time_domain(&spec).into_value());
        prop_assert!(back.axis().same_axis(spec.axis()));
        let mut diff = 0.0;
        let mut norm = 0.0;
        for (x, y) in back.samples().iter().zip(spec.samples()) {
            diff += (x - y).norm_sqr();
            norm += y.norm_sqr();
        }
        prop_assert!((diff / norm).sqrt() < 1e-10);
    }

    #[test]
    fn parseval_holds_between_domains(
        width in 0.2..2.0f64,
        center in -8.0..8.0f64,
        phase in -3.0..3.0f64,
    ) {
        let grid = Grid::centered(32.0, 2048).unwrap();
        let env = TimeEnvelope::from_fn(grid, |t| {
            C64::from_polar((-(t - center) * (t - center) / (2.0 * width * width)).exp(), phase * t)
        });
        let spec = to_frequency_domain(&env);
        let te = env.l2_norm_sq();
        let fe = spec.l2_norm_sq() / (2.0 * std::f64::consts::PI);
        prop_assert!(((te - fe) / te).abs() < 1e-10);
    }

    #[test]
    fn unit_norm_overlap_is_bounded(
        a in complex_samples(64),
        b in complex_samples(64),
    ) {
        let grid = Grid::with_step(0.0, 0.2, 64).unwrap();
        let ea = TimeEnvelope::new(grid.clone(), a).unwrap();
        let eb = TimeEnvelope::new(grid, b).unwrap();
        prop_assume!(ea.l2_norm() > 1e-6 && eb.l2_norm() > 1e-6);
        let o = overlap(&ea.normalized().unwrap(), &eb.normalized().unwrap()).unwrap();
        prop_assert!(o.norm() <= 1.0 + 1e-9);
    }

    #[test]
    fn filters_never_amplify(
        samples in complex_samples(200),
        t_m in 0.4..4.0f64,
        drift in -1.0..1.0f64,
    ) {
        let grid = Grid::with_step(0.0, 0.02, 200).unwrap();
        let env = TimeEnvelope::new(grid, samples).unwrap();
        let filter = SpectralFilter::lorentzian(t_m).unwrap().with_drift(drift);
        let out = filter_envelope(&filter, &env).unwrap();
        prop_assert!(out.l2_norm_sq() <= env.l2_norm_sq() * (1.0 + 1e-9));
    }

    #[test]
    fn stationary_correlators_decay_symmetrically(
        flux in 0.001..0.4f64,
        t_c in 0.3..3.0f64,
        dt in 0.0..20.0f64,
    ) {
        prop_assume!(flux * t_c < 0.95); // low-pump model bound
        let model = PairModel::stationary_cw(flux, t_c).unwrap();
        prop_assert_eq!(model.g1_auto(dt).unwrap(), model.g1_auto(-dt).unwrap());
        prop_assert!(model.g1_auto(dt).unwrap() <= model.g1_auto(0.0).unwrap() + 1e-15);
        prop_assert!(model.g1_cross(dt).unwrap() <= model.g1_cross(0.0).unwrap() + 1e-15);
    }

    #[test]
    fn cw_heralding_probability_decreases_with_epsilon(
        eps_lo in 0.1..50.0f64,
        gap in 0.01..50.0f64,
    ) {
        let lo = cw_heralding_probability(1.0, eps_lo).exact;
        let hi = cw_heralding_probability(1.0, eps_lo + gap).exact;
        prop_assert!(hi < lo, "R(ε) must strictly decrease: {lo} → {hi}");
    }

    #[test]
    fn g2_sits_on_or_above_the_accidental_floor(
        flux in 0.001..0.09f64,
        t_m in 2.0..20.0f64,
        s in -100.0..100.0f64,
    ) {
        let v = g2_cross(s, 0.0, flux, 1.0, t_m);
        prop_assert!(v >= 1.0 - 1e-12);
    }

    #[test]
    fn cw_shape_translation_covariance(
        s in -40.0..5.0f64,
        t_m in 2.0..20.0f64,
        shift in -50.0..50.0f64,
    ) {
        // the shape depends on t − t′ only; random shifts reproduce it up
        // to the rounding of the argument subtraction itself
        let a = cw_conditional_shape(s, 0.0, 1.0, t_m);
        let b = cw_conditional_shape(s + shift, shift, 1.0, t_m);
        prop_assert!((a - b).abs() <= 1e-11 * a.abs().max(1e-30), "{a} vs {b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn excitation_probability_is_bounded_for_smooth_pulses(
        c1 in -18.0..-6.0f64,
        w1 in 0.6..2.5f64,
        c2 in -12.0..-2.0f64,
        w2 in 0.6..2.5f64,
        rel in 0.0..1.0f64,
        phase in -2.0..2.0f64,
        lifetime in 0.9..3.0f64,
    ) {
        let grid = Grid::with_step(-45.0, 0.05, 1801).unwrap();
        let env = TimeEnvelope::from_fn(grid, |t| {
            let g1 = (-(t - c1) * (t - c1) / (2.0 * w1 * w1)).exp();
            let g2 = rel * (-(t - c2) * (t - c2) / (2.0 * w2 * w2)).exp();
            C64::from_polar(g1 + g2, phase * t)
        });
        let psi = env.normalized().unwrap();
        let atom = AtomModel::new(lifetime).unwrap();
        let curve = excitation_curve(&psi, &atom).unwrap();
        for p in curve.probability.values() {
            prop_assert!(*p >= -1e-9 && *p <= 1.0 + 1e-9);
        }
        // all the energy comes back out
        let last = curve.probability.values().last().unwrap();
        prop_assert!(last.abs() < 1e-3, "residual excitation {last}");
    }
}
