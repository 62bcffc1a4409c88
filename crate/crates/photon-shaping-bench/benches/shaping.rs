use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use photon_shaping::{
    apply_filter, apply_filter_via, conditional_shape, cw_conditional_envelope, excitation_curve,
    heralding_probability, to_time_domain, AtomModel, FilterPath, FrequencyGrid, Spectrum,
};
use photon_shaping_bench::windowed_fixture;

fn bench_apply_filter(c: &mut Criterion) {
    let (joint, filter) = windowed_fixture(0.25);
    let mut group = c.benchmark_group("apply_filter");
    group.sample_size(20);
    group.bench_function("spectral", |b| {
        b.iter(|| black_box(apply_filter(&joint, &filter).unwrap()))
    });
    group.bench_function("time_domain", |b| {
        b.iter(|| {
            black_box(apply_filter_via(&joint, &filter, FilterPath::TimeDomain).unwrap())
        })
    });
    group.finish();
}

fn bench_heralding_probability(c: &mut Criterion) {
    let (joint, filter) = windowed_fixture(0.25);
    c.bench_function("heralding_probability", |b| {
        b.iter(|| black_box(heralding_probability(&joint, &filter).unwrap()))
    });
}

fn bench_conditional_sweep(c: &mut Criterion) {
    let (joint, filter) = windowed_fixture(0.25);
    let filtered = apply_filter(&joint, &filter).unwrap();
    c.bench_function("conditional_shape_sweep", |b| {
        b.iter(|| {
            for t in [10.0, 14.0, 18.0, 22.0, 26.0] {
                black_box(conditional_shape(&filtered, t).unwrap());
            }
        })
    });
}

fn bench_transform(c: &mut Criterion) {
    use photon_shaping::Complex64;
    let fgrid = FrequencyGrid::centered(200.0, 4096).unwrap();
    let spec = Spectrum::from_fn(fgrid, |w| {
        Complex64::new(1.0, 0.0) / Complex64::new(1.0, -2.0 * w)
    });
    c.bench_function("to_time_domain_4096", |b| {
        b.iter(|| black_box(to_time_domain(&spec).into_value()))
    });
}

fn bench_excitation(c: &mut Criterion) {
    let grid = photon_shaping::Grid::with_step(-240.0, 0.125, 2881).unwrap();
    let psi = cw_conditional_envelope(&grid, 0.0, 1.0, 10.0)
        .normalized()
        .unwrap();
    let atom = AtomModel::new(10.0).unwrap();
    c.bench_function("excitation_curve_2881", |b| {
        b.iter_batched(
            || psi.clone(),
            |p| black_box(excitation_curve(&p, &atom).unwrap()),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_apply_filter,
    bench_heralding_probability,
    bench_conditional_sweep,
    bench_transform,
    bench_excitation
);
criterion_main!(benches);
