//! End-to-end sweep benchmarks at the two measurement configurations.

use std::hint::black_box;

use criterion::{Criterion, criterion_group, criterion_main};

use boundsim_core::*;

fn sweep_config(kind: InteractionKind, measurement: MeasurementConfig) -> SweepConfig {
    SweepConfig {
        hamiltonian: HamiltonianSpec::new(kind, 0.5, OperatorConvention::Spin1).unwrap(),
        aux: AuxAmplitudes::uniform(),
        t_start: 0.0,
        t_end: 20.0,
        steps: 101,
        measurement,
    }
}

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_101_steps");
    group.sample_size(10);
    for kind in InteractionKind::ALL {
        group.bench_function(format!("{kind:?}_literal"), |b| {
            let cfg = sweep_config(kind, MeasurementConfig::reduce_c_cut_ab());
            b.iter(|| run_sweep(black_box(&cfg)).unwrap())
        });
    }
    group.bench_function("DzyaloshinskiiMoriya_a_bc", |b| {
        let cfg = sweep_config(
            InteractionKind::DzyaloshinskiiMoriya,
            MeasurementConfig::cut_a_bc(),
        );
        b.iter(|| run_sweep(black_box(&cfg)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
