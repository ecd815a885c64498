//! Sequential vs data-parallel execution of the three heavy sweeps.
//! Without the `parallel` feature both arms run the same code.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use starcob_core::ainfty::{check_ainfty, StarA, StarB, SweepConfig};
use starcob_core::barcobar::{verify_homotopy, CobarA, HomotopyVariant};
use starcob_core::hochschild::ModelA;
use starcob_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_ainfty");
    g.sample_size(10);
    let a = StarA::new(3).unwrap();
    let b = StarB::new(4).unwrap();
    for (name, exec) in MODES {
        let mut cfg = SweepConfig::new(8, 12);
        cfg.exec = exec;
        g.bench_with_input(BenchmarkId::new("A N=3", name), &cfg, |bch, cfg| bch.iter(|| check_ainfty(&a, *cfg)));
        let mut cfg = SweepConfig::new(6, 12);
        cfg.exec = exec;
        g.bench_with_input(BenchmarkId::new("B N=4", name), &cfg, |bch, cfg| bch.iter(|| check_ainfty(&b, *cfg)));
    }
    g.finish();
}

fn homotopy(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_homotopy");
    g.sample_size(10);
    let p = CobarA::new(4).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("A N=4 len 8", name), |bch| {
            bch.iter(|| verify_homotopy(&p, 8, HomotopyVariant::Standard, exec))
        });
    }
    g.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomology_table");
    g.sample_size(10);
    let m = ModelA::for_rank(5).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("A N=5 j=-2", name), |bch| bch.iter(|| m.cohomology_table(-2, 3, 15, exec)));
    }
    g.finish();
}

criterion_group!(benches, relations, homotopy, cohomology);
criterion_main!(benches);
