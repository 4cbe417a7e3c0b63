//! Sequential versus parallel scheduling of the per-site searches.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclerad::exec::Execution;
use cyclerad::filtration::{compute_persistence, rips_filtration, Filtration};
use cyclerad::fixtures::{circle_cloud, polygon_annulus};
use cyclerad::optimize::{opt_homologous_cycle, opt_pers_hom_rep, Options};

fn circle(n: usize) -> Filtration {
    let scale = 2.4 * (2.0 * std::f64::consts::PI / n as f64).sin();
    rips_filtration(circle_cloud(n), scale, 2).unwrap()
}

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn homologous(c: &mut Criterion) {
    let mut group = c.benchmark_group("opt_homologous_cycle");
    group.sample_size(10);
    for n in [16, 32] {
        let f = polygon_annulus(n, 1.0, 1.5, false);
        for (name, execution) in modes() {
            let opts = Options { sites: None, execution };
            group.bench_with_input(BenchmarkId::new(name, n), &f, |b, f| {
                b.iter(|| opt_homologous_cycle(&f.complex, 1, &f.cycle, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn persistent(c: &mut Criterion) {
    let mut group = c.benchmark_group("opt_pers_hom_rep");
    group.sample_size(10);
    for n in [50, 100] {
        let f = circle(n);
        let bars = compute_persistence(&f, 1).barcode;
        let iv = *bars
            .intervals
            .iter()
            .max_by(|a, b| a.persistence().total_cmp(&b.persistence()))
            .unwrap();
        for (name, execution) in modes() {
            let opts = Options { sites: None, execution };
            group.bench_with_input(BenchmarkId::new(name, f.len()), &f, |b, f| {
                b.iter(|| opt_pers_hom_rep(f, &iv, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, homologous, persistent);
criterion_main!(benches);
