use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subword_core::coxeter::build_root_system;
use subword_core::par::Execution;
use subword_core::scan::{run_scan, ScanConfig};
use subword_core::theorems::Claim;

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for (t, claims) in [
        ("A3", vec![Claim::Theorem2i, Claim::Corollary1]),
        ("B3", vec![Claim::Theorem2i, Claim::Corollary1]),
        ("B3", vec![Claim::Theorem1]),
    ] {
        let rs = build_root_system(t.parse().unwrap()).unwrap();
        let label = format!("{t}/{}", claims.iter().map(|c| c.id()).collect::<Vec<_>>().join("+"));
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let cfg = ScanConfig { claims: claims.clone(), execution, ..ScanConfig::default() };
            group.bench_with_input(BenchmarkId::new(name, &label), &cfg, |b, cfg| {
                b.iter(|| run_scan(&rs, cfg).unwrap().reports.len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
