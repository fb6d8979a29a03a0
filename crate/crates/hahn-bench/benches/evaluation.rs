use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hahn_core::hahn_bi::{overlap2, verify_bi, OverlapMode};
use hahn_core::numeric::q;
use hahn_core::oracle::{build_operator, joint_eigenvectors, OperatorLabel};
use hahn_core::{BiParams, VerifyOptions};

fn params(n: usize) -> BiParams {
    BiParams::new(q(1, 2), q(7, 3), q(-1, 2), n).unwrap()
}

fn overlap(c: &mut Criterion) {
    let mut g = c.benchmark_group("overlap2");
    for n in [4usize, 8] {
        for (name, mode) in [("float", OverlapMode::Float), ("radical", OverlapMode::Radical)] {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| overlap2(&params(n), mode)));
        }
    }
    g.finish();
}

fn exact_checks(c: &mut Criterion) {
    let opts = VerifyOptions::default();
    let mut g = c.benchmark_group("verify_bi");
    g.sample_size(10);
    for check in ["orthogonality", "recurrence-x1", "structure"] {
        g.bench_with_input(BenchmarkId::new(check, 6), &check, |b, &check| {
            b.iter(|| verify_bi(Some(check), &params(6), &opts).unwrap())
        });
    }
    g.finish();
}

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("joint_eigenvectors");
    g.sample_size(10);
    for n in [3usize, 5] {
        let p = params(n);
        let l1 = build_operator(OperatorLabel::L1, &p);
        let l2 = build_operator(OperatorLabel::L2, &p);
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| b.iter(|| joint_eigenvectors(&l1, &l2, &p).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, overlap, exact_checks, kernels);
criterion_main!(benches);
