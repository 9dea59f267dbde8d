use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use racks::enumerate::{enumerate_brute, enumerate_structured, Engine, EnumerationRequest};
use racks::lower_bound::{xe_distinctness, EMatrix};
use racks::{Kind, Parallelism};

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn request(n: usize, engine: Engine, mode: Parallelism) -> EnumerationRequest {
    let mut req = EnumerationRequest::new(n, Kind::Rack, engine);
    req.emit_tables = false;
    req.brute_cap = 5;
    req.parallelism = mode;
    req
}

fn structured(c: &mut Criterion) {
    let mut group = c.benchmark_group("structured");
    group.sample_size(10);
    for n in [5, 6] {
        // warm the subgroup-class cache outside the timed loop
        enumerate_structured(&request(n, Engine::Structured, Parallelism::Parallel)).unwrap();
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_structured(&request(n, Engine::Structured, mode)).unwrap().count)
            });
        }
    }
    group.finish();
}

fn brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute");
    group.sample_size(10);
    for n in [4, 5] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_brute(&request(n, Engine::Brute, mode)).unwrap().count)
            });
        }
    }
    group.finish();
}

fn xe_family(c: &mut Criterion) {
    let all = EMatrix::all(4);
    let mut group = c.benchmark_group("xe_distinctness");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| xe_distinctness(8, &all, mode).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, structured, brute, xe_family);
criterion_main!(benches);
