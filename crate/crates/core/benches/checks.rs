use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use cublink::corpus::{cube_corpus, metric_corpus};
use cublink::generators::affine_a_patch;
use cublink::link::{check_type_a, check_type_c};
use cublink::rational::q;
use cublink::selftest::{lattice_suite, SelftestConfig};
use cublink::tightspan::tight_span;

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let default = ThreadPoolBuilder::new().build().unwrap();
    let label = format!("default({})", default.current_num_threads());
    vec![
        ("1-thread".to_string(), ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        (label, default),
    ]
}

fn bench_checks(c: &mut Criterion) {
    let patch = affine_a_patch(4, 2).unwrap();
    let cubes = cube_corpus(2024, 12);
    let subdivisions: Vec<_> = cubes.iter().map(|(_, c)| c.barycentric_subdivision()).collect();
    let metrics = metric_corpus(2024, 20);
    let cfg = SelftestConfig {
        random_posets: 200,
        ..SelftestConfig::default()
    };
    let hex = affine_a_patch(2, 3).unwrap();
    let (a, b) = (hex.index_of("-2,-3").unwrap(), hex.index_of("1,2").unwrap());

    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_with_input(BenchmarkId::new("type_a_affine_patch", &name), &pool, |bch, p| {
            bch.iter(|| p.install(|| check_type_a(&patch).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("type_c_cube_corpus", &name), &pool, |bch, p| {
            bch.iter(|| p.install(|| subdivisions.iter().filter(|s| check_type_c(s).is_ok_and(|v| v.pass)).count()))
        });
        g.bench_with_input(BenchmarkId::new("lattice_suite", &name), &pool, |bch, p| {
            bch.iter(|| p.install(|| lattice_suite(&cfg)))
        });
        g.bench_with_input(BenchmarkId::new("tight_spans", &name), &pool, |bch, p| {
            bch.iter(|| p.install(|| metrics.iter().map(|(_, m)| tight_span(m).unwrap().dimension).sum::<usize>()))
        });
        g.bench_with_input(BenchmarkId::new("approx_distance", &name), &pool, |bch, p| {
            bch.iter(|| {
                p.install(|| {
                    cublink::metric::approx_distance(
                        &hex,
                        &cublink::metric::Point::vertex(a),
                        &cublink::metric::Point::vertex(b),
                        &q(1, 8),
                    )
                    .unwrap()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_checks);
criterion_main!(benches);
