use artin_bench::{group, GROUPS};
use artin_core::analytic::dirichlet::{char_sum, DirichletCharacter};
use artin_core::analytic::kernel::{eta_hat, eta_hat_quadrature};
use artin_core::analytic::primes::sieve;
use artin_core::analytic::sums::{bilinear_check, squarefull_sums};
use artin_core::induction::mackey_decompose;
use artin_core::{character_table, verify_spaces, Limits, SubgroupFilter, Workspace};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_table");
    g.sample_size(10);
    for &spec in GROUPS {
        g.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, s| {
            b.iter(|| character_table(&group(s)).unwrap())
        });
    }
    g.finish();
}

fn induction(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_spaces");
    g.sample_size(10);
    for &spec in GROUPS {
        let ws = Workspace::new(&group(spec)).unwrap();
        let mn = ws.minimal_normals().to_vec();
        ws.monomials(SubgroupFilter::Nilpotent).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(spec), &ws, |b, ws| {
            b.iter(|| verify_spaces(ws, &mn, SubgroupFilter::Nilpotent).unwrap())
        });
    }
    g.finish();

    let ws = Workspace::new(&group("Sym(4)")).unwrap();
    let all = ws.monomials(SubgroupFilter::All).unwrap();
    let (x, y) = (&all[all.len() / 3], &all[2 * all.len() / 3]);
    c.bench_function("mackey Sym(4)", |b| b.iter(|| mackey_decompose(x, y).unwrap().check(x, y).unwrap()));
}

fn analytic(c: &mut Criterion) {
    c.bench_function("sieve 1e6", |b| b.iter(|| sieve(black_box(1_000_000))));
    let chi = DirichletCharacter::primitive(7).unwrap().remove(1);
    c.bench_function("char_sum mod 7 to 1e5", |b| b.iter(|| char_sum(&chi, black_box(100_000))));
    c.bench_function("eta_hat closed form", |b| b.iter(|| eta_hat(black_box(100.0), black_box(1.5))));
    c.bench_function("eta_hat quadrature", |b| b.iter(|| eta_hat_quadrature(black_box(100.0), black_box(1.5))));

    let limits = Limits::default();
    let family: Vec<DirichletCharacter> = [5u64, 7, 8].iter().flat_map(|&q| DirichletCharacter::primitive(q).unwrap()).collect();
    let coefficients = vec![1.0; family.len()];
    let mut g = c.benchmark_group("analytic sums");
    g.sample_size(10);
    g.bench_function("bilinear 1e5", |b| b.iter(|| bilinear_check(&family, &coefficients, 100_000, &limits).unwrap()));
    g.bench_function("squarefull 1e6", |b| b.iter(|| squarefull_sums(1_000_000, &limits).unwrap()));
    g.finish();
}

criterion_group!(benches, tables, induction, analytic);
criterion_main!(benches);
