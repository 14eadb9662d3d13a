//! Benchmarks for the hot paths: the formula transform, the two ANF routes,
//! the decision procedure, and the parser.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pbnf_core::enumerate::STANDARD_BINARY;
use pbnf_core::families::{transform, Family};
use pbnf_core::formula::Formula;
use pbnf_core::opspace::{anf_from_vector, anf_from_vector_minterms, BitString, TruthVector};
use pbnf_core::{calculus, BinaryOp};

fn random_formula(rng: &mut ChaCha8Rng, letters: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 8) {
        return Formula::letter(letters[rng.gen_range(0..letters.len())]);
    }
    if rng.gen_ratio(1, 6) {
        return Formula::not(random_formula(rng, letters, depth - 1));
    }
    let op = STANDARD_BINARY[rng.gen_range(0..STANDARD_BINARY.len())];
    Formula::binary(
        op,
        random_formula(rng, letters, depth - 1),
        random_formula(rng, letters, depth - 1),
    )
}

fn bench_transform(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let letters = ["p", "q", "r", "s"];
    let family = Family::normal();
    let mut group = c.benchmark_group("transform");
    for depth in [3usize, 6] {
        let formulas: Vec<Formula> = (0..64)
            .map(|_| random_formula(&mut rng, &letters, depth))
            .collect();
        group.bench_with_input(BenchmarkId::from_parameter(depth), &formulas, |b, fs| {
            b.iter(|| {
                for f in fs {
                    black_box(transform(black_box(f), &family));
                }
            })
        });
    }
    group.finish();
}

fn bench_anf_routes(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let order: Vec<String> = ["a", "b", "c", "d", "e", "f", "g", "h"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let bits = BitString::new((0..256).map(|_| rng.gen_bool(0.5)).collect());
    let tv = TruthVector::new(order, bits);
    let mut group = c.benchmark_group("anf_from_vector_n8");
    group.bench_function("butterfly", |b| b.iter(|| anf_from_vector(black_box(&tv))));
    group.bench_function("minterm_sum", |b| {
        b.iter(|| anf_from_vector_minterms(black_box(&tv)))
    });
    group.finish();
}

fn bench_decide(c: &mut Criterion) {
    let family = Family::normal();
    let p = || Formula::letter("p");
    let q = || Formula::letter("q");
    let r = || Formula::letter("r");
    let transitivity = Formula::imp(
        Formula::and(Formula::imp(p(), q()), Formula::imp(q(), r())),
        Formula::imp(p(), r()),
    );
    let contingent = Formula::iff(
        Formula::or(Formula::and(p(), q()), r()),
        Formula::and(p(), Formula::or(q(), r())),
    );
    c.bench_function("decide/tautology", |b| {
        b.iter(|| calculus::decide(black_box(&transitivity), &family))
    });
    c.bench_function("decide/contingent", |b| {
        b.iter(|| calculus::decide(black_box(&contingent), &family))
    });
}

fn bench_parse(c: &mut Criterion) {
    let text = "(p & (p -> q)) -> q | cd(p, q, r) ^ !(s <-> p nand q)";
    c.bench_function("parse", |b| {
        b.iter(|| Formula::parse(black_box(text)).unwrap())
    });
    let f = Formula::parse(text).unwrap();
    c.bench_function("print", |b| b.iter(|| black_box(&f).to_string()));
}

fn bench_dual_closure(c: &mut Criterion) {
    c.bench_function("dual_of_all", |b| {
        b.iter(|| {
            for op in BinaryOp::ALL {
                black_box(pbnf_core::opspace::dual_of(black_box(op)));
            }
        })
    });
}

criterion_group!(
    benches,
    bench_transform,
    bench_anf_routes,
    bench_decide,
    bench_parse,
    bench_dual_closure
);
criterion_main!(benches);
