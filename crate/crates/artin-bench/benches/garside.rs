//! Benchmarks for the Garside core: normal forms, equality decisions, and
//! fundamental element words.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use artin_core::coxeter::StandardType;
use artin_core::garside::{delta_of_graph, delta_word_of, normal_form, words_equal, ArtinWord};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_words(tag: &str, count: usize, len: usize) -> Vec<ArtinWord> {
    let g = StandardType::parse(tag).unwrap().instantiate();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..count)
        .map(|_| {
            let sylls: Vec<(usize, i64)> = (0..len)
                .map(|_| {
                    (
                        rng.random_range(0..g.rank()),
                        if rng.random_bool(0.5) { 1 } else { -1 },
                    )
                })
                .collect();
            ArtinWord::from_indices(&g, &sylls)
        })
        .collect()
}

fn bench_normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for tag in ["A3", "B3", "D4", "D6"] {
        let words = random_words(tag, 64, 40);
        group.bench_with_input(BenchmarkId::new("len40", tag), &words, |b, words| {
            let mut it = words.iter().cycle();
            b.iter(|| normal_form(black_box(it.next().unwrap())).unwrap());
        });
    }
    group.finish();
}

fn bench_words_equal(c: &mut Criterion) {
    // The heaviest solver call of the identity suites: the rank-6 D-shaped
    // twist-word expansion.
    let g = StandardType::parse("D6").unwrap().instantiate();
    let lhs = delta_word_of(&g, &["x1", "x3", "x4", "x5", "x6"])
        .unwrap()
        .power(2)
        .concat(&delta_of_graph(&g).unwrap().inverse())
        .unwrap();
    let rhs = ArtinWord::parse(
        &g,
        "x6 x5 x4 x3 x1 x2^-1 x3^-1 x4^-1 x5^-1 x6^-1 x5 x4 \
         x3 x2 x1^-1 x3^-1 x4^-1 x5^-1 x4 x3 x1 x2^-1 x3^-1 x4^-1 x2 x3 x2 \
         x1^-1 x3^-1 x2^-1",
    )
    .unwrap();
    c.bench_function("words_equal/d6_expansion", |b| {
        b.iter(|| words_equal(black_box(&lhs), black_box(&rhs)).unwrap())
    });
}

fn bench_delta_word(c: &mut Criterion) {
    c.bench_function("delta_word/E7", |b| {
        b.iter(|| {
            let g = StandardType::parse("E7").unwrap().instantiate();
            let names: Vec<String> = g.vertex_names().to_vec();
            delta_word_of(black_box(&g), &names).unwrap()
        })
    });
}

criterion_group!(benches, bench_normal_form, bench_words_equal, bench_delta_word);
criterion_main!(benches);
