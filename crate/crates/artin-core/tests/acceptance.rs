//! Acceptance suite: every criterion is exact (no numerical tolerance) and
//! prints one pass/fail line. Run with
//! `cargo test -p artin-core --test acceptance -- --nocapture` (release
//! recommended for the randomized Garside properties).

use artin_core::coxeter::{weak_order_gcd, CoxeterElement, StandardType};
use artin_core::presentation::{compose_extension, ExtensionData, FreeWord, Presentation, Relator};
use artin_core::verifier::suites::{expected_generator_count, expected_schema_count};
use artin_core::verifier::{run_suite, ClaimStatus, SuiteOptions};
use artin_core::mcg::{emit_relators, Flavor, SurfaceParams};

use std::collections::BTreeMap;

fn pass(n: u32, what: &str) {
    println!("criterion {n} PASS: {what}");
}

fn assert_suite_verified(n: u32, suite: &str, what: &str) {
    let report = run_suite(suite, &SuiteOptions::default()).unwrap();
    for c in &report.claims {
        assert_eq!(
            c.status,
            ClaimStatus::Verified,
            "criterion {n} FAIL: {suite} claim {} is {}",
            c.id,
            c.status
        );
    }
    pass(n, what);
}

#[test]
fn criterion_01_fundamental_element_power_formulas() {
    let report = run_suite("prop2.8", &SuiteOptions::default()).unwrap();
    for c in &report.claims {
        if c.id == "E7" {
            // The stated exponent 15 is wrong; the solver must determine
            // the true exponent instead of asserting either value.
            assert_eq!(
                c.status,
                ClaimStatus::Corrected("9".to_string()),
                "criterion 1 FAIL: E7 exponent check returned {}",
                c.status
            );
        } else {
            assert_eq!(
                c.status,
                ClaimStatus::Verified,
                "criterion 1 FAIL: claim {} is {}",
                c.id,
                c.status
            );
        }
    }
    // Independent justification of the corrected exponent: the positive
    // word (x1..x7)^k has length 7k, and Delta(E7) has length equal to the
    // number of positive roots; so the exponent must be 63 / 7 = 9.
    let e7 = StandardType::parse("E7").unwrap().instantiate();
    let roots = e7.positive_root_count().unwrap();
    assert_eq!(roots, 63, "criterion 1 FAIL: E7 positive root count");
    assert_eq!(roots % 7, 0);
    assert_eq!(roots / 7, 9);
    pass(
        1,
        "delta power formulas exact for A1-A5, B2-B4, D4, D5, E6; E7 exponent corrected to 9 (63 = 9*7)",
    );
}

#[test]
fn criterion_02_fundamental_element_recursions() {
    assert_suite_verified(
        2,
        "prop2.9",
        "peel-off recursions for A, B, D families exact up to rank 6",
    );
}

#[test]
fn criterion_03_commutation_identities_in_d_groups() {
    assert_suite_verified(
        3,
        "lemma3.5",
        "both displayed commutation identities hold in A(D_l) for l = 4, 5, 6",
    );
}

#[test]
fn criterion_04_conjugate_product_identities() {
    assert_suite_verified(
        4,
        "lemma3.6",
        "long conjugate-product identities verified in A(D6) and A(D4)",
    );
}

#[test]
fn criterion_05_twist_word_expansions() {
    assert_suite_verified(
        5,
        "lemma3.8",
        "explicit twist-word expansions verified in A(D6) and A(D4)",
    );
}

#[test]
fn criterion_06_star_quotient_derivation_scripts() {
    assert_suite_verified(
        6,
        "lemma3.4",
        "all three shipped derivation scripts pass the elementary-move checker",
    );
}

#[test]
fn criterion_07_garside_property_suite() {
    let opts = SuiteOptions {
        seed: 0xA17,
        samples: 1000,
    };
    let report = run_suite("garside-props", &opts).unwrap();
    for c in &report.claims {
        assert_eq!(
            c.status,
            ClaimStatus::Verified,
            "criterion 7 FAIL: claim {} is {}",
            c.id,
            c.status
        );
    }
    pass(
        7,
        "1000 random words per type over A3, B3, D4, D6: inverse cancellation, idempotence, left-weightedness; Delta conjugation permutes generators up to rank 7",
    );
}

#[test]
fn criterion_08_gcd_agrees_with_lattice_meet() {
    for tag in ["A3", "B3", "D4"] {
        let g = StandardType::parse(tag).unwrap().instantiate();
        let all = g.enumerate_small_group(2000).unwrap();
        let n = all.len();
        // Prefix bitsets: prefixes[i] holds j iff all[j] <= all[i] in the
        // left weak order.
        let words = n.div_ceil(64);
        let mut prefixes: Vec<Vec<u64>> = vec![vec![0u64; words]; n];
        for (i, u) in all.iter().enumerate() {
            for (j, c) in all.iter().enumerate() {
                if c.is_prefix_of(u) {
                    prefixes[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (i, u) in all.iter().enumerate() {
            index.insert(u.reduced_word(), i);
        }
        let lookup = |e: &CoxeterElement| index[&e.reduced_word()];
        let mut pairs = 0usize;
        for (i, u) in all.iter().enumerate() {
            for (j, v) in all.iter().enumerate() {
                let fast = weak_order_gcd(u, v);
                // Brute-force meet: the common prefix of maximal length;
                // assert it dominates every common prefix.
                let mut best: Option<usize> = None;
                for w in 0..words {
                    let mut bits = prefixes[i][w] & prefixes[j][w];
                    while bits != 0 {
                        let k = w * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if best.is_none_or(|b| all[k].len() > all[b].len()) {
                            best = Some(k);
                        }
                    }
                }
                let best = best.expect("identity is always a common prefix");
                assert_eq!(
                    lookup(&fast),
                    best,
                    "criterion 8 FAIL: gcd mismatch in W({tag})"
                );
                for w in 0..words {
                    let mut bits = prefixes[i][w] & prefixes[j][w];
                    while bits != 0 {
                        let k = w * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        assert!(
                            all[k].is_prefix_of(&fast),
                            "criterion 8 FAIL: meet does not dominate in W({tag})"
                        );
                    }
                }
                pairs += 1;
            }
        }
        let expected_pairs = n * n;
        assert_eq!(pairs, expected_pairs);
        println!("  W({tag}): {pairs} pairs checked");
    }
    pass(
        8,
        "greedy gcd equals the brute-force lattice meet on every pair in W(A3) (576), W(B3), W(D4)",
    );
}

#[test]
fn criterion_09_emitter_audit() {
    let report = run_suite("grid-audit", &SuiteOptions::default()).unwrap();
    for c in &report.claims {
        assert_eq!(
            c.status,
            ClaimStatus::Verified,
            "criterion 9 FAIL: claim {} is {}",
            c.id,
            c.status
        );
    }
    // Closed-form spot checks independent of the suite internals.
    for (g, r, n) in [(2u32, 0u32, 1u32), (2, 1, 2), (3, 2, 3), (4, 3, 4)] {
        let p = SurfaceParams::new(g, r, n, Flavor::Full, false).unwrap();
        assert_eq!(
            expected_generator_count(&p),
            2 * g + 2 * r + n + 1,
            "criterion 9 FAIL: bounded full inventory"
        );
    }
    // The genus-1 closed relations specialize as stated: at n = 3 the
    // list is exactly R7, R9b, R9c.
    let p = SurfaceParams::new(1, 0, 3, Flavor::Full, true).unwrap();
    let ids: Vec<String> = emit_relators(&p).unwrap().into_iter().map(|i| i.id).collect();
    assert_eq!(ids, ["R7", "R9b", "R9c"]);
    assert_eq!(expected_schema_count(&p), 3);
    pass(
        9,
        "grid audit g<=4, r<=3, n<=4, both flavors: schemas well formed, inventory counts match closed forms, pure n=0 degenerates to the two bounded-surface relations",
    );
}

#[test]
fn criterion_10_extension_combiner() {
    // Example 1: trivial kernel leaves the quotient presentation, renamed.
    let h = Presentation::new(
        &["x"],
        vec![Relator::new(FreeWord::parse("x^2").unwrap())],
    )
    .unwrap();
    let k0 = Presentation::new::<&str>(&[], vec![]).unwrap();
    let data = ExtensionData {
        kernel: k0,
        quotient: h.clone(),
        lift: [("x".to_string(), "xt".to_string())].into(),
        relator_images: vec![FreeWord::empty()],
        conjugates: BTreeMap::new(),
    };
    let p1 = compose_extension(&data).unwrap();
    assert_eq!(p1.generators(), &["xt".to_string()]);
    assert_eq!(
        p1.abelianization_invariants(),
        vec![2],
        "criterion 10 FAIL: trivial-kernel abelianization"
    );

    // Example 2: free kernel with w = k, v = k; abelianization Z.
    let k = Presentation::new(&["k"], vec![]).unwrap();
    let data = ExtensionData {
        kernel: k,
        quotient: h.clone(),
        lift: [("x".to_string(), "xt".to_string())].into(),
        relator_images: vec![FreeWord::parse("k").unwrap()],
        conjugates: [(
            ("x".to_string(), "k".to_string()),
            FreeWord::parse("k").unwrap(),
        )]
        .into(),
    };
    let p2 = compose_extension(&data).unwrap();
    assert_eq!(p2.generators().len(), 2);
    assert_eq!(p2.relators().len(), 2);
    assert_eq!(
        p2.abelianization_invariants(),
        vec![0],
        "criterion 10 FAIL: Z-extension abelianization"
    );

    // Example 3: cyclic kernel inverted by the lift; order six.
    let k = Presentation::new(
        &["a"],
        vec![Relator::new(FreeWord::parse("a^3").unwrap())],
    )
    .unwrap();
    let data = ExtensionData {
        kernel: k,
        quotient: h,
        lift: [("x".to_string(), "xt".to_string())].into(),
        relator_images: vec![FreeWord::empty()],
        conjugates: [(
            ("x".to_string(), "a".to_string()),
            FreeWord::parse("a^-1").unwrap(),
        )]
        .into(),
    };
    let p3 = compose_extension(&data).unwrap();
    assert_eq!(p3.generators().len(), 2);
    assert_eq!(p3.relators().len(), 3, "Lemma-shape relator count");
    assert_eq!(
        p3.abelianization_invariants(),
        vec![2],
        "criterion 10 FAIL: dihedral abelianization"
    );
    assert_eq!(
        p3.coset_enumeration(100_000).unwrap(),
        6,
        "criterion 10 FAIL: coset enumeration order"
    );
    pass(
        10,
        "extension combiner: stated abelianization invariants and order 6 by bounded coset enumeration",
    );
}
