//! Commutation-transport derivations in the star quotient group.
//!
//! The ambient graph is the star with center `y` and leaves `x1..x4` (an
//! affine shape, so the Garside solver does not apply). The group `G` is
//! the quotient of its Artin group by the single relation
//!
//! ```text
//! x4 . D^-1 x2 D  =  D^-1 x2 D . x4        with D = Delta(x1, x3, y),
//! ```
//!
//! and three further commutation relations of the same shape hold in `G`:
//!
//! - (a) `x3` commutes with `Delta^-1(x2,x4,y) x1 Delta(x2,x4,y)`
//! - (b) `x2` commutes with `Delta^-1(x1,x3,y) x4 Delta(x1,x3,y)`
//! - (c) `x1` commutes with `Delta^-1(x2,x4,y) x3 Delta(x2,x4,y)`
//!
//! This module constructs elementary-move derivation scripts for all
//! three. Claim (a) is derived directly by transporting the conjugating
//! letters until a conjugate of the defining relator appears. Claim (c) is
//! the image of (a) under the graph automorphism swapping `x1` and `x3`;
//! the relator insertions are re-manufactured from the stored relator by
//! gluing reduced words of the fundamental element. Claim (b) is the image
//! of (a) under the leaf reversal `x1 <-> x4`, `x2 <-> x3`, whose foreign
//! relator is exactly claim (c) and is inlined through the (c) derivation.
//! Every move is validated as it is recorded and the assembled scripts are
//! replayed through the checker.

use std::collections::HashMap;

use super::builder::DerivationBuilder;
use super::{invert_letters, letters_from_text, DerivationScript, Letter};
use crate::coxeter::CoxeterGraph;
use crate::garside::delta_word_of;
use crate::presentation::{artin_presentation, FreeWord, Presentation, Relator};

fn star_graph() -> CoxeterGraph {
    CoxeterGraph::new(
        &["x1", "x2", "x3", "x4", "y"],
        &[
            ("x1", "y", 3),
            ("x2", "y", 3),
            ("x3", "y", 3),
            ("x4", "y", 3),
        ],
    )
    .unwrap()
}

fn delta_letters(graph: &CoxeterGraph, names: &[&str]) -> Vec<Letter> {
    let w = delta_word_of(graph, names).expect("finite parabolic");
    w.syllables()
        .iter()
        .flat_map(|&(i, e)| {
            let sign = if e > 0 { 1i8 } else { -1 };
            std::iter::repeat_n(
                Letter::new(graph.vertex_name(i), sign),
                e.unsigned_abs() as usize,
            )
        })
        .collect()
}

fn word(text: &str) -> Vec<Letter> {
    letters_from_text(text).unwrap()
}

fn to_free_word(letters: &[Letter]) -> FreeWord {
    let sylls: Vec<(String, i64)> = letters
        .iter()
        .map(|l| (l.gen.clone(), l.sign as i64))
        .collect();
    FreeWord::from_syllables(&sylls)
}

/// The presentation of `G`: the Artin relators of the star graph plus the
/// defining relation, tagged `main`.
pub fn star_quotient_presentation() -> Presentation {
    let graph = star_graph();
    let mut pres = artin_presentation(&graph);
    let (lhs, rhs) = claim_sides(&graph, "x4", "x2", &["x1", "x3", "y"]);
    pres.add_relator(Relator::equation(
        to_free_word(&lhs),
        to_free_word(&rhs),
        "main",
    ))
    .unwrap();
    pres
}

/// The displayed sides of a commutation claim: `mover . D^-1 inner D` and
/// `D^-1 inner D . mover`.
fn claim_sides(
    graph: &CoxeterGraph,
    mover: &str,
    inner: &str,
    set: &[&str],
) -> (Vec<Letter>, Vec<Letter>) {
    let d = delta_letters(graph, set);
    let conj = [
        invert_letters(&d),
        vec![Letter::new(inner, 1)],
        d.clone(),
    ]
    .concat();
    let lhs = [vec![Letter::new(mover, 1)], conj.clone()].concat();
    let rhs = [conj, vec![Letter::new(mover, 1)]].concat();
    (lhs, rhs)
}

fn claim_relator(graph: &CoxeterGraph, mover: &str, inner: &str, set: &[&str]) -> Vec<Letter> {
    let (lhs, rhs) = claim_sides(graph, mover, inner, set);
    [lhs, invert_letters(&rhs)].concat()
}

/// Expands a `T`-conjugation window `[y a c y, d^s, y^-1 c^-1 a^-1 y^-1]`
/// at position `p` into the full fundamental-element form
/// `[a c y a c y, d^s, y^-1 c^-1 a^-1 y^-1 c^-1 a^-1]`, where `a`, `c` are
/// the two conjugating leaves and `d^s` the signed commuting leaf letter.
fn expand_conjugation(b: &mut DerivationBuilder, p: usize, a: &str, c: &str, d: &str, s: i8) {
    let l = |g: &str, sign: i8| {
        if sign > 0 {
            g.to_string()
        } else {
            format!("{g}^-1")
        }
    };
    let w2 = |t: String| word(&t);
    let ds = l(d, s);

    b.insert_pair(p, a, 1);
    b.subst(p + 1, &w2(format!("{a}^-1 y {a}")), &w2(format!("y {a} y^-1")));
    b.subst(p + 3, &w2(format!("y^-1 {c} y")), &w2(format!("{c} y {c}^-1")));
    b.subst(p + 5, &w2(format!("{c}^-1 {ds}")), &w2(format!("{ds} {c}^-1")));
    b.insert_pair(p + 1, c, 1);
    b.subst(p + 4, &w2(format!("{a} {c}")), &w2(format!("{c} {a}")));
    b.subst(p + 2, &w2(format!("{c}^-1 y {c}")), &w2(format!("y {c} y^-1")));
    b.subst(p + 4, &w2(format!("y^-1 {a} y")), &w2(format!("{a} y {a}^-1")));
    b.subst(p + 3, &w2(format!("{c} {a}")), &w2(format!("{a} {c}")));
    b.subst(p + 6, &w2(format!("{a}^-1 {ds}")), &w2(format!("{ds} {a}^-1")));
    // Tail: [a^-1 c^-1 . T^-1] -> [T^-1 . c^-1 a^-1].
    b.subst(
        p + 8,
        &w2(format!("{c}^-1 y^-1 {c}^-1")),
        &w2(format!("y^-1 {c}^-1 y^-1")),
    );
    b.subst(
        p + 10,
        &w2(format!("y^-1 {a}^-1 y^-1")),
        &w2(format!("{a}^-1 y^-1 {a}^-1")),
    );
    b.subst(p + 9, &w2(format!("{c}^-1 {a}^-1")), &w2(format!("{a}^-1 {c}^-1")));
    b.subst(
        p + 7,
        &w2(format!("{a}^-1 y^-1 {a}^-1")),
        &w2(format!("y^-1 {a}^-1 y^-1")),
    );
    b.subst(
        p + 9,
        &w2(format!("y^-1 {c}^-1 y^-1")),
        &w2(format!("{c}^-1 y^-1 {c}^-1")),
    );
    b.subst(p + 8, &w2(format!("{a}^-1 {c}^-1")), &w2(format!("{c}^-1 {a}^-1")));
}

/// Core derivation for claim (a): from the literal relator word of (a)
/// down to the empty word, using the braid relators and one insertion of
/// `main`.
fn core_a(pres: &Presentation, graph: &CoxeterGraph) -> DerivationBuilder {
    let start = claim_relator(graph, "x3", "x1", &["x2", "x4", "y"]);
    let mut b = DerivationBuilder::new(pres, &start);

    // Phase A: glue the four Delta segments onto the convenient reduced
    // word E = x2 x4 y x2 x4 y. Segment layout of the 28-letter relator:
    // [x3][D-][x1][D][x3-][D-][x1-][D] at 0, 1..7, 7, 8..14, 14, 15..21,
    // 21, 22..28.
    let e = word("x2 x4 y x2 x4 y");
    let e_inv = invert_letters(&e);
    let sub24 = graph
        .induced_subgraph(&[
            graph.vertex_index("x2").unwrap(),
            graph.vertex_index("x4").unwrap(),
            graph.vertex_index("y").unwrap(),
        ])
        .0;
    b.glue(1, &e_inv, &sub24);
    b.glue(8, &e, &sub24);
    b.glue(15, &e_inv, &sub24);
    b.glue(22, &e, &sub24);

    // Phase B: cancel the leading x2 x4 of E against the x1 letter (they
    // commute), shrinking each block [E^-1 x1^e E] to the S-conjugation
    // [y^-1 x4^-1 x2^-1 y^-1, x1^e, y x2 x4 y].
    for (p, xe) in [(1usize, "x1"), (11, "x1^-1")] {
        b.subst(p + 5, &word(&format!("x2^-1 {xe}")), &word(&format!("{xe} x2^-1")));
        b.cancel(p + 6);
        b.subst(p + 4, &word(&format!("x4^-1 {xe}")), &word(&format!("{xe} x4^-1")));
        b.cancel(p + 5);
    }
    assert_eq!(
        b.word(),
        &word(
            "x3 y^-1 x4^-1 x2^-1 y^-1 x1 y x2 x4 y x3^-1 \
             y^-1 x4^-1 x2^-1 y^-1 x1^-1 y x2 x4 y"
        )[..],
        "phase B landing"
    );

    // Phase C: transport x3 and expose the defining commutator. Explicit
    // elementary rewrites; every position refers to the current word.
    b.subst(0, &word("x3 y^-1"), &word("y^-1 x3^-1 y x3")); // W1
    b.subst(6, &word("y^-1 x1 y"), &word("x1 y x1^-1")); // W2
    b.subst(11, &word("y x3^-1 y^-1"), &word("x3^-1 y^-1 x3")); // W3
    b.subst(16, &word("y^-1 x1^-1 y"), &word("x1 y^-1 x1^-1")); // W4
    b.insert_pair(1, "x2", -1); // W5
    b.subst(2, &word("x2 x3^-1"), &word("x3^-1 x2")); // W6
    b.subst(6, &word("x4^-1 x2^-1"), &word("x2^-1 x4^-1")); // W7
    b.subst(5, &word("x3 x2^-1"), &word("x2^-1 x3")); // W8
    b.subst(7, &word("x4^-1 x1"), &word("x1 x4^-1")); // W9a
    b.subst(6, &word("x3 x1"), &word("x1 x3")); // W9
    b.subst(11, &word("x2 x4"), &word("x4 x2")); // W10a
    b.subst(10, &word("x1^-1 x4"), &word("x4 x1^-1")); // W10
    b.subst(12, &word("x2 x3^-1"), &word("x3^-1 x2")); // W11
    b.subst(16, &word("x4^-1 x2^-1"), &word("x2^-1 x4^-1")); // W12a
    b.subst(15, &word("x3 x2^-1"), &word("x2^-1 x3")); // W12
    b.subst(17, &word("x4^-1 x1"), &word("x1 x4^-1")); // W13a
    b.subst(16, &word("x3 x1"), &word("x1 x3")); // W13
    b.subst(21, &word("x2 x4"), &word("x4 x2")); // W14a
    b.subst(20, &word("x1^-1 x4"), &word("x4 x1^-1")); // W14
    b.subst(3, &word("x2 y x2^-1"), &word("y^-1 x2 y")); // W15
    b.subst(8, &word("x4^-1 y x4"), &word("y x4 y^-1")); // W16
    b.subst(11, &word("x1^-1 x3^-1"), &word("x3^-1 x1^-1")); // W17
    b.subst(13, &word("x2 y^-1 x2^-1"), &word("y^-1 x2^-1 y")); // W18
    b.subst(18, &word("x4^-1 y^-1 x4"), &word("y x4^-1 y^-1")); // W19
    b.insert_pair(21, "x3", -1); // W20
    b.subst(22, &word("x3 x1^-1"), &word("x1^-1 x3")); // W21
    b.insert_pair(23, "y", -1); // W22

    assert_eq!(
        b.word(),
        &word(
            "y^-1 x2^-1 x3^-1 y^-1 \
             x2 y x1 x3 y x4 y^-1 x3^-1 x1^-1 y^-1 \
             x2^-1 y x1 x3 y x4^-1 y^-1 x3^-1 x1^-1 y^-1 \
             y x3 x2 y"
        )[..],
        "phase C landing"
    );

    // Phase D: expand both T-conjugations of x4 into the fundamental
    // element form F = x1 x3 y x1 x3 y. Later window first.
    expand_conjugation(&mut b, 15, "x1", "x3", "x4", -1);
    expand_conjugation(&mut b, 5, "x1", "x3", "x4", 1);

    // Phase E: glue the F segments onto the canonical Delta word of
    // {x1, x3, y}, then the 28-letter middle is a rotation of the defining
    // relator; kill it with one insertion and reduce everything.
    let d13 = delta_letters(graph, &["x1", "x3", "y"]);
    let d13_inv = invert_letters(&d13);
    let sub13 = graph
        .induced_subgraph(&[
            graph.vertex_index("x1").unwrap(),
            graph.vertex_index("x3").unwrap(),
            graph.vertex_index("y").unwrap(),
        ])
        .0;
    b.glue(5, &d13, &sub13);
    b.glue(12, &d13_inv, &sub13);
    b.glue(19, &d13, &sub13);
    b.glue(26, &d13_inv, &sub13);

    let middle: Vec<Letter> = b.word()[4..32].to_vec();
    let inverse = invert_letters(&middle);
    let (tag, inv, rot) =
        super::find_relator_form(pres, &inverse).expect("middle is a rotation of main");
    b.rel_raw(32, &tag, inv, rot);
    let n = b.word().len();
    b.reduce_window(0, n);
    assert!(b.word().is_empty(), "core (a) must reach the empty word");
    b
}

/// Derivation collapsing the stored `main` relator itself to the empty
/// word (one inverse insertion plus cancels).
fn collapse_relator(pres: &Presentation, relator: &[Letter], tag: &str) -> DerivationBuilder {
    let mut b = DerivationBuilder::new(pres, relator);
    b.rel_raw(relator.len(), tag, true, 0);
    let n = b.word().len();
    b.reduce_window(0, n);
    assert!(b.word().is_empty());
    b
}

fn rename_map(pairs: &[(&str, &str)]) -> HashMap<String, String> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn apply_rename(word: &[Letter], map: &HashMap<String, String>) -> Vec<Letter> {
    word.iter()
        .map(|l| Letter {
            gen: map.get(&l.gen).cloned().unwrap_or_else(|| l.gen.clone()),
            sign: l.sign,
        })
        .collect()
}

/// Augments the presentation with an extra tagged relator word.
fn augment(pres: &Presentation, tag: &str, word: &[Letter]) -> Presentation {
    let mut p = pres.clone();
    p.add_relator(Relator::tagged(to_free_word(word), tag)).unwrap();
    p
}

/// Wraps a core derivation (relator word -> empty) into the shipped shape
/// `LHS -> RHS`: append `RHS^-1 RHS` as cancelling pairs, then run the
/// core on the `LHS . RHS^-1` prefix.
fn wrap_claim(
    pres: &Presentation,
    lhs: &[Letter],
    rhs: &[Letter],
    core: &DerivationBuilder,
) -> DerivationScript {
    let mut b = DerivationBuilder::new(pres, lhs);
    b.build_inverse_pair(lhs.len(), rhs);
    // Word is now LHS . RHS^-1 . RHS and the prefix is the claim relator.
    b.replay_offset(core, 0);
    b.into_script(rhs)
}

/// Builds the presentation and the three claim scripts. Each script
/// starts at the rendered left-hand side of the displayed equality and
/// ends at the right-hand side.
pub fn star_quotient_fixture() -> (Presentation, Vec<(String, DerivationScript)>) {
    let graph = star_graph();
    let pres = star_quotient_presentation();
    let main_word: Vec<Letter> = pres
        .relator_by_tag("main")
        .unwrap()
        .word
        .letters()
        .into_iter()
        .map(|(g, s)| Letter { gen: g, sign: s })
        .collect();

    let sub13 = graph
        .induced_subgraph(&[
            graph.vertex_index("x1").unwrap(),
            graph.vertex_index("x3").unwrap(),
            graph.vertex_index("y").unwrap(),
        ])
        .0;
    let sub24 = graph
        .induced_subgraph(&[
            graph.vertex_index("x2").unwrap(),
            graph.vertex_index("x4").unwrap(),
            graph.vertex_index("y").unwrap(),
        ])
        .0;
    let d13 = delta_letters(&graph, &["x1", "x3", "y"]);
    let d24 = delta_letters(&graph, &["x2", "x4", "y"]);

    // --- (a), directly. ---
    let core_a = core_a(&pres, &graph);
    let (lhs_a, rhs_a) = claim_sides(&graph, "x3", "x1", &["x2", "x4", "y"]);
    let script_a = wrap_claim(&pres, &lhs_a, &rhs_a, &core_a);

    // --- (c): image of (a) under x1 <-> x3. ---
    let chi = rename_map(&[("x1", "x3"), ("x3", "x1")]);
    let chi_main = apply_rename(&main_word, &chi);
    let pres_chi = augment(&pres, "aux", &chi_main);
    let mapped_a = core_a.mapped(&pres_chi, &chi);
    // Sub-derivation: empty -> chi(main) over the base presentation,
    // obtained by reversing [chi(main) -> main by gluing -> empty].
    let sub_chi = {
        let mut b = DerivationBuilder::new(&pres, &chi_main);
        // chi(main) = [x4][chiD-][x2][chiD][x4-][chiD-][x2-][chiD]
        b.glue(1, &invert_letters(&d13), &sub13);
        b.glue(8, &d13, &sub13);
        b.glue(15, &invert_letters(&d13), &sub13);
        b.glue(22, &d13, &sub13);
        assert_eq!(b.word(), &main_word[..]);
        b.append(&collapse_relator(&pres, &main_word, "main"));
        b.reversed()
    };
    let core_c = mapped_a.inline_relator(&pres, "aux", &sub_chi);
    let (lhs_c, rhs_c) = claim_sides(&graph, "x1", "x3", &["x2", "x4", "y"]);
    let script_c = wrap_claim(&pres, &lhs_c, &rhs_c, &core_c);

    // --- (b): image of (a) under the leaf reversal. ---
    let pi = rename_map(&[("x1", "x4"), ("x4", "x1"), ("x2", "x3"), ("x3", "x2")]);
    let pi_main = apply_rename(&main_word, &pi);
    let pres_pi = augment(&pres, "aux", &pi_main);
    let mapped_a_pi = core_a.mapped(&pres_pi, &pi);
    // pi(main) is the (c) relator up to gluing its Delta segments.
    let sub_pi = {
        let mut b = DerivationBuilder::new(&pres, &pi_main);
        b.glue(1, &invert_letters(&d24), &sub24);
        b.glue(8, &d24, &sub24);
        b.glue(15, &invert_letters(&d24), &sub24);
        b.glue(22, &d24, &sub24);
        assert_eq!(
            b.word(),
            &claim_relator(&graph, "x1", "x3", &["x2", "x4", "y"])[..]
        );
        b.append(&core_c);
        b.reversed()
    };
    let core_b_mapped = mapped_a_pi.inline_relator(&pres, "aux", &sub_pi);
    // Its start is pi(W_a); glue the shipped (b) relator onto it.
    let (lhs_b, rhs_b) = claim_sides(&graph, "x2", "x4", &["x1", "x3", "y"]);
    let pi_d24 = apply_rename(&d24, &pi);
    let script_b = {
        let mut b = DerivationBuilder::new(&pres, &lhs_b);
        b.build_inverse_pair(lhs_b.len(), &rhs_b);
        // Prefix is now the (b) relator with canonical Delta(x1,x3,y)
        // segments; glue them onto pi(D24), the rendering that the mapped
        // core starts from.
        b.glue(1, &invert_letters(&pi_d24), &sub13);
        b.glue(8, &pi_d24, &sub13);
        b.glue(15, &invert_letters(&pi_d24), &sub13);
        b.glue(22, &pi_d24, &sub13);
        b.replay_offset(&core_b_mapped, 0);
        b.into_script(&rhs_b)
    };

    (
        pres,
        vec![
            ("lemma3.4(a)".to_string(), script_a),
            ("lemma3.4(b)".to_string(), script_b),
            ("lemma3.4(c)".to_string(), script_c),
        ],
    )
}

/// The displayed sides of the three claims, for cross-checking shipped
/// fixtures against independently rendered words.
pub fn claim_words() -> Vec<(String, Vec<Letter>, Vec<Letter>)> {
    let graph = star_graph();
    let mk = |id: &str, mover, inner, set: &[&str]| {
        let (lhs, rhs) = claim_sides(&graph, mover, inner, set);
        (id.to_string(), lhs, rhs)
    };
    vec![
        mk("lemma3.4(a)", "x3", "x1", &["x2", "x4", "y"]),
        mk("lemma3.4(b)", "x2", "x4", &["x1", "x3", "y"]),
        mk("lemma3.4(c)", "x1", "x3", &["x2", "x4", "y"]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::check_derivation;

    #[test]
    fn fixture_scripts_verify() {
        let (pres, scripts) = star_quotient_fixture();
        assert_eq!(scripts.len(), 3);
        for (id, script) in &scripts {
            assert_eq!(
                check_derivation(&pres, script),
                Ok(true),
                "script {id} must verify"
            );
        }
    }

    #[test]
    fn presentation_shape() {
        let p = star_quotient_presentation();
        assert_eq!(p.generators().len(), 5);
        // 10 pair relators plus the defining relation.
        assert_eq!(p.relators().len(), 11);
        assert_eq!(p.relator_by_tag("main").unwrap().word.len(), 28);
    }
}
