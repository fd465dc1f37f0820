use super::*;

fn params(g: u32, r: u32, n: u32, flavor: Flavor, closed: bool) -> SurfaceParams {
    SurfaceParams::new(g, r, n, flavor, closed).unwrap()
}

#[test]
fn rejects_pure_closed_and_genus_zero() {
    assert!(SurfaceParams::new(1, 0, 2, Flavor::Pure, true).is_err());
    assert!(SurfaceParams::new(0, 0, 0, Flavor::Full, false).is_err());
    assert!(SurfaceParams::new(2, 1, 0, Flavor::Full, true).is_err());
}

#[test]
fn graph_genus1_one_puncture() {
    let fam = build_graph(&params(1, 0, 1, Flavor::Full, false)).unwrap();
    let names: Vec<&str> = fam.graph.vertex_names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["x0", "x1", "y1"]);
    let edges = fam.graph.edges();
    assert_eq!(edges.len(), 2);
    assert!(edges.iter().all(|&(_, _, m)| m == 3));
}

#[test]
fn graph_genus2_two_punctures() {
    let fam = build_graph(&params(2, 0, 2, Flavor::Full, false)).unwrap();
    let names: Vec<&str> = fam.graph.vertex_names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["x0", "x1", "y1", "y2", "y3", "z", "v1"]);
    // z attaches to y3 and the braid edge x1--v1 carries the 4 label.
    let z = fam.graph.vertex_index("z").unwrap();
    let y3 = fam.graph.vertex_index("y3").unwrap();
    assert_eq!(fam.graph.label(z, y3), 3);
    let x1 = fam.graph.vertex_index("x1").unwrap();
    let v1 = fam.graph.vertex_index("v1").unwrap();
    assert_eq!(fam.graph.label(x1, v1), 4);
    let y1 = fam.graph.vertex_index("y1").unwrap();
    assert_eq!(fam.graph.label(v1, y1), 2, "no y1--v1 edge");
}

#[test]
fn graph_pure_genus2_two_punctures() {
    let fam = build_graph(&params(2, 0, 2, Flavor::Pure, false)).unwrap();
    let names: Vec<&str> = fam.graph.vertex_names().iter().map(|s| s.as_str()).collect();
    assert_eq!(names, ["x0", "x1", "x2", "y1", "y2", "y3", "z"]);
    // Fan: all x on y1, no 4-labels anywhere.
    assert!(fam.graph.edges().iter().all(|&(_, _, m)| m == 3));
    let y1 = fam.graph.vertex_index("y1").unwrap();
    for xi in ["x0", "x1", "x2"] {
        let i = fam.graph.vertex_index(xi).unwrap();
        assert_eq!(fam.graph.label(i, y1), 3);
    }
}

#[test]
fn graph_with_boundary_has_isolated_u() {
    let fam = build_graph(&params(2, 2, 1, Flavor::Full, false)).unwrap();
    for ui in ["u1", "u2"] {
        let i = fam.graph.vertex_index(ui).unwrap();
        assert!(fam.graph.neighbors(i).is_empty());
    }
    assert_eq!(fam.role_of("u2"), Some(Role::U(2)));
}

#[test]
fn emit_genus3_no_punctures() {
    let ids: Vec<String> = emit_relators(&params(3, 0, 0, Flavor::Full, false))
        .unwrap()
        .into_iter()
        .map(|i| i.id)
        .collect();
    assert_eq!(ids, ["R1", "R2"]);
}

#[test]
fn emit_genus1_is_empty() {
    assert!(emit_relators(&params(1, 0, 0, Flavor::Full, false))
        .unwrap()
        .is_empty());
}

#[test]
fn emit_closed_torus_three_punctures() {
    let p = params(1, 0, 3, Flavor::Full, true);
    let insts = emit_relators(&p).unwrap();
    let ids: Vec<&str> = insts.iter().map(|i| i.id.as_str()).collect();
    assert_eq!(ids, ["R7", "R9b", "R9c"]);
    // R9b reads x0^3 = Delta(x1, v1, v2).
    let r9b = &insts[1];
    assert_eq!(
        r9b.lhs,
        vec![Atom::Gen {
            name: "x0".into(),
            exponent: 3
        }]
    );
    assert_eq!(
        r9b.rhs,
        vec![Atom::Delta {
            set: vec!["x1".into(), "v1".into(), "v2".into()],
            exponent: 1
        }]
    );
}

#[test]
fn emit_closed_torus_no_punctures() {
    let insts = emit_relators(&params(1, 0, 0, Flavor::Full, true)).unwrap();
    assert_eq!(insts.len(), 1);
    assert_eq!(insts[0].id, "M3");
    // (x0 y1)^6 = 1.
    let fam = build_graph(&params(1, 0, 0, Flavor::Full, true)).unwrap();
    let (lhs, rhs) = insts[0].render(&fam.graph).unwrap();
    assert_eq!(lhs.len(), 12);
    assert!(rhs.is_empty());
}

#[test]
fn emit_closed_genus2_two_punctures_exponent_zero() {
    // 2g - n - 2 = 0 here: the x0 power vanishes from the rendered word.
    let p = params(2, 0, 2, Flavor::Full, true);
    let insts = emit_relators(&p).unwrap();
    let r9a = insts.iter().find(|i| i.base == "R9a").unwrap();
    let fam = build_graph(&p).unwrap();
    let (lhs, _) = r9a.render(&fam.graph).unwrap();
    assert!(!lhs.mentions("x0"));
}

#[test]
fn emit_pure_n0_matches_closed_relation_free_bounded_set() {
    // The pure flavor with no punctures degenerates to the two relations
    // of the one-boundary mapping class group.
    for g in 1..=4 {
        let ids: Vec<String> = emit_relators(&params(g, 0, 0, Flavor::Pure, false))
            .unwrap()
            .into_iter()
            .map(|i| i.id)
            .collect();
        let expected: Vec<&str> = match g {
            1 => vec![],
            2 => vec!["PR1"],
            _ => vec!["PR1", "PR2"],
        };
        assert_eq!(ids, expected, "g = {g}");
    }
}

#[test]
fn presentation_counts() {
    // Full bounded with g >= 2, n >= 1: 2g + 2r + n + 1 generators.
    for (g, r, n) in [(2, 0, 1), (2, 1, 2), (3, 2, 1), (4, 3, 4)] {
        let p = params(g, r, n, Flavor::Full, false);
        let pres = presentation_of(&p).unwrap();
        assert_eq!(
            pres.generators().len() as u32,
            2 * g + 2 * r + n + 1,
            "(g,r,n) = ({g},{r},{n})"
        );
    }
    // Genus 1 bounded no punctures: the braid group presentation on two
    // strings-like pair {x0, y1} with no extra relators.
    let pres = presentation_of(&params(1, 0, 0, Flavor::Full, false)).unwrap();
    assert_eq!(pres.generators().len(), 2);
    assert_eq!(pres.relators().len(), 1);
    let (lhs, rhs) = pres.relators()[0].display.clone().unwrap();
    assert_eq!(lhs.to_text(), "x0 y1 x0");
    assert_eq!(rhs.to_text(), "y1 x0 y1");

    // Pure flavor, r = 0, g >= 2: (n + 1) + (2g - 1) + 1 generators.
    for (g, n) in [(2, 0), (2, 3), (3, 2)] {
        let p = params(g, 0, n, Flavor::Pure, false);
        let pres = presentation_of(&p).unwrap();
        assert_eq!(
            pres.generators().len() as u32,
            n + 2 * g + 1,
            "(g,n) = ({g},{n})"
        );
    }
}

#[test]
fn generator_docs_record_twist_names() {
    let pres = presentation_of(&params(2, 1, 2, Flavor::Full, false)).unwrap();
    assert_eq!(pres.gen_doc("x0"), Some("Dehn twist a_0"));
    assert_eq!(pres.gen_doc("z"), Some("Dehn twist c"));
    assert_eq!(pres.gen_doc("u1"), Some("Dehn twist d_1 (boundary-parallel)"));
    assert_eq!(pres.gen_doc("v1"), Some("braid twist tau_1"));
}

#[test]
fn classify_parabolic_table() {
    let fam = build_graph(&params(3, 1, 2, Flavor::Full, false)).unwrap();
    let class = |set: &[&str]| {
        let names: Vec<String> = set.iter().map(|s| s.to_string()).collect();
        classify_parabolic(&fam, &names).unwrap().0.to_string()
    };
    assert_eq!(class(&["y1", "y2", "y3", "z"]), "A4");
    assert_eq!(class(&["y1", "y2", "y3", "y4", "y5", "z"]), "E6");
    assert_eq!(class(&["x0", "y1", "y2", "y3", "y4", "y5", "z"]), "E7");
    assert_eq!(class(&["x1", "x2", "y1", "v1"]), "B4");
    assert_eq!(class(&["x2", "y1", "v1"]), "B3");
    assert_eq!(class(&["x0", "x1", "x2", "y1"]), "D4");
    assert_eq!(class(&["x0", "x1", "y1", "y2", "y3", "z"]), "D6");
    assert_eq!(class(&["x1", "y1", "y2", "y3", "z"]), "A5");
}

#[test]
fn wellformed_examples() {
    assert!(schema_wellformed(&params(2, 1, 2, Flavor::Full, false))
        .unwrap()
        .passed());
    let rep = schema_wellformed(&params(2, 0, 1, Flavor::Full, false)).unwrap();
    assert!(rep.passed());
    // R8a sets classify as D6 and A5.
    let r8a: Vec<_> = rep
        .entries
        .iter()
        .filter(|e| e.schema_id == "R8a")
        .collect();
    assert_eq!(r8a.len(), 2);
    assert_eq!(r8a[0].classified.as_deref(), Some("D6"));
    assert_eq!(r8a[1].classified.as_deref(), Some("A5"));
    // Genus 1: no D/E sets are requested at all.
    let rep = schema_wellformed(&params(1, 0, 0, Flavor::Full, false)).unwrap();
    assert!(rep.passed() && rep.entries.is_empty());
}

#[test]
fn emitted_relators_reduce_over_declared_vertices() {
    let p = params(2, 1, 2, Flavor::Full, false);
    let fam = build_graph(&p).unwrap();
    for inst in emit_relators(&p).unwrap() {
        let (lhs, rhs) = inst.render(&fam.graph).unwrap();
        let relator = lhs.concat(&rhs.inverse());
        for (name, _) in relator.syllables() {
            assert!(fam.graph.vertex_index(name).is_ok());
        }
    }
}

#[test]
fn emit_is_deterministic() {
    let p = params(3, 2, 3, Flavor::Full, false);
    let a = emit_relators(&p).unwrap();
    let b = emit_relators(&p).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tietze_eliminates_boundary_twist_via_its_defining_relator() {
    // The relator defining u1 lets the generator be removed: the relator
    // count drops by one and no remaining relator mentions u1.
    use crate::presentation::tietze_eliminate;
    let p = params(2, 2, 1, Flavor::Full, false);
    let pres = presentation_of(&p).unwrap();
    let before = pres.relators().len();
    let idx = pres
        .relators()
        .iter()
        .position(|r| r.tag.as_deref() == Some("R5"))
        .expect("R5 defines u1 at r >= 1, g >= 2");
    let reduced = tietze_eliminate(&pres, "u1", idx).unwrap();
    assert_eq!(reduced.relators().len(), before - 1);
    assert!(!reduced.generators().iter().any(|g| g == "u1"));
    for r in reduced.relators() {
        assert!(!r.word.mentions("u1"));
    }
    assert_eq!(
        pres.abelianization_invariants(),
        reduced.abelianization_invariants()
    );
}
