use super::*;

fn standard(tag: &str) -> CoxeterGraph {
    StandardType::parse(tag).unwrap().instantiate()
}

#[test]
fn classify_path_is_a4() {
    let g = CoxeterGraph::new(
        &["a", "b", "c", "d"],
        &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3)],
    )
    .unwrap();
    let (ty, map) = g.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "A4");
    assert_eq!(map, vec![1, 2, 3, 4]);
}

#[test]
fn classify_star_is_d4_with_center_x3() {
    let g = CoxeterGraph::new(
        &["p", "q", "y", "r"],
        &[("p", "y", 3), ("q", "y", 3), ("r", "y", 3)],
    )
    .unwrap();
    let (ty, map) = g.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "D4");
    // Center maps to x3; the leaves take the least available numbers in
    // input order.
    assert_eq!(map[2], 3);
    assert_eq!(map, vec![1, 2, 3, 4]);
}

#[test]
fn classify_five_path_with_middle_pendant_is_e6() {
    let g = CoxeterGraph::new(
        &["a", "b", "c", "d", "e", "p"],
        &[
            ("a", "b", 3),
            ("b", "c", 3),
            ("c", "d", 3),
            ("d", "e", 3),
            ("p", "c", 3),
        ],
    )
    .unwrap();
    let (ty, map) = g.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "E6");
    assert_eq!(map[5], 6, "pendant maps to x6");
}

#[test]
fn classify_four_labeled_end_is_b3() {
    let g = CoxeterGraph::new(&["y1", "x", "v"], &[("y1", "x", 3), ("x", "v", 4)]).unwrap();
    let (ty, map) = g.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "B3");
    assert_eq!(map[2], 1, "the vertex at the 4-edge end maps to x1");
    assert_eq!(map, vec![3, 2, 1]);
}

#[test]
fn classify_rejects_infinite_and_unsupported() {
    // Triangle: affine A~2.
    let g = CoxeterGraph::new(
        &["a", "b", "c"],
        &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)],
    )
    .unwrap();
    assert!(g.classify_finite_type().is_none());

    // Four leaves on a center: affine D~4.
    let g = CoxeterGraph::new(
        &["a", "b", "c", "d", "y"],
        &[("a", "y", 3), ("b", "y", 3), ("c", "y", 3), ("d", "y", 3)],
    )
    .unwrap();
    assert!(g.classify_finite_type().is_none());

    // Interior 4-label on a 5-path: not a finite type.
    let g = CoxeterGraph::new(
        &["a", "b", "c", "d", "e"],
        &[("a", "b", 3), ("b", "c", 4), ("c", "d", 3), ("d", "e", 3)],
    )
    .unwrap();
    assert!(g.classify_finite_type().is_none());

    // Two 4-labels: affine C~3.
    let g = CoxeterGraph::new(
        &["a", "b", "c", "d"],
        &[("a", "b", 4), ("b", "c", 3), ("c", "d", 4)],
    )
    .unwrap();
    assert!(g.classify_finite_type().is_none());
}

#[test]
fn classify_round_trips_all_supported_types_up_to_rank_8() {
    let mut types = Vec::new();
    for l in 1..=8 {
        types.push(StandardType::new(Family::A, l).unwrap());
    }
    for l in 2..=8 {
        types.push(StandardType::new(Family::B, l).unwrap());
    }
    for l in 4..=8 {
        types.push(StandardType::new(Family::D, l).unwrap());
    }
    for l in 6..=8 {
        types.push(StandardType::new(Family::E, l).unwrap());
    }
    types.push(StandardType::new(Family::F, 4).unwrap());
    types.push(StandardType::new(Family::G, 2).unwrap());

    for ty in types {
        let g = ty.instantiate();
        let (got, map) = g.classify_finite_type().unwrap_or_else(|| {
            panic!("{ty} did not classify");
        });
        assert_eq!(got, ty);
        // The canonical graph must classify with the identity numbering.
        let idmap: Vec<usize> = (1..=ty.rank).collect();
        assert_eq!(map, idmap, "numbering of {ty}");
    }
}

#[test]
fn generator_squares_to_identity() {
    let g = standard("A2");
    let s = g.generator("x1").unwrap();
    assert!(s.mul(&s).is_identity());
}

#[test]
fn braid_relation_projects_to_w() {
    let g = standard("A2");
    let s1 = g.generator("x1").unwrap();
    let s2 = g.generator("x2").unwrap();
    assert_eq!(s1.mul(&s2).mul(&s1), s2.mul(&s1).mul(&s2));
}

#[test]
fn b2_rotation_has_order_four() {
    let g = standard("B2");
    let s1 = g.generator("x1").unwrap();
    let s2 = g.generator("x2").unwrap();
    let c = s1.mul(&s2);
    let mut p = g.identity();
    for _ in 0..4 {
        p = p.mul(&c);
    }
    assert!(p.is_identity());
    let mut q = g.identity();
    for _ in 0..3 {
        q = q.mul(&c);
    }
    assert!(!q.is_identity());
}

#[test]
#[should_panic(expected = "different Coxeter groups")]
fn mixing_graphs_panics() {
    let a = standard("A2");
    let b = standard("B2");
    let u = a.generator("x1").unwrap();
    let v = b.generator("x1").unwrap();
    let _ = u.mul(&v);
}

#[test]
fn descent_examples() {
    let g = standard("A3");
    assert!(g.identity().left_descents().is_empty());
    let s = g.generator("x2").unwrap();
    assert_eq!(s.left_descents(), vec![1]);
    assert_eq!(s.right_descents(), vec![1]);

    // The longest element has every generator as a descent; BFS confirms it
    // is the unique maximum-length element.
    let w0 = g.longest_element().unwrap();
    assert_eq!(w0.left_descents(), vec![0, 1, 2]);
    let all = g.enumerate_small_group(2000).unwrap();
    let max_len = all.iter().map(|u| u.len()).max().unwrap();
    assert_eq!(w0.len(), max_len);
    for u in &all {
        if u.len() == max_len {
            assert_eq!(*u, w0);
        }
        if u.left_descents().is_empty() {
            assert!(u.is_identity());
        }
        if u.left_descents().len() == g.rank() {
            assert_eq!(*u, w0);
        }
    }
}

#[test]
fn descent_characterizations_exhaustive_on_small_groups() {
    // Empty descent set only for the identity; full descent set only for
    // the longest element. Exhaustive over the small groups.
    for tag in ["A3", "B3", "D4"] {
        let g = standard(tag);
        let w0 = g.longest_element().unwrap();
        for u in g.enumerate_small_group(2000).unwrap() {
            assert_eq!(u.left_descents().is_empty(), u.is_identity(), "{tag}");
            assert_eq!(u.left_descents().len() == g.rank(), u == w0, "{tag}");
            assert_eq!(u.right_descents().is_empty(), u.is_identity(), "{tag}");
            assert_eq!(u.right_descents().len() == g.rank(), u == w0, "{tag}");
        }
    }
}

#[test]
fn longest_element_lengths_match_root_counts() {
    // length(w0) = number of positive roots, for every supported type of
    // rank <= 6.
    let mut tags: Vec<String> = Vec::new();
    for l in 1..=6 {
        tags.push(format!("A{l}"));
    }
    for l in 2..=6 {
        tags.push(format!("B{l}"));
    }
    for l in 4..=6 {
        tags.push(format!("D{l}"));
    }
    tags.push("E6".into());
    tags.push("F4".into());
    tags.push("G2".into());
    for tag in tags {
        let g = standard(&tag);
        let w0 = g.longest_element().unwrap();
        assert_eq!(
            w0.len(),
            g.positive_root_count().unwrap(),
            "length of w0 in {tag}"
        );
    }
    // Spot checks against the classical counts.
    assert_eq!(standard("A1").positive_root_count().unwrap(), 1);
    assert_eq!(standard("A2").positive_root_count().unwrap(), 3);
    assert_eq!(standard("D4").positive_root_count().unwrap(), 12);
    assert_eq!(standard("E6").positive_root_count().unwrap(), 36);
}

#[test]
fn group_orders_by_bfs() {
    assert_eq!(standard("A3").enumerate_small_group(2000).unwrap().len(), 24);
    assert_eq!(standard("B3").enumerate_small_group(2000).unwrap().len(), 48);
    assert_eq!(standard("D4").enumerate_small_group(2000).unwrap().len(), 192);
    assert_eq!(standard("G2").enumerate_small_group(2000).unwrap().len(), 12);
    assert!(matches!(
        standard("B4").enumerate_small_group(100),
        Err(GraphError::OrderCapExceeded(100))
    ));
}

#[test]
fn gcd_basics() {
    let g = standard("A3");
    let all = g.enumerate_small_group(2000).unwrap();
    let w0 = g.longest_element().unwrap();
    for u in all.iter().take(8) {
        assert!(weak_order_gcd(u, &g.identity()).is_identity());
        assert_eq!(weak_order_gcd(u, u), *u);
        assert_eq!(weak_order_gcd(&w0, u), *u);
    }
}

#[test]
fn gcd_matches_bruteforce_meet_on_a3() {
    let g = standard("A3");
    let all = g.enumerate_small_group(2000).unwrap();
    for u in &all {
        for v in &all {
            let fast = weak_order_gcd(u, v);
            let mut best: Option<&CoxeterElement> = None;
            for c in &all {
                if c.is_prefix_of(u) && c.is_prefix_of(v)
                    && best.is_none_or(|b| c.len() > b.len())
                {
                    best = Some(c);
                }
            }
            let best = best.unwrap();
            assert_eq!(fast, *best);
            // The meet is the unique maximal common prefix.
            for c in &all {
                if c.is_prefix_of(u) && c.is_prefix_of(v) {
                    assert!(c.is_prefix_of(best));
                }
            }
        }
    }
}

#[test]
fn chord_diagram_examples() {
    // Two non-interleaved chords: edgeless.
    let d = ChordDiagram::new(vec![(0, 1), (2, 3)]).unwrap();
    let g = chord_to_coxeter(&d);
    assert!(g.edges().is_empty());

    // Two interleaved chords: one plain edge.
    let d = ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap();
    let g = chord_to_coxeter(&d);
    assert_eq!(g.edges(), vec![(0, 1, 3)]);

    // 1 crosses 2, 2 crosses 3, 1 disjoint from 3: the path A3.
    // Chord 1 = (0,2), chord 2 = (1,4), chord 3 = (3,5).
    let d = ChordDiagram::new(vec![(0, 2), (1, 4), (3, 5)]).unwrap();
    let g = chord_to_coxeter(&d);
    let (ty, _) = g.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "A3");
    assert_eq!(g.edges().len(), 2);

    assert!(ChordDiagram::new(vec![(0, 0), (1, 2)]).is_err());
    assert!(ChordDiagram::new(vec![(0, 1), (1, 2)]).is_err());
    assert!(ChordDiagram::new(vec![(0, 5), (1, 2)]).is_err());
}

#[test]
fn embedded_graph_examples() {
    // Path on three vertices: two edges sharing a vertex give A2.
    let e = EmbeddedGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let g = embedded_graph_to_coxeter(&e);
    assert_eq!(g.classify_finite_type().unwrap().0.to_string(), "A2");

    // Two disjoint edges: edgeless Coxeter graph.
    let e = EmbeddedGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
    let g = embedded_graph_to_coxeter(&e);
    assert!(g.edges().is_empty());

    // Triangle: 3-cycle with all labels 3.
    let e = EmbeddedGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let g = embedded_graph_to_coxeter(&e);
    assert_eq!(g.edges().len(), 3);
    assert!(g.edges().iter().all(|&(_, _, m)| m == 3));
    assert!(g.classify_finite_type().is_none());

    assert!(EmbeddedGraph::new(3, vec![(0, 0)]).is_err());
    assert!(EmbeddedGraph::new(3, vec![(0, 1), (1, 0)]).is_err());
}

#[test]
fn builders_only_emit_labels_2_and_3() {
    let d = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
    let g = chord_to_coxeter(&d);
    assert!(g.edges().iter().all(|&(_, _, m)| m == 3));
    let e = EmbeddedGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let g = embedded_graph_to_coxeter(&e);
    assert!(g.edges().iter().all(|&(_, _, m)| m == 3));
}

#[test]
fn graph_text_format_round_trip() {
    let text = "# a B3 shape\nvertex y1\nvertex x\nvertex v\nedge y1 x\nedge x v 4\n";
    let g = CoxeterGraph::parse(text).unwrap();
    assert_eq!(g.rank(), 3);
    assert_eq!(g.classify_finite_type().unwrap().0.to_string(), "B3");
    let printed = g.to_text();
    let g2 = CoxeterGraph::parse(&printed).unwrap();
    assert_eq!(g, g2);
    assert_eq!(printed, g2.to_text());
}

#[test]
fn graph_text_format_rejects_garbage() {
    assert!(CoxeterGraph::parse("vertex a\nedge a b\n").is_err());
    assert!(CoxeterGraph::parse("vertx a\n").is_err());
    assert!(CoxeterGraph::parse("vertex a\nvertex a\n").is_err());
    assert!(CoxeterGraph::parse("vertex a\nvertex b\nedge a b 5\n").is_err());
}

#[test]
fn d_shaped_graph_small_ranks() {
    let d2 = d_shaped_graph(2);
    assert!(d2.edges().is_empty());
    let d3 = d_shaped_graph(3);
    assert_eq!(d3.classify_finite_type().unwrap().0.to_string(), "A3");
}

#[test]
fn longest_element_small_cases() {
    let a1 = standard("A1");
    let w0 = a1.longest_element().unwrap();
    assert_eq!(w0.len(), 1);
    assert_eq!(w0, a1.generator("x1").unwrap());

    let a2 = standard("A2");
    let w0 = a2.longest_element().unwrap();
    assert_eq!(w0.len(), 3);
    assert_eq!(w0.reduced_word(), vec![0, 1, 0]); // x1 x2 x1

    let d4 = standard("D4");
    assert_eq!(d4.longest_element().unwrap().len(), 12);
}

#[test]
fn degenerate_graphs() {
    let empty = CoxeterGraph::new::<&str>(&[], &[]).unwrap();
    assert_eq!(empty.rank(), 0);
    assert!(empty.classify_finite_type().is_none());
    assert!(empty.is_finite_type());
    assert!(empty.longest_element().unwrap().is_identity());

    let single = CoxeterGraph::new(&["s"], &[]).unwrap();
    let (ty, map) = single.classify_finite_type().unwrap();
    assert_eq!(ty.to_string(), "A1");
    assert_eq!(map, vec![1]);

    // Disconnected but finite: no classification, but Garside tables exist.
    let pair = CoxeterGraph::new(&["a", "b"], &[]).unwrap();
    assert!(pair.classify_finite_type().is_none());
    assert!(pair.is_finite_type());
    assert_eq!(pair.longest_element().unwrap().len(), 2);
}
