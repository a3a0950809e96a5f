use quadsys::bounds::{check_consistency, g_bounds, p3_bound, th11_bound, th12_bound};
use quadsys::constructions::{
    classify_leave, e4plus_lower_construction, g_lower_construction, lemma41_leave,
    p3_lower_construction, packing_optimal_small, parallel_classes, prop2_construction, repeat,
    steiner_2_4_13, steiner_2_4_16, steiner_2_4_25, steiner_2_4_28, sts9_resolvable, th11_lower_construction, LeaveClass,
};
use quadsys::patterns::named_pattern;
use quadsys::search::{canonical_form, contains_by_enumeration};

#[test]
fn steiner_systems() {
    let s13 = steiner_2_4_13();
    let s16 = steiner_2_4_16();
    assert!(s13.certificate.all_passed() && s16.certificate.all_passed());
    assert_eq!(s13.hypergraph.edge_count(), 13);
    assert_eq!(s16.hypergraph.edge_count(), 20);
    assert_eq!(s13.hypergraph.regular_degree(), Some(4));
    assert_eq!(s16.hypergraph.regular_degree(), Some(5));
    assert!(s13.hypergraph.pair_coverage().unwrap().is_complete());
    assert!(s16.hypergraph.pair_coverage().unwrap().is_complete());
}

#[test]
fn developed_steiner_systems() {
    for (c, n) in [(steiner_2_4_25(), 25), (steiner_2_4_28(), 28)] {
        let h = &c.hypergraph;
        assert!(c.certificate.all_passed(), "{}", c.certificate);
        // every pair counted directly, exactly once
        let mut count = vec![0u8; n * n];
        for e in h.edges() {
            let e: Vec<usize> = e.iter().collect();
            for a in 0..4 {
                for b in a + 1..4 {
                    count[e[a] * n + e[b]] += 1;
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                assert_eq!(count[u * n + v], 1, "n = {n}, pair {u} {v}");
            }
        }
        assert_eq!(h.edge_count(), n * (n - 1) / 12);
    }
}

#[test]
fn extremal_freeness_against_enumeration() {
    let s13 = steiner_2_4_13().hypergraph;
    let s16 = steiner_2_4_16().hypergraph;
    for (host, names) in [(&s13, ["P3", "M2"]), (&s16, ["P4", "S3plus"])] {
        for name in names {
            let f = named_pattern(name).unwrap();
            assert!(f.find_in(host).is_none(), "{name}");
            assert!(!contains_by_enumeration(host, &f.realize()), "{name}");
        }
        let two = repeat(host, 2).unwrap();
        assert!(two.is_linear());
        for name in names.iter().filter(|n| !n.starts_with('M')) {
            assert!(named_pattern(name).unwrap().find_in(&two).is_none());
        }
    }
}

#[test]
fn sts9_classes() {
    let t = sts9_resolvable();
    assert!(t.certify().all_passed());
    assert_eq!(t.classes.len(), 4);
    // triples from different classes always meet in exactly one point
    for (i, a) in t.classes.iter().enumerate() {
        for b in &t.classes[i + 1..] {
            for x in a {
                for y in b {
                    assert_eq!(x.iter().filter(|v| y.contains(v)).count(), 1);
                }
            }
        }
    }
}

#[test]
fn e4plus_construction_range() {
    let e4 = named_pattern("E4plus").unwrap();
    for n in 13..=60 {
        let c = e4plus_lower_construction(n).unwrap();
        let h = &c.construction.hypergraph;
        assert!(c.construction.certificate.all_passed(), "n={n}");
        assert!(h.is_linear());
        assert!(e4.find_in(h).is_none());
        assert!(h.edge_count() >= 12 * ((n - 4) / 9));
        let b = th12_bound(n as i64).unwrap();
        assert!(check_consistency(&b, Some(h), false, None).passed());
        if n <= 22 {
            assert!(!contains_by_enumeration(h, &e4.realize()), "n={n}");
        }
    }
}

#[test]
fn prop2_copies() {
    for (n, k) in [(13, 5), (26, 5), (16, 6), (48, 6), (8, 2)] {
        let c = prop2_construction(n, k).unwrap();
        assert!(c.certificate.all_passed(), "{}", c.certificate);
        assert_eq!(c.hypergraph.edge_count() * 4, n * (k - 1));
    }
}

#[test]
fn p3_and_th11_within_bounds() {
    for n in 0..=60 {
        let c = p3_lower_construction(n).unwrap();
        assert!(c.certificate.all_passed());
        let b = p3_bound(n as i64).unwrap();
        assert!(check_consistency(&b, Some(&c.hypergraph), true, None).passed(), "n={n}");
        let c = th11_lower_construction(n).unwrap();
        assert!(c.certificate.all_passed());
        let b = th11_bound(n as i64).unwrap();
        assert!(check_consistency(&b, Some(&c.hypergraph), true, None).passed(), "n={n}");
    }
}

#[test]
fn g_construction() {
    for n in [7, 16, 40] {
        let g = g_lower_construction(n, 2, 0).unwrap();
        assert_eq!(g.construction.hypergraph.edge_count(), (n - 1) / 3);
    }
    for k in 3..=5 {
        for n in [4 * k - 4, 4 * k, 4 * k + 8] {
            let g = g_lower_construction(n, k, 0).unwrap();
            let h = &g.construction.hypergraph;
            assert!(h.edges().iter().all(|e| e.iter().any(|v| v < k - 1)));
            let b = g_bounds(n as i64, k as i64).unwrap();
            assert!(h.edge_count() as i64 >= b.lower_int(), "n={n} k={k}");
            assert!(h.edge_count() as i64 <= b.upper_int(), "n={n} k={k}");
        }
    }
    assert!(g_lower_construction(10, 4, 0).is_err());
    // the seed changes tie-breaks only
    let a = g_lower_construction(40, 6, 1).unwrap();
    let b = g_lower_construction(40, 6, 1).unwrap();
    assert_eq!(a.construction.hypergraph, b.construction.hypergraph);
}

#[test]
fn parallel_classes_beyond_the_grid() {
    // 12 points: the grid gives 2 classes, 3 need the backtracking search
    let pc = parallel_classes(12, 3, 5, 2_000_000);
    assert!(pc.complete);
    let mut pairs = std::collections::HashSet::new();
    for class in &pc.classes {
        let mut pts: Vec<usize> = class.iter().flatten().copied().collect();
        pts.sort_unstable();
        assert_eq!(pts, (0..12).collect::<Vec<_>>());
        for t in class {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                assert!(pairs.insert((a, b)));
            }
        }
    }
}

#[test]
fn tabulated_packings() {
    for (m, d) in [(8, 2), (9, 3), (10, 5), (11, 6), (17, 20), (19, 25)] {
        let c = packing_optimal_small(m).unwrap();
        assert!(c.certificate.all_passed());
        assert_eq!(c.hypergraph.edge_count(), d);
    }
    let leave = packing_optimal_small(17).unwrap().hypergraph.leave_graph().unwrap();
    assert_eq!(classify_leave(&leave), LeaveClass::Star(16));
}

#[test]
fn leave_shapes_by_residue() {
    for m in 4..=40 {
        if let Some(class) = lemma41_leave(m) {
            let g = class.render(m).unwrap();
            assert_eq!(classify_leave(&g), class, "m={m}");
            // the leave takes up exactly what the optimal packing leaves over
            let pairs = m * (m - 1) / 2 - 6 * quadsys::bounds::packing_value(m as i64) as usize;
            assert_eq!(class.pair_count(), Some(pairs), "m={m}");
        }
    }
}

#[test]
fn relabeled_designs_stay_isomorphic() {
    let a = steiner_2_4_16().hypergraph;
    let perm: Vec<usize> = (0..16).rev().collect();
    let b = a.relabel(&perm).unwrap();
    assert_eq!(canonical_form(&a).unwrap().code, canonical_form(&b).unwrap().code);
}
