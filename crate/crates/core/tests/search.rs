mod common;

use common::random_perm;
use quadsys::bounds::{johnson_bound, packing_value};
use quadsys::constructions::steiner_2_4_13;
use quadsys::patterns::{named_pattern, Forbidden};
use quadsys::search::{
    brute_force_ex, canonical_form, exact_ex, exact_ex_without_rejection, exact_packing, Budget,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family(names: &[&str]) -> Vec<Forbidden> {
    names.iter().map(|n| named_pattern(n).unwrap()).collect()
}

#[test]
fn exact_matches_brute_force() {
    for names in [
        &["P2"][..],
        &["P3"],
        &["M2"],
        &["S2"],
        &["S3"],
        &["E4plus"],
        &["P2", "M2"],
        &["T:0.1,0.2"],
    ] {
        let f = family(names);
        for n in 4..=8 {
            let fast = exact_ex(n, &f, Budget::unlimited()).unwrap();
            assert!(fast.completed);
            assert!(fast.verify(&f));
            let slow = brute_force_ex(n, &f).unwrap();
            assert_eq!(fast.value, slow, "{names:?} n={n}");
        }
    }
}

#[test]
fn isomorph_rejection_loses_nothing() {
    for names in [&["P3"][..], &["M2"], &["S3"], &["S3plus"], &["M3"], &["P4"]] {
        let f = family(names);
        for n in 4..=11 {
            let a = exact_ex(n, &f, Budget::unlimited()).unwrap();
            let b = exact_ex_without_rejection(n, &f, Budget::unlimited()).unwrap();
            assert!(a.completed && b.completed);
            assert_eq!(a.value, b.value, "{names:?} n={n}");
        }
    }
}

#[test]
fn monotone_in_n_and_within_pair_capacity() {
    for name in ["P2", "P3", "M2", "S3", "E4plus"] {
        let f = family(&[name]);
        let mut prev = 0;
        for n in 4..=12 {
            let r = exact_ex(n, &f, Budget::default()).unwrap();
            assert!(r.completed, "{name} n={n}");
            assert!(r.value >= prev, "{name}: ex({n}) = {} < ex({}) = {prev}", r.value, n - 1);
            assert!(r.value as i64 <= johnson_bound(n as i64));
            prev = r.value;
        }
    }
}

#[test]
fn small_known_values() {
    // a P2-free linear system is a set of disjoint edges
    for n in 4..=12 {
        let r = exact_ex(n, &family(&["P2"]), Budget::default()).unwrap();
        assert_eq!(r.value, n / 4);
    }
    // M2-free: pairwise intersecting, and linear
    let r = exact_ex(13, &family(&["M2"]), Budget::default()).unwrap();
    assert_eq!(r.value, 13);
    let r = exact_ex(13, &family(&["P3"]), Budget::default()).unwrap();
    assert!(r.value <= 13);
}

#[test]
fn packings_match_the_formula() {
    for m in 4..=13 {
        let r = exact_packing(m, Budget::default()).unwrap();
        assert!(r.completed, "m={m}");
        assert!(r.verify(&[]));
        assert_eq!(r.value as i64, packing_value(m as i64), "m={m}");
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let r = exact_ex(12, &family(&["P4"]), Budget::new(5, None)).unwrap();
    assert!(!r.completed);
    assert!(r.verify(&family(&["P4"])));
}

#[test]
fn search_output_is_deterministic() {
    let f = family(&["S3"]);
    let a = exact_ex(10, &f, Budget::default()).unwrap();
    let b = exact_ex(10, &f, Budget::default()).unwrap();
    assert_eq!(a.kv_lines(), b.kv_lines());
    assert_eq!(a.witness, b.witness);
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let s13 = steiner_2_4_13().hypergraph;
    let base = canonical_form(&s13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let perm = random_perm(&mut rng, 13);
        let g = s13.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&g).unwrap().code, base.code);
    }
}

#[test]
fn canonical_form_separates_non_isomorphic() {
    // a 3-path and a 3-star have the same degree multiset of edges but differ
    let p3 = named_pattern("P3").unwrap().realize();
    let s3 = named_pattern("S3").unwrap().realize();
    assert_ne!(canonical_form(&p3).unwrap().code, canonical_form(&s3).unwrap().code);
    // relabeling by the returned labeling gives the same code
    let c = canonical_form(&p3).unwrap();
    let again = canonical_form(&p3.relabel(&c.labeling).unwrap()).unwrap();
    assert_eq!(again.code, c.code);
}
