mod common;

use common::{acyclic_by_permutation, random_linear, random_tree};
use proptest::prelude::*;
use quadsys::hypercore::Hypergraph;
use quadsys::patterns::{is_acyclic, named_pattern, DynamicHost, Forbidden};
use quadsys::search::contains_by_enumeration;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Both deciders agree, and any witness re-validates.
fn agree(host: &Hypergraph, f: &Forbidden) -> Result<(), TestCaseError> {
    let pattern = f.realize();
    let fast = f.find_in(host);
    let slow = contains_by_enumeration(host, &pattern);
    prop_assert_eq!(fast.is_some(), slow, "pattern {} host {:?}", f, host.edges());
    if let Some(emb) = fast {
        prop_assert!(emb.validate(host, &pattern).is_ok(), "{:?}", emb.validate(host, &pattern));
    }
    Ok(())
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn trees_agree_with_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = if rng.gen_bool(0.75) { 4 } else { 3 };
        let n = rng.gen_range(r..=12);
        let host = { let t = rng.gen_range(1..40); random_linear(&mut rng, r, n, t) };
        let k = rng.gen_range(1..=3);
        let f = Forbidden::Tree(random_tree(&mut rng, r, k));
        agree(&host, &f)?;
    }

    #[test]
    fn named_patterns_agree_with_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=12);
        let host = { let t = rng.gen_range(1..40); random_linear(&mut rng, 4, n, t) };
        for name in ["P2", "P3", "S2", "S3", "M2", "M3"] {
            agree(&host, &named_pattern(name).unwrap())?;
        }
    }

    #[test]
    fn e4plus_and_s3plus_agree_with_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(8..=16);
        let host = { let t = rng.gen_range(4..60); random_linear(&mut rng, 4, n, t) };
        for name in ["E4plus", "S3plus", "P4"] {
            agree(&host, &named_pattern(name).unwrap())?;
        }
    }

    #[test]
    fn find_through_uses_the_given_edge(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(6..=12);
        let host = random_linear(&mut rng, 4, n, 30);
        let k = rng.gen_range(1..=3);
        let f = Forbidden::Tree(random_tree(&mut rng, 4, k));
        let pattern = f.realize();
        let mut dynamic = DynamicHost::new(n);
        let mut any = false;
        for e in host.edges() {
            let idx = dynamic.push(&e.to_vec());
            if let Some(emb) = f.find_through(&dynamic, idx) {
                prop_assert!(emb.edge_map.contains(&idx));
                prop_assert!(emb.validate(&dynamic, &pattern).is_ok());
                any = true;
            }
        }
        // some copy appears with its last edge exactly when the host has one
        prop_assert_eq!(any, contains_by_enumeration(&host, &pattern));
    }

    #[test]
    fn acyclicity_matches_removal_order_search(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = if rng.gen_bool(0.75) { 4 } else { 3 };
        let n = rng.gen_range(r + 2..=14);
        let mut h = { let t = rng.gen_range(2..30); random_linear(&mut rng, r, n, t) };
        if h.edge_count() > 6 {
            let keep: Vec<Vec<usize>> = h.edges()[..6].iter().map(|e| e.to_vec()).collect();
            h = Hypergraph::new(r, n, keep).unwrap();
        }
        let a = is_acyclic(&h).unwrap();
        prop_assert_eq!(a.acyclic, acyclic_by_permutation(&h), "{:?}", h.edges());
        if a.acyclic {
            prop_assert!(a.verify(&h));
        }
    }

    #[test]
    fn matchings_are_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=16);
        let host = { let t = rng.gen_range(1..50); random_linear(&mut rng, 4, n, t) };
        let mut prev = true;
        for k in 1..=4 {
            let has = named_pattern(&format!("M{k}")).unwrap().find_in(&host).is_some();
            prop_assert!(prev || !has, "M{} found without M{}", k, k - 1);
            prev = has;
        }
    }
}

#[test]
fn tree_patterns_are_acyclic() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let k = rng.gen_range(1..=6);
        let t = random_tree(&mut rng, 4, k);
        let h = t.realize();
        let a = is_acyclic(&h).unwrap();
        assert!(a.acyclic && a.verify(&h), "{:?}", t.attachments());
    }
}
