use num_rational::Ratio;
use quadsys::bounds::{
    epsilon, g_bounds, johnson_bound, p3_bound, packing_number, packing_value, path_bound,
    prop1_upper, prop2_lower, th11_bound, th12_bound, th13_upper, th14_threshold,
};

#[test]
fn pair_capacity_by_direct_count() {
    // each point lies in at most floor((m-1)/3) blocks; count point-block incidences
    for m in 0..200i64 {
        let per_point = if m >= 1 { (m - 1) / 3 } else { 0 };
        assert_eq!(johnson_bound(m), m * per_point / 4, "m={m}");
    }
}

#[test]
fn packing_values_from_the_table() {
    let expected = [(4, 1), (5, 1), (6, 1), (7, 2), (8, 2), (9, 3), (10, 5), (11, 6), (12, 9), (13, 13), (16, 20), (17, 20), (19, 25)];
    for (m, d) in expected {
        assert_eq!(packing_value(m), d, "m={m}");
    }
}

#[test]
fn steiner_orders_are_exactly_full() {
    for m in 4..300i64 {
        let full = packing_value(m) * 12 == m * (m - 1);
        assert_eq!(full, matches!(m % 12, 1 | 4), "m={m}");
        let r = packing_number(m).unwrap();
        assert_eq!(r.exact, Some(packing_value(m)));
    }
}

#[test]
fn g_formula_values() {
    let r = g_bounds(40, 3).unwrap();
    assert_eq!(r.lower, Ratio::new(119, 6));
    assert_eq!(r.upper, Ratio::new(49, 2));
    // by hand: 2 * 12 + 1/6 - 7/2 - 5/6
    assert_eq!(Ratio::new(24, 1) + Ratio::new(1, 6) - Ratio::new(7, 2) - Ratio::new(5, 6), Ratio::new(119, 6));
    assert_eq!(g_bounds(16, 2).unwrap().exact, Some(5));
    assert_eq!(th14_threshold(3), 151);
}

#[test]
fn g_bounds_are_ordered() {
    for k in 2..=20i64 {
        for n in (4 * k - 4)..=10_000 {
            let r = g_bounds(n, k).unwrap();
            assert!(r.lower_valid);
            assert!(r.lower <= r.upper, "n={n} k={k}");
        }
    }
}

#[test]
fn epsilon_table() {
    let table = [0, 0, 0, 1, 1, 2, 4, 5, 8];
    for n in 4..200i64 {
        assert_eq!(epsilon(n).unwrap(), table[((n - 4) % 9) as usize]);
    }
    assert!(epsilon(3).is_err());
}

#[test]
fn sweep_up_to_sixty() {
    for n in 13..=60i64 {
        let t12 = th12_bound(n).unwrap();
        assert!(t12.lower <= t12.upper);
        let p3 = p3_bound(n).unwrap();
        assert!(p3.upper <= th13_upper(n, 3));
        assert!(p3.is_consistent());
        let t11 = th11_bound(n).unwrap();
        assert!(t11.is_consistent());
        if n % 16 == 0 {
            let (l, ok) = prop2_lower(n, 6);
            assert!(ok);
            assert_eq!(Ratio::from_integer(t11.exact.unwrap()), l);
        }
        for k in 2..=10 {
            assert!(path_bound(n, k).unwrap().is_consistent());
            assert!(prop1_upper(n, k).unwrap() >= 0);
        }
    }
}

#[test]
fn prop2_values() {
    assert_eq!(prop2_lower(13, 5), (Ratio::from_integer(13), true));
    assert_eq!(prop2_lower(16, 6), (Ratio::from_integer(20), true));
    assert!(!prop2_lower(14, 5).1);
    assert!(prop1_upper(10, 1).is_err());
}
