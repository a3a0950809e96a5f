//! The closed-form bounds side by side for a range of n.

use quadsys::bounds::{epsilon, p3_bound, path_bound, prop1_upper, th11_bound, th12_bound};

fn main() {
    println!(
        "{:>3} {:>10} {:>15} {:>11} {:>3} {:>10} {:>10}",
        "n", "P3", "S3plus|P4", "E4plus", "eps", "P4 (2.5kn)", "T_3 (3k-5)n"
    );
    for n in (13..=64).step_by(3) {
        let n = n as i64;
        let p3 = p3_bound(n).unwrap();
        let t11 = th11_bound(n).unwrap();
        let t12 = th12_bound(n).unwrap();
        let p4 = path_bound(n, 4).unwrap();
        println!(
            "{n:>3} {:>4}..{:<4} {:>6}..{:<7} {:>4}..{:<5} {:>3} {:>10} {:>10}",
            (p3.lower),
            (p3.upper),
            (t11.lower),
            (t11.upper),
            (t12.lower),
            (t12.upper),
            epsilon(n).unwrap(),
            (p4.upper),
            prop1_upper(n, 3).unwrap()
        );
    }
}
