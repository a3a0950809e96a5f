//! Quadruples through a fixed (k-1)-set: the construction against the
//! closed-form lower and upper bounds.

use quadsys::bounds::{fmt_rational, g_bounds, th14_threshold};
use quadsys::constructions::g_lower_construction;

fn main() {
    for k in 2..=6 {
        println!("k={k}: matching number agrees with g(n,{k}) for n > {}", th14_threshold(k as i64));
        for n in [4 * k - 4, 4 * k, 4 * k + 8, 40, 60] {
            let b = g_bounds(n as i64, k as i64).unwrap();
            match g_lower_construction(n, k, 0) {
                Ok(g) => println!(
                    "  n={n:>2}  lower {:>18}  built {:>3}  upper {:>5}  classes complete: {}",
                    fmt_rational(b.lower),
                    g.construction.hypergraph.edge_count(),
                    fmt_rational(b.upper),
                    g.classes_complete
                ),
                Err(e) => println!("  n={n:>2}  {e}"),
            }
        }
    }
}
