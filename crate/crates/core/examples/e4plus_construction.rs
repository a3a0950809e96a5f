//! E4+-free systems from copies of STS(9) plus four apex vertices, with the
//! augmentation towards epsilon(n) extra edges.
//!
//! Usage: cargo run --example e4plus_construction [max_n]

use quadsys::bounds::th12_bound;
use quadsys::constructions::e4plus_lower_construction;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(40);
    println!("{:>4} {:>6} {:>5} {:>7} {:>6} {:>6}", "n", "copies", "base", "eps", "added", "edges");
    for n in 13..=max_n {
        let e = e4plus_lower_construction(n).expect("n >= 13");
        let b = th12_bound(n as i64).unwrap();
        assert!(e.construction.certificate.all_passed(), "{}", e.construction.certificate);
        println!(
            "{n:>4} {:>6} {:>5} {:>7} {:>6} {:>6}  (upper {})",
            e.copies,
            e.base_edges,
            e.epsilon,
            e.augmented,
            e.construction.hypergraph.edge_count(),
            b.upper
        );
        for f in &e.construction.findings {
            println!("      {f}");
        }
    }
}
