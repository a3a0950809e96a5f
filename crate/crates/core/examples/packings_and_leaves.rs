//! Optimal 2-(m,4,1) packings: exact search for small m, the tabulated
//! packings otherwise, and the shape of what they leave uncovered.

use quadsys::bounds::packing_value;
use quadsys::constructions::{classify_leave, lemma41_leave, packing_optimal_small, PACKING_TABLE_ORDERS};
use quadsys::search::{exact_packing, Budget};

fn main() {
    for m in 4..=13 {
        let r = exact_packing(m, Budget::default()).expect("m is small");
        let leave = classify_leave(&r.witness.leave_graph().unwrap());
        let expected = lemma41_leave(m).map_or("-".to_string(), |c| c.to_string());
        println!(
            "m={m:>2}  search {:>2}  formula {:>2}  leave {leave:<8} expected {expected}  ({} nodes)",
            r.value,
            packing_value(m as i64),
            r.nodes
        );
    }
    for m in PACKING_TABLE_ORDERS {
        let c = packing_optimal_small(m).unwrap();
        let leave = classify_leave(&c.hypergraph.leave_graph().unwrap());
        println!(
            "m={m:>2}  table  {:>2}  formula {:>2}  leave {leave}  certificate {}",
            c.hypergraph.edge_count(),
            packing_value(m as i64),
            if c.certificate.all_passed() { "ok" } else { "FAILED" }
        );
    }
}
