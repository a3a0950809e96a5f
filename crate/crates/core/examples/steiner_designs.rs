//! The two Steiner systems S(2,4,13) and S(2,4,16), with their certificates,
//! written out in the text format.

use quadsys::constructions::{steiner_2_4_13, steiner_2_4_16};
use quadsys::hypercore::format;

fn main() {
    for c in [steiner_2_4_13(), steiner_2_4_16()] {
        let h = &c.hypergraph;
        println!(
            "{}: {} points, {} blocks, degree {:?}",
            c.name,
            h.vertex_count(),
            h.edge_count(),
            h.regular_degree()
        );
        print!("{}", c.certificate);
        println!("{}", format::serialize(h));
    }
}
