//! Looking for trees and matchings inside small hosts, and checking the
//! witnesses that come back.

use quadsys::constructions::{repeat, steiner_2_4_13, steiner_2_4_16};
use quadsys::patterns::{is_acyclic, named_pattern};

fn main() {
    let s13 = steiner_2_4_13().hypergraph;
    let s16 = steiner_2_4_16().hypergraph;
    let two = repeat(&s13, 2).expect("26 vertices fit");

    let hosts = [("S(2,4,13)", &s13), ("S(2,4,16)", &s16), ("2 x S(2,4,13)", &two)];
    let names = ["P2", "P3", "P4", "S3", "S3plus", "E4plus", "M2", "M3", "T:0.0,1.1,1.2"];
    for (label, host) in hosts {
        println!("{label}");
        for name in names {
            let f = named_pattern(name).expect("valid pattern name");
            match f.find_in(host) {
                Some(emb) => {
                    emb.validate(host, &f.realize()).expect("witnesses always re-validate");
                    println!("  {name:>14}: found on edges {:?}", emb.edge_map);
                }
                None => println!("  {name:>14}: free"),
            }
        }
    }

    // a pattern's own realization is acyclic, with a removal order to prove it
    let t = named_pattern("S3plus").unwrap().realize();
    let a = is_acyclic(&t).unwrap();
    println!("S3plus acyclic: {} (removal order {:?})", a.acyclic, a.order);
}
