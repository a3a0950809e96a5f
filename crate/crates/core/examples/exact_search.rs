//! Exact linear Turan numbers for small n, cross-checked against the brute
//! force enumerator where it can still run.
//!
//! Usage: cargo run --release --example exact_search [pattern] [max_n]

use quadsys::patterns::named_pattern;
use quadsys::search::{brute_force_ex, canonical_form, exact_ex, Budget, MAX_BRUTE_VERTICES};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "P3".into());
    let max_n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(12);
    let f = named_pattern(&name).expect("pattern name");
    let family = [f];
    for n in 4..=max_n {
        let r = exact_ex(n, &family, Budget::default()).expect("n is within range");
        assert!(r.verify(&family));
        let brute = if n <= MAX_BRUTE_VERTICES {
            brute_force_ex(n, &family).unwrap().to_string()
        } else {
            "-".into()
        };
        let canon = canonical_form(&r.witness).unwrap();
        println!(
            "{r}  brute {brute}  witness code {} bytes",
            canon.code.len()
        );
    }
}
