//! Exact extremal numbers and packing numbers for small `n`.
//!
//! Depth-first search over edge sets listed in lexicographic order. Every
//! non-empty system is isomorphic to one whose least edge is `{0,1,2,3}`, so
//! that edge is fixed. Prefixes of two to four edges are deduplicated up to
//! isomorphism; the lexicographically least labeling of any system has
//! lexicographically least prefixes, and the search meets it before any
//! other labeling, so keeping the first prefix of each isomorphism class
//! loses nothing.

mod brute;
mod canon;

pub(crate) use brute::combinations4;
pub use brute::{brute_force_ex, contains_by_enumeration, MAX_BRUTE_VERTICES};
pub use canon::{canonical_form, CanonicalForm, MAX_CANON_VERTICES};

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::johnson_bound;
use crate::hypercore::Hypergraph;
use crate::patterns::{is_free, DynamicHost, Forbidden};

/// Hard vertex cap for the exact engine.
pub const MAX_SEARCH_VERTICES: usize = 20;

/// Prefix sizes that get isomorph rejection.
const DEDUP_PLIES: std::ops::RangeInclusive<usize> = 2..=4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("{what} supports at most {max} vertices, got {n}")]
    Capacity { what: &'static str, n: usize, max: usize },
}

/// Node and wall-clock limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;
    pub const DEFAULT_SECS: u64 = 300;

    pub fn new(nodes: u64, secs: Option<u64>) -> Self {
        Budget {
            nodes,
            time: secs.map(Duration::from_secs),
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            nodes: u64::MAX,
            time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODES, Some(Self::DEFAULT_SECS))
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// `ex(n, F)` or `D1(m, 4, 2)`
    pub quantity: String,
    pub n: usize,
    /// Exact when `completed`, otherwise the best value found.
    pub value: usize,
    pub witness: Hypergraph,
    pub nodes: u64,
    pub elapsed: Duration,
    /// True only if the search space was exhausted (or the pair-capacity
    /// bound was reached).
    pub completed: bool,
}

impl SearchResult {
    /// Re-checks the witness from scratch: linear, `F`-free, right size.
    pub fn verify(&self, family: &[Forbidden]) -> bool {
        self.witness.edge_count() == self.value
            && self.witness.vertex_count() == self.n
            && self.witness.is_linear()
            && is_free(&self.witness, family)
    }

    /// Stable `key=value` lines; wall time is left out so output is
    /// reproducible.
    pub fn kv_lines(&self) -> Vec<String> {
        vec![
            format!("quantity={}", self.quantity),
            format!("value={}", self.value),
            format!("completed={}", self.completed),
            format!("nodes={}", self.nodes),
            format!("witness_edges={}", self.witness.edge_count()),
        ]
    }
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.completed { "exact" } else { "lower bound (budget hit)" };
        write!(
            f,
            "{} = {} [{status}, {} nodes]",
            self.quantity, self.value, self.nodes
        )
    }
}

struct Engine<'a> {
    n: usize,
    family: &'a [Forbidden],
    quads: Vec<[usize; 4]>,
    covered: Vec<bool>,
    host: DynamicHost,
    chosen: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    seen: Vec<HashSet<Vec<u8>>>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    stop: bool,
    aborted: bool,
    dedup: bool,
}

impl Engine<'_> {
    fn fits(&self, q: &[usize; 4]) -> bool {
        (0..4).all(|a| (a + 1..4).all(|b| !self.covered[q[a] * self.n + q[b]]))
    }

    fn set_pairs(&mut self, q: &[usize; 4], value: bool) {
        for a in 0..4 {
            for b in a + 1..4 {
                self.covered[q[a] * self.n + q[b]] = value;
                self.covered[q[b] * self.n + q[a]] = value;
            }
        }
    }

    /// Most edges that can still be added using only vertices `>= low`.
    fn capacity(&self, low: usize) -> usize {
        let mut pairs = 0;
        let mut slots = 0;
        for u in low..self.n {
            let free = (low..self.n)
                .filter(|&v| v != u && !self.covered[u * self.n + v])
                .count();
            pairs += free;
            slots += free / 3;
        }
        (pairs / 2 / 6).min(slots / 4)
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.budget.nodes {
            return true;
        }
        if let Some(limit) = self.budget.time {
            if self.nodes.is_multiple_of(4096) && self.start.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn push(&mut self, i: usize) -> bool {
        let q = self.quads[i];
        self.set_pairs(&q, true);
        let idx = self.host.push(&q);
        self.chosen.push(i);
        if self.family.iter().any(|f| f.find_through(&self.host, idx).is_some()) {
            self.pop();
            return false;
        }
        true
    }

    fn pop(&mut self) {
        let i = self.chosen.pop().expect("pop after push");
        let q = self.quads[i];
        self.set_pairs(&q, false);
        self.host.pop();
    }

    fn is_new_class(&mut self) -> bool {
        let size = self.chosen.len();
        if !self.dedup || !DEDUP_PLIES.contains(&size) {
            return true;
        }
        let h = Hypergraph::new(4, self.n, self.chosen.iter().map(|&i| self.quads[i]))
            .expect("search state is a valid hypergraph");
        let code = canonical_form(&h).expect("search n is within the canonical form cap").code;
        self.seen[size].insert(code)
    }

    fn dfs(&mut self, next: usize) {
        self.nodes += 1;
        if self.out_of_budget() {
            self.stop = true;
            self.aborted = true;
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.target {
                self.stop = true;
                return;
            }
        }
        let mut low = usize::MAX;
        for i in next..self.quads.len() {
            if self.stop {
                return;
            }
            let first = self.quads[i][0];
            if first != low {
                low = first;
                if self.chosen.len() + self.capacity(low) <= self.best.len() {
                    return;
                }
            }
            if !self.fits(&self.quads[i]) {
                continue;
            }
            if !self.push(i) {
                continue;
            }
            if self.is_new_class() {
                self.dfs(i + 1);
            }
            self.pop();
        }
    }
}

fn run(
    n: usize,
    family: &[Forbidden],
    budget: Budget,
    quantity: String,
    dedup: bool,
) -> Result<SearchResult, SearchError> {
    if n > MAX_SEARCH_VERTICES {
        return Err(SearchError::Capacity {
            what: "exact search",
            n,
            max: MAX_SEARCH_VERTICES,
        });
    }
    let quads = brute::combinations4(n);
    let mut engine = Engine {
        n,
        family,
        quads,
        covered: vec![false; n * n],
        host: DynamicHost::new(n),
        chosen: Vec::new(),
        best: Vec::new(),
        target: johnson_bound(n as i64).max(0) as usize,
        seen: vec![HashSet::new(); DEDUP_PLIES.end() + 1],
        nodes: 1,
        budget,
        start: Instant::now(),
        stop: false,
        aborted: false,
        dedup,
    };
    // the root: the empty system, then the fixed first edge {0,1,2,3}
    if n >= 4 && engine.target > 0 && engine.push(0) {
        engine.dfs(1);
        engine.pop();
    }
    let witness = Hypergraph::new(4, n, engine.best.iter().map(|&i| engine.quads[i]))
        .expect("search witness is a valid hypergraph");
    Ok(SearchResult {
        quantity,
        n,
        value: engine.best.len(),
        witness,
        nodes: engine.nodes,
        elapsed: engine.start.elapsed(),
        completed: !engine.aborted,
    })
}

/// `ex(n, F)` for a family `F` of forbidden configurations (4-uniform).
pub fn exact_ex(n: usize, family: &[Forbidden], budget: Budget) -> Result<SearchResult, SearchError> {
    let names: Vec<String> = family.iter().map(|f| f.to_string()).collect();
    let label = if names.is_empty() {
        "{}".to_string()
    } else {
        names.join("|")
    };
    run(n, family, budget, format!("ex({n}, {label})"), true)
}

/// [`exact_ex`] with isomorph rejection switched off; a slower reference
/// for testing the rejection.
#[doc(hidden)]
pub fn exact_ex_without_rejection(
    n: usize,
    family: &[Forbidden],
    budget: Budget,
) -> Result<SearchResult, SearchError> {
    run(n, family, budget, format!("ex({n})"), false)
}

/// `D1(m, 4, 2)`: the same search with nothing forbidden.
pub fn exact_packing(m: usize, budget: Budget) -> Result<SearchResult, SearchError> {
    run(m, &[], budget, format!("D1({m},4,2)"), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::named_pattern;

    #[test]
    fn small_packings() {
        for (m, v) in [(4, 1), (7, 2), (8, 2), (9, 3)] {
            let r = exact_packing(m, Budget::default()).unwrap();
            assert!(r.completed);
            assert_eq!(r.value, v, "m = {m}");
            assert!(r.verify(&[]));
        }
    }

    #[test]
    fn small_extremal_numbers() {
        let p2 = named_pattern("P2").unwrap();
        let r = exact_ex(8, std::slice::from_ref(&p2), Budget::default()).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.verify(&[p2]));
        let m2 = named_pattern("M2").unwrap();
        let r = exact_ex(9, std::slice::from_ref(&m2), Budget::default()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.verify(&[m2]));
    }

    #[test]
    fn single_edge_patterns_forbid_everything() {
        let r = exact_ex(9, &[named_pattern("M1").unwrap()], Budget::default()).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.completed);
    }

    #[test]
    fn capacity() {
        assert!(exact_packing(21, Budget::default()).is_err());
    }
}
