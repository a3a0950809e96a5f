//! Unpruned reference search used to cross-check the main engine.

use super::SearchError;
use crate::hypercore::Hypergraph;
use crate::patterns::Forbidden;

/// Largest `n` the exhaustive enumeration accepts.
pub const MAX_BRUTE_VERTICES: usize = 8;

/// Sorted multiset of "which tuple positions contain this vertex" masks.
fn membership_signature<'a>(edges: impl Iterator<Item = &'a [u8]>) -> Vec<u32> {
    let mut masks: std::collections::BTreeMap<u8, u32> = Default::default();
    for (i, e) in edges.enumerate() {
        for &v in e {
            *masks.entry(v).or_default() |= 1 << i;
        }
    }
    let mut out: Vec<u32> = masks.into_values().collect();
    out.sort_unstable();
    out
}

/// Containment by enumerating every ordered tuple of distinct host edges and
/// comparing vertex-membership signatures with the pattern's. Two edge
/// tuples with equal signatures are isomorphic with edges matched in order,
/// so this decides containment without any embedding search.
pub fn contains_by_enumeration(host: &Hypergraph, pattern: &Hypergraph) -> bool {
    let k = pattern.edge_count();
    if k == 0 {
        return true;
    }
    let target = membership_signature(pattern.edges().iter().map(|e| e.as_slice()));
    let m = host.edge_count();
    let mut tuple = Vec::with_capacity(k);
    fn rec(host: &Hypergraph, m: usize, k: usize, target: &[u32], tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == k {
            let sig = membership_signature(tuple.iter().map(|&i| host.edge(i).as_slice()));
            return sig == target;
        }
        for i in 0..m {
            if tuple.contains(&i) {
                continue;
            }
            tuple.push(i);
            if rec(host, m, k, target, tuple) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    rec(host, m, k, &target, &mut tuple)
}

fn free_by_enumeration(host: &Hypergraph, family: &[(Forbidden, Hypergraph)]) -> bool {
    family.iter().all(|(_, p)| !contains_by_enumeration(host, p))
}

/// Maximum edge count of an `F`-free linear 4-graph on `n <= 8` vertices,
/// by listing every linear family of quadruples.
pub fn brute_force_ex(n: usize, family: &[Forbidden]) -> Result<usize, SearchError> {
    if n > MAX_BRUTE_VERTICES {
        return Err(SearchError::Capacity {
            what: "brute-force search",
            n,
            max: MAX_BRUTE_VERTICES,
        });
    }
    let quads: Vec<[usize; 4]> = combinations4(n);
    let realized: Vec<(Forbidden, Hypergraph)> =
        family.iter().map(|f| (f.clone(), f.realize())).collect();
    let mut best = 0;
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        quads: &[[usize; 4]],
        family: &[(Forbidden, Hypergraph)],
        start: usize,
        chosen: &mut Vec<usize>,
        best: &mut usize,
    ) {
        let h = Hypergraph::new(4, n, chosen.iter().map(|&i| quads[i]))
            .expect("quadruples are valid edges");
        if free_by_enumeration(&h, family) {
            *best = (*best).max(chosen.len());
        }
        for i in start..quads.len() {
            let shares_pair = chosen.iter().any(|&j| {
                quads[i].iter().filter(|v| quads[j].contains(v)).count() >= 2
            });
            if shares_pair {
                continue;
            }
            chosen.push(i);
            rec(n, quads, family, i + 1, chosen, best);
            chosen.pop();
        }
    }
    rec(n, &quads, &realized, 0, &mut chosen, &mut best);
    Ok(best)
}

/// All 4-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations4(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}
