#![allow(dead_code)]

use quadsys::hypercore::{Hypergraph, LinearBuilder};
use quadsys::patterns::TreePattern;
use rand::seq::index::sample;
use rand::Rng;

/// A random linear `r`-graph on `n` vertices: `tries` random `r`-sets, each
/// kept if it keeps the system linear.
pub fn random_linear<R: Rng>(rng: &mut R, r: usize, n: usize, tries: usize) -> Hypergraph {
    let mut b = LinearBuilder::new(r, n).unwrap();
    if n < r {
        return b.build();
    }
    for _ in 0..tries {
        let e: Vec<usize> = sample(rng, n, r).into_vec();
        if b.fits(&e) {
            b.try_add(&e).unwrap();
        }
    }
    b.build()
}

/// A random tree pattern with `k` edges.
pub fn random_tree<R: Rng>(rng: &mut R, r: usize, k: usize) -> TreePattern {
    let att = (1..k)
        .map(|i| (rng.gen_range(0..i), rng.gen_range(0..r)))
        .collect();
    TreePattern::new(r, att).unwrap()
}

/// True iff some ordering of the edges adds each edge meeting the union of
/// the earlier ones in at most one vertex. Tries every permutation.
pub fn acyclic_by_permutation(h: &Hypergraph) -> bool {
    let m = h.edge_count();
    let mut order: Vec<usize> = (0..m).collect();
    fn ok(h: &Hypergraph, order: &[usize]) -> bool {
        let mut seen = vec![false; h.vertex_count()];
        for &e in order {
            let meet = h.edge(e).iter().filter(|&v| seen[v]).count();
            if meet > 1 {
                return false;
            }
            for v in h.edge(e).iter() {
                seen[v] = true;
            }
        }
        true
    }
    // Heap's algorithm
    fn heap(h: &Hypergraph, k: usize, order: &mut Vec<usize>) -> bool {
        if k <= 1 {
            return ok(h, order);
        }
        for i in 0..k {
            if heap(h, k - 1, order) {
                return true;
            }
            if k.is_multiple_of(2) {
                order.swap(i, k - 1);
            } else {
                order.swap(0, k - 1);
            }
        }
        false
    }
    heap(h, m, &mut order)
}

/// A uniformly random permutation of `0..n`, as an old -> new map.
pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    sample(rng, n, n).into_vec()
}
