//! E4+-free systems from copies of `STS(9)` joined to four apex vertices.
//!
//! Vertex layout for `n` vertices and `m = floor((n-4)/9)` copies: copy `c`
//! occupies `9c..9c+9` (grid point `3x+y` at `9c+3x+y`), the apices are
//! `9m..9m+4`, and the `(n-4) mod 9` leftover vertices come last. Every
//! triple in parallel class `i` of every copy is joined to apex `i`. Two
//! triples from different classes of one copy always meet, which is what
//! keeps the base free of E4+.
//!
//! The base is then augmented by an exhaustive depth-first search over
//! quadruples inside the leftover vertices, the apices, and one copy,
//! aiming for `epsilon(n)` extra edges.

use super::{sts9_resolvable, Certificate, Construction, ConstructionError};
use crate::bounds::epsilon;
use crate::hypercore::{Hypergraph, LinearBuilder};
use crate::patterns::{DynamicHost, Forbidden, TreePattern};

/// Default node budget for the augmentation search.
pub const AUGMENT_NODES: u64 = 200_000;

#[derive(Clone, Debug)]
pub struct E4PlusConstruction {
    pub construction: Construction,
    pub copies: usize,
    pub base_edges: usize,
    /// Edges added by the augmentation search.
    pub augmented: usize,
    /// The augmentation target.
    pub epsilon: usize,
    pub augment_nodes: u64,
    /// False if the node budget ran out before the search finished.
    pub augment_exhausted: bool,
}

impl E4PlusConstruction {
    /// `epsilon - augmented`, when positive.
    pub fn shortfall(&self) -> usize {
        self.epsilon.saturating_sub(self.augmented)
    }
}

struct Augment<'a> {
    e4: &'a Forbidden,
    candidates: Vec<[usize; 4]>,
    builder: LinearBuilder,
    host: DynamicHost,
    chosen: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    nodes: u64,
    limit: u64,
    out_of_budget: bool,
}

impl Augment<'_> {
    fn dfs(&mut self, start: usize) {
        self.nodes += 1;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        if self.nodes >= self.limit {
            self.out_of_budget = true;
            return;
        }
        for i in start..self.candidates.len() {
            if self.best.len() >= self.target || self.out_of_budget {
                return;
            }
            // not enough candidates left to beat the best
            if self.chosen.len() + (self.candidates.len() - i) <= self.best.len() {
                return;
            }
            let q = self.candidates[i];
            if !self.builder.fits(&q) {
                continue;
            }
            let idx = self.host.push(&q);
            if self.e4.find_through(&self.host, idx).is_some() {
                self.host.pop();
                continue;
            }
            let mut next = self.builder.clone();
            next.try_add(&q).expect("fits was checked");
            let saved = std::mem::replace(&mut self.builder, next);
            self.chosen.push(i);
            self.dfs(i + 1);
            self.chosen.pop();
            self.builder = saved;
            self.host.pop();
        }
    }
}

fn base_edges(n: usize, m: usize) -> Vec<[usize; 4]> {
    let sts = sts9_resolvable();
    let apex = 9 * m;
    let mut edges = Vec::with_capacity(12 * m);
    for c in 0..m {
        for (i, class) in sts.classes.iter().enumerate() {
            for t in class {
                edges.push([9 * c + t[0], 9 * c + t[1], 9 * c + t[2], apex + i]);
            }
        }
    }
    debug_assert!(apex + 4 <= n);
    edges
}

/// Quadruples the augmentation may use, most promising shapes first.
fn augmentation_candidates(n: usize, m: usize) -> Vec<[usize; 4]> {
    let apices: Vec<usize> = (9 * m..9 * m + 4).collect();
    let left: Vec<usize> = (9 * m + 4..n).collect();
    let copy0: Vec<usize> = (0..9).collect();
    let mut pool: Vec<usize> = left.clone();
    pool.extend(&apices);
    pool.extend(&copy0);
    let kind = |q: &[usize; 4]| {
        let l = q.iter().filter(|v| left.contains(v)).count();
        let a = q.iter().filter(|v| apices.contains(v)).count();
        let c = 4 - l - a;
        // at most one copy vertex, and apices never meet copy vertices
        if c > 1 || (c == 1 && a > 0) || l == 0 {
            return None;
        }
        Some(match (l, a, c) {
            (3, 1, 0) => 0,
            (4, 0, 0) => 1,
            (2, 2, 0) => 2,
            (3, 0, 1) => 3,
            (1, 3, 0) => 4,
            _ => 5,
        })
    };
    let mut out: Vec<(usize, [usize; 4])> = Vec::new();
    let p = pool.len();
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                for d in c + 1..p {
                    let mut q = [pool[a], pool[b], pool[c], pool[d]];
                    q.sort_unstable();
                    if let Some(k) = kind(&q) {
                        out.push((k, q));
                    }
                }
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, q)| q).collect()
}

/// The construction with the default augmentation budget.
pub fn e4plus_lower_construction(n: usize) -> Result<E4PlusConstruction, ConstructionError> {
    e4plus_lower_construction_with(n, AUGMENT_NODES)
}

pub fn e4plus_lower_construction_with(
    n: usize,
    augment_nodes: u64,
) -> Result<E4PlusConstruction, ConstructionError> {
    if n < 13 {
        return Err(ConstructionError::Domain {
            construction: "E4+ construction",
            requirement: "n >= 13".into(),
            value: n,
        });
    }
    let m = (n - 4) / 9;
    let eps = epsilon(n as i64).expect("n >= 13") as usize;
    let base = base_edges(n, m);
    let mut builder = LinearBuilder::new(4, n)?;
    let mut host = DynamicHost::new(n);
    for e in &base {
        builder.try_add(e)?;
        host.push(e);
    }
    let e4 = Forbidden::Tree(TreePattern::e4_plus(4).expect("E4+ is a valid pattern"));
    let mut search = Augment {
        e4: &e4,
        candidates: augmentation_candidates(n, m),
        builder,
        host,
        chosen: Vec::new(),
        best: Vec::new(),
        target: eps,
        nodes: 0,
        limit: augment_nodes,
        out_of_budget: false,
    };
    if eps > 0 {
        search.dfs(0);
    }
    let mut edges = base.clone();
    edges.extend(search.best.iter().map(|&i| search.candidates[i]));
    let h = Hypergraph::new(4, n, &edges)?;

    let mut c = Construction::new(format!("E4+-free construction n={n}"), h);
    let mut cert = Certificate::new();
    cert.linear(&c.hypergraph);
    cert.free_of(&c.hypergraph, &e4);
    cert.check(
        format!("edges>={}", 12 * m),
        c.hypergraph.edge_count() >= 12 * m,
        format!("{} edges", c.hypergraph.edge_count()),
    );
    cert.check(
        "augmentation",
        true,
        format!("{} of epsilon = {eps} extra edges", search.best.len()),
    );
    c.certificate = cert;
    if search.best.len() < eps {
        c.findings.push(format!(
            "n={n}: augmentation reached {} of epsilon = {eps} ({})",
            search.best.len(),
            if search.out_of_budget {
                "node budget exhausted"
            } else {
                "search space exhausted"
            }
        ));
    }
    Ok(E4PlusConstruction {
        construction: c,
        copies: m,
        base_edges: base.len(),
        augmented: search.best.len(),
        epsilon: eps,
        augment_nodes: search.nodes,
        augment_exhausted: !search.out_of_budget,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_vertices() {
        let c = e4plus_lower_construction(13).unwrap();
        assert_eq!(c.construction.hypergraph.edge_count(), 12);
        assert!(c.construction.certificate.all_passed());
        assert_eq!(c.shortfall(), 0);
    }
}
