//! Exact canonical form for small hypergraphs.
//!
//! Each component is coded separately. Vertices are labeled one at a time in
//! non-increasing degree order. When label `i` is assigned, the block for `i`
//! lists (sorted) every edge whose largest label is `i`. The component code is
//! the lexicographically least block sequence over all such labelings, found
//! by branch-and-bound with twin pruning: a candidate is skipped when swapping
//! it with an already-explored candidate is an automorphism.

use std::collections::HashSet;

use super::SearchError;
use crate::hypercore::Hypergraph;

/// Largest vertex count `canonical_form` accepts.
pub const MAX_CANON_VERTICES: usize = 20;

const END: u8 = 0xFF;
const UNSET: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Equal codes iff isomorphic hypergraphs.
    pub code: Vec<u8>,
    /// old vertex id -> canonical label
    pub labeling: Vec<usize>,
}

struct Component {
    n: usize,
    edges: Vec<Vec<usize>>,
    edge_keys: HashSet<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Component {
    fn new(h: &Hypergraph) -> Self {
        let n = h.vertex_count();
        let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        let degree = incidence.iter().map(Vec::len).collect();
        Component {
            n,
            edge_keys: edges.iter().cloned().collect(),
            edges,
            incidence,
            degree,
        }
    }

    fn swap_is_automorphism(&self, u: usize, v: usize) -> bool {
        if self.degree[u] != self.degree[v] {
            return false;
        }
        let swap = |x: usize| {
            if x == u {
                v
            } else if x == v {
                u
            } else {
                x
            }
        };
        self.incidence[u].iter().chain(&self.incidence[v]).all(|&e| {
            let mut img: Vec<usize> = self.edges[e].iter().map(|&x| swap(x)).collect();
            img.sort_unstable();
            self.edge_keys.contains(&img)
        })
    }
}

struct Labeler<'a> {
    c: &'a Component,
    label: Vec<usize>,
    order: Vec<usize>,
    code: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Labeler<'_> {
    /// Block emitted when `v` receives the next label.
    fn block(&self, v: usize) -> Vec<u8> {
        let next = self.order.len();
        let mut tuples: Vec<Vec<u8>> = self.c.incidence[v]
            .iter()
            .filter(|&&e| self.c.edges[e].iter().all(|&x| x == v || self.label[x] != UNSET))
            .map(|&e| {
                let mut t: Vec<u8> = self.c.edges[e]
                    .iter()
                    .map(|&x| if x == v { next as u8 } else { self.label[x] as u8 })
                    .collect();
                t.sort_unstable();
                t
            })
            .collect();
        tuples.sort_unstable();
        let mut out: Vec<u8> = tuples.concat();
        out.push(END);
        out
    }

    /// Whether the current partial code is already worse than the best
    /// complete code on their common prefix.
    fn worse_than_best(&self) -> bool {
        match &self.best {
            None => false,
            Some((b, _)) => {
                let l = self.code.len().min(b.len());
                self.code[..l] > b[..l]
            }
        }
    }

    fn run(&mut self) {
        if self.order.len() == self.c.n {
            if self.best.as_ref().is_none_or(|(b, _)| self.code < *b) {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        let top = (0..self.c.n)
            .filter(|&v| self.label[v] == UNSET)
            .map(|v| self.c.degree[v])
            .max()
            .expect("an unlabeled vertex remains");
        let candidates: Vec<usize> = (0..self.c.n)
            .filter(|&v| self.label[v] == UNSET && self.c.degree[v] == top)
            .collect();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if tried.iter().any(|&u| self.c.swap_is_automorphism(u, v)) {
                continue;
            }
            tried.push(v);
            let mark = self.code.len();
            let block = self.block(v);
            self.code.extend_from_slice(&block);
            if !self.worse_than_best() {
                self.label[v] = self.order.len();
                self.order.push(v);
                self.run();
                self.order.pop();
                self.label[v] = UNSET;
            }
            self.code.truncate(mark);
        }
    }
}

fn component_code(h: &Hypergraph) -> (Vec<u8>, Vec<usize>) {
    let c = Component::new(h);
    let mut labeler = Labeler {
        c: &c,
        label: vec![UNSET; c.n],
        order: Vec::with_capacity(c.n),
        code: Vec::new(),
        best: None,
    };
    labeler.run();
    let (mut code, order) = labeler.best.expect("a component has at least one labeling");
    code.insert(0, c.n as u8);
    (code, order)
}

/// Canonical code and labeling. Fails for more than
/// [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm, SearchError> {
    if h.vertex_count() > MAX_CANON_VERTICES {
        return Err(SearchError::Capacity {
            what: "canonical form",
            n: h.vertex_count(),
            max: MAX_CANON_VERTICES,
        });
    }
    let comps = h.components();
    let mut coded: Vec<(Vec<u8>, Vec<usize>)> = comps
        .parts
        .iter()
        .map(|part| {
            let (code, order) = component_code(&part.hypergraph);
            (code, order.into_iter().map(|local| part.vertices[local]).collect())
        })
        .collect();
    coded.sort();
    let mut code = vec![
        h.uniformity() as u8,
        h.vertex_count() as u8,
        comps.isolated.len() as u8,
        coded.len() as u8,
    ];
    let mut labeling = vec![UNSET; h.vertex_count()];
    let mut next = 0;
    for (c, order) in &coded {
        code.extend_from_slice(c);
        for &v in order {
            labeling[v] = next;
            next += 1;
        }
    }
    for &v in &comps.isolated {
        labeling[v] = next;
        next += 1;
    }
    Ok(CanonicalForm { code, labeling })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinguishes_two_edge_shapes() {
        let touching = Hypergraph::new(4, 8, [[0, 1, 2, 3], [3, 4, 5, 6]]).unwrap();
        let apart = Hypergraph::new(4, 8, [[0, 1, 2, 3], [4, 5, 6, 7]]).unwrap();
        assert_ne!(
            canonical_form(&touching).unwrap().code,
            canonical_form(&apart).unwrap().code
        );
    }

    #[test]
    fn relabeling_gives_same_code() {
        let h = Hypergraph::new(4, 10, [[0, 1, 2, 3], [1, 4, 5, 6], [0, 4, 8, 9], [2, 6, 7, 9]]).unwrap();
        let perm = [7, 3, 9, 0, 1, 8, 2, 6, 5, 4];
        let g = h.relabel(&perm).unwrap();
        let a = canonical_form(&h).unwrap();
        let b = canonical_form(&g).unwrap();
        assert_eq!(a.code, b.code);
        assert_eq!(h.relabel(&a.labeling).unwrap(), g.relabel(&b.labeling).unwrap());
    }

    #[test]
    fn capacity() {
        let h = Hypergraph::empty(4, 21).unwrap();
        assert!(canonical_form(&h).is_err());
    }
}
