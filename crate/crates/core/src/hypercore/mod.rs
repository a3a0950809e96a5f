//! Uniform hypergraphs over at most [`MAX_VERTICES`] labeled vertices, with
//! pair-coverage bookkeeping for linearity, degree utilities, connected
//! components and the plain-text exchange format.
//!
//! Vertices are `0..n` internally. The text format in [`format`] is 1-based.

mod bitset;
mod coverage;
pub mod format;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use coverage::{LeaveGraph, LinearBuilder, PairCoverage};

use std::cmp::Reverse;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("unsupported uniformity {0} (expected 3 or 4)")]
    Uniformity(usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    Capacity(usize),
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    Arity {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0:?} occurs twice")]
    DuplicateEdge(Vec<usize>),
    #[error("pair {{{}, {}}} is already covered by edge {edge:?}", .pair.0, .pair.1)]
    PairClash { pair: (usize, usize), edge: Vec<usize> },
    #[error("edge {0:?} is not present")]
    MissingEdge(Vec<usize>),
    #[error("not linear: pair {{{}, {}}} lies in edges {first:?} and {second:?}", .pair.0, .pair.1)]
    NotLinear {
        pair: (usize, usize),
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
}

/// An edge: an ascending tuple of 3 or 4 distinct vertex ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    verts: [u8; 4],
    len: u8,
}

impl Edge {
    fn from_sorted(vs: &[usize]) -> Self {
        let mut verts = [0u8; 4];
        for (slot, &v) in verts.iter_mut().zip(vs) {
            *slot = v as u8;
        }
        Edge {
            verts,
            len: vs.len() as u8,
        }
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.verts[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.as_slice().iter().map(|&v| v as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.iter().any(|u| u == v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.iter().collect()
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Degrees of an edge's vertices, sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector(pub Vec<usize>);

impl DegreeVector {
    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &DegreeVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// A connected component (under edge-intersection) with its induced
/// sub-hypergraph relabeled onto `0..vertices.len()`.
#[derive(Clone, Debug)]
pub struct Component {
    /// Host vertex ids in ascending order; position = local id.
    pub vertices: Vec<usize>,
    pub hypergraph: Hypergraph,
}

#[derive(Clone, Debug)]
pub struct Components {
    pub parts: Vec<Component>,
    pub isolated: Vec<usize>,
}

/// An `r`-uniform hypergraph with edges kept in lexicographic order.
#[derive(Clone)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
    sets: Vec<VertexSet>,
    // per vertex: incident edge indices, by descending degree vector then index
    incidence: Vec<Vec<u32>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("r", &self.r)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

fn check_shape(r: usize, n: usize) -> Result<(), HypergraphError> {
    if r != 3 && r != 4 {
        return Err(HypergraphError::Uniformity(r));
    }
    if n > MAX_VERTICES {
        return Err(HypergraphError::Capacity(n));
    }
    Ok(())
}

/// Validates one edge and returns it sorted.
pub(crate) fn normalize_edge(r: usize, n: usize, e: &[usize]) -> Result<Vec<usize>, HypergraphError> {
    if e.len() != r {
        return Err(HypergraphError::Arity {
            edge: e.to_vec(),
            expected: r,
            found: e.len(),
        });
    }
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
    }
    let mut sorted = e.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(HypergraphError::RepeatedVertex(e.to_vec()));
    }
    Ok(sorted)
}

impl Hypergraph {
    /// Builds a hypergraph, validating every edge. Edge order in the input
    /// is irrelevant; the stored order is lexicographic.
    pub fn new<I, E>(r: usize, n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_shape(r, n)?;
        let mut list = Vec::new();
        for e in edges {
            let sorted = normalize_edge(r, n, e.as_ref())?;
            list.push(Edge::from_sorted(&sorted));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge(w[0].to_vec()));
        }
        Ok(Self::from_sorted_edges(r, n, list))
    }

    /// Builds from 1-based vertex labels, as printed in design tables.
    pub fn from_one_based<I, E>(r: usize, n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut shifted = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v > n) {
                return Err(HypergraphError::VertexOutOfRange {
                    vertex: v.wrapping_sub(1),
                    n,
                });
            }
            shifted.push(e.iter().map(|v| v - 1).collect::<Vec<_>>());
        }
        Self::new(r, n, shifted)
    }

    pub fn empty(r: usize, n: usize) -> Result<Self, HypergraphError> {
        check_shape(r, n)?;
        Ok(Self::from_sorted_edges(r, n, Vec::new()))
    }

    pub(crate) fn from_sorted_edges(r: usize, n: usize, edges: Vec<Edge>) -> Self {
        let sets: Vec<VertexSet> = edges.iter().map(Edge::vertex_set).collect();
        let mut degree = vec![0usize; n];
        for e in &edges {
            for v in e.iter() {
                degree[v] += 1;
            }
        }
        let keys: Vec<Vec<usize>> = edges
            .iter()
            .map(|e| {
                let mut d: Vec<usize> = e.iter().map(|v| degree[v]).collect();
                d.sort_unstable_by(|a, b| b.cmp(a));
                d
            })
            .collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in e.iter() {
                incidence[v].push(i as u32);
            }
        }
        for list in &mut incidence {
            list.sort_by_key(|&i| (Reverse(keys[i as usize].clone()), i));
        }
        Hypergraph {
            r,
            n,
            edges,
            sets,
            incidence,
        }
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edge_set(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    /// Edges through `v`, ordered by descending degree vector.
    pub fn edges_at(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    /// Index of the edge equal to `e` as a set.
    pub fn position(&self, e: &[usize]) -> Option<usize> {
        let sorted = normalize_edge(self.r, self.n, e).ok()?;
        self.edges.binary_search(&Edge::from_sorted(&sorted)).ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.incidence[v].len())
    }

    /// All vertex degrees, in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.incidence.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.incidence.first().map_or(0, Vec::len);
        self.incidence.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_vector(&self, e: &[usize]) -> Result<DegreeVector, HypergraphError> {
        if self.position(e).is_none() {
            return Err(HypergraphError::MissingEdge(e.to_vec()));
        }
        let mut d: Vec<usize> = e.iter().map(|&v| self.incidence[v].len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeVector(d))
    }

    /// Vertices that lie in at least one edge.
    pub fn support(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    /// Full pair-coverage index, or the first clashing pair.
    pub fn pair_coverage(&self) -> Result<PairCoverage, HypergraphError> {
        PairCoverage::build(self)
    }

    pub fn is_linear(&self) -> bool {
        self.pair_coverage().is_ok()
    }

    /// Returns `self` plus `e`, rejecting `e` if it repeats an edge or any of
    /// its pairs is already covered.
    pub fn add_edge_linear(&self, e: &[usize]) -> Result<Hypergraph, HypergraphError> {
        let mut builder = LinearBuilder::from_hypergraph(self)?;
        builder.try_add(e)?;
        Ok(builder.build())
    }

    pub fn leave_graph(&self) -> Result<LeaveGraph, HypergraphError> {
        let cover = self.pair_coverage()?;
        Ok(LeaveGraph::new(
            self.n,
            cover.uncovered_pairs().collect::<Vec<_>>(),
        ))
    }

    /// Applies the vertex relabeling `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph, HypergraphError> {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| perm[v]).collect())
            .collect();
        Hypergraph::new(self.r, self.n, edges)
    }

    /// Sub-hypergraph induced on `vertices` (ascending), relabeled to local ids.
    pub fn induced(&self, vertices: &[usize]) -> Hypergraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| local[v] != usize::MAX))
            .map(|e| {
                let mut vs: Vec<usize> = e.iter().map(|v| local[v]).collect();
                vs.sort_unstable();
                Edge::from_sorted(&vs)
            })
            .collect();
        edges.sort_unstable();
        Hypergraph::from_sorted_edges(self.r, vertices.len(), edges)
    }

    /// Connected components under edge intersection; isolated vertices are
    /// listed separately and are not components.
    pub fn components(&self) -> Components {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for e in &self.edges {
            let first = e.as_slice()[0] as usize;
            for v in e.iter().skip(1) {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        let mut isolated = Vec::new();
        for v in 0..self.n {
            if self.incidence[v].is_empty() {
                isolated.push(v);
            } else {
                let root = find(&mut parent, v);
                groups[root].push(v);
            }
        }
        let parts = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|vertices| Component {
                hypergraph: self.induced(&vertices),
                vertices,
            })
            .collect();
        Components { parts, isolated }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(r: usize, n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph::new(4, 6, [[0, 1, 2]]).unwrap_err(),
            HypergraphError::Arity {
                edge: vec![0, 1, 2],
                expected: 4,
                found: 3
            }
        );
        assert!(matches!(
            Hypergraph::new(4, 6, [[0, 1, 2, 2]]),
            Err(HypergraphError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Hypergraph::new(4, 6, [[0, 1, 2, 6]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 6, n: 6 })
        ));
        assert!(matches!(
            Hypergraph::new(4, 6, [[0, 1, 2, 3], [3, 2, 1, 0]]),
            Err(HypergraphError::DuplicateEdge(_))
        ));
        assert_eq!(Hypergraph::empty(5, 3).unwrap_err(), HypergraphError::Uniformity(5));
        assert_eq!(Hypergraph::empty(4, 257).unwrap_err(), HypergraphError::Capacity(257));
    }

    #[test]
    fn canonical_order_makes_equal_values() {
        let a = h(4, 8, &[&[4, 5, 6, 7], &[3, 2, 1, 0]]);
        let b = h(4, 8, &[&[0, 1, 2, 3], &[7, 6, 5, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.edge(0).to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn linearity() {
        assert!(!h(4, 6, &[&[0, 1, 2, 3], &[0, 1, 4, 5]]).is_linear());
        assert!(Hypergraph::empty(4, 5).unwrap().is_linear());
        match h(4, 6, &[&[0, 1, 2, 3], &[0, 1, 4, 5]]).pair_coverage() {
            Err(HypergraphError::NotLinear { pair, .. }) => assert_eq!(pair, (0, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degrees() {
        let g = h(4, 8, &[&[0, 1, 2, 3], &[0, 4, 5, 6]]);
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(g.degree(7).unwrap(), 0);
        assert!(g.degree(8).is_err());
        assert_eq!(g.degree_sequence(), vec![2, 1, 1, 1, 1, 1, 1, 0]);
        assert_eq!(g.degree_vector(&[0, 1, 2, 3]).unwrap(), DegreeVector(vec![2, 1, 1, 1]));
        assert!(g.degree_vector(&[1, 2, 3, 4]).is_err());
        let single = h(4, 4, &[&[0, 1, 2, 3]]);
        assert_eq!(single.degree_vector(&[3, 2, 1, 0]).unwrap().0, vec![1, 1, 1, 1]);
        assert!(DegreeVector(vec![2, 1, 1, 1]).dominates(&DegreeVector(vec![1, 1, 1, 1])));
    }

    #[test]
    fn incremental_linear_additions() {
        let g = h(4, 7, &[&[0, 1, 2, 3]]);
        let ok = g.add_edge_linear(&[0, 4, 5, 6]).unwrap();
        assert_eq!(ok.edge_count(), 2);
        match g.add_edge_linear(&[0, 1, 4, 5]) {
            Err(HypergraphError::PairClash { pair, edge }) => {
                assert_eq!(pair, (0, 1));
                assert_eq!(edge, vec![0, 1, 2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            g.add_edge_linear(&[3, 2, 1, 0]),
            Err(HypergraphError::DuplicateEdge(_))
        ));
    }

    #[test]
    fn components_and_isolated() {
        let empty = Hypergraph::empty(4, 5).unwrap();
        let c = empty.components();
        assert!(c.parts.is_empty());
        assert_eq!(c.isolated, vec![0, 1, 2, 3, 4]);

        let path = h(4, 11, &[&[0, 1, 2, 3], &[3, 4, 5, 6], &[6, 7, 8, 9]]);
        let c = path.components();
        assert_eq!(c.parts.len(), 1);
        assert_eq!(c.parts[0].vertices.len(), 10);
        assert_eq!(c.isolated, vec![10]);
    }

    #[test]
    fn leave_of_single_block() {
        let g = h(4, 4, &[&[0, 1, 2, 3]]);
        assert!(g.leave_graph().unwrap().pairs().is_empty());
        let g = h(4, 5, &[&[0, 1, 2, 3]]);
        assert_eq!(g.leave_graph().unwrap().pairs().len(), 4);
    }
}
