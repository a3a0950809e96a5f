use super::{check_shape, normalize_edge, Edge, Hypergraph, HypergraphError, VertexSet};

const NONE: u32 = u32::MAX;

/// Map from each vertex pair to the unique edge covering it.
///
/// Only exists for linear hypergraphs: construction fails on the first pair
/// that two edges share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCoverage {
    n: usize,
    cover: Vec<u32>,
}

impl PairCoverage {
    fn empty(n: usize) -> Self {
        PairCoverage {
            n,
            cover: vec![NONE; n * n],
        }
    }

    pub(super) fn build(h: &Hypergraph) -> Result<Self, HypergraphError> {
        let mut pc = Self::empty(h.vertex_count());
        for (i, e) in h.edges().iter().enumerate() {
            if let Some((pair, j)) = pc.first_covered(e.as_slice()) {
                return Err(HypergraphError::NotLinear {
                    pair,
                    first: h.edge(j).to_vec(),
                    second: e.to_vec(),
                });
            }
            pc.mark(e.as_slice(), i as u32);
        }
        Ok(pc)
    }

    fn first_covered(&self, e: &[u8]) -> Option<((usize, usize), usize)> {
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                let c = self.cover[u as usize * self.n + v as usize];
                if c != NONE {
                    return Some(((u as usize, v as usize), c as usize));
                }
            }
        }
        None
    }

    fn mark(&mut self, e: &[u8], idx: u32) {
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                let (u, v) = (u as usize, v as usize);
                self.cover[u * self.n + v] = idx;
                self.cover[v * self.n + u] = idx;
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Index of the edge containing both `u` and `v`.
    pub fn covering_edge(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let c = self.cover[u * self.n + v];
        (c != NONE).then_some(c as usize)
    }

    pub fn covered_pair_count(&self) -> usize {
        self.cover.iter().filter(|&&c| c != NONE).count() / 2
    }

    /// True when every pair is covered (a 2-design with index one).
    pub fn is_complete(&self) -> bool {
        self.covered_pair_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn uncovered_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| self.cover[u * n + v] == NONE)
                .map(move |v| (u, v))
        })
    }
}

/// Incremental builder that keeps a hypergraph linear.
#[derive(Clone, Debug)]
pub struct LinearBuilder {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
    cover: PairCoverage,
}

impl LinearBuilder {
    pub fn new(r: usize, n: usize) -> Result<Self, HypergraphError> {
        check_shape(r, n)?;
        Ok(LinearBuilder {
            r,
            n,
            edges: Vec::new(),
            cover: PairCoverage::empty(n),
        })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self, HypergraphError> {
        let cover = h.pair_coverage()?;
        Ok(LinearBuilder {
            r: h.uniformity(),
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
            cover,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Would `e` keep the hypergraph linear? Does not validate `e`'s shape.
    pub fn fits(&self, e: &[usize]) -> bool {
        e.iter().enumerate().all(|(a, &u)| {
            e[a + 1..]
                .iter()
                .all(|&v| self.cover.covering_edge(u, v).is_none())
        })
    }

    pub fn try_add(&mut self, e: &[usize]) -> Result<(), HypergraphError> {
        let sorted = normalize_edge(self.r, self.n, e)?;
        let edge = Edge::from_sorted(&sorted);
        if self.edges.contains(&edge) {
            return Err(HypergraphError::DuplicateEdge(sorted));
        }
        let bytes = edge.as_slice();
        if let Some((pair, j)) = self.cover.first_covered(bytes) {
            return Err(HypergraphError::PairClash {
                pair,
                edge: self.edges[j].to_vec(),
            });
        }
        self.cover.mark(bytes, self.edges.len() as u32);
        self.edges.push(edge);
        Ok(())
    }

    pub fn build(self) -> Hypergraph {
        let mut edges = self.edges;
        edges.sort_unstable();
        Hypergraph::from_sorted_edges(self.r, self.n, edges)
    }
}

/// The graph of vertex pairs covered by no edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaveGraph {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl LeaveGraph {
    /// Pairs are normalized to `(min, max)`, sorted and deduplicated.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Self {
        let mut pairs: Vec<(usize, usize)> =
            pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        LeaveGraph { n, pairs }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pairs.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.pairs
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Vertex sets of the connected components with at least one pair.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj: Vec<VertexSet> = (0..self.n).map(|v| self.neighbors(v)).collect();
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) || adj[start].is_empty() {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp.contains(v) {
                    continue;
                }
                comp.insert(v);
                stack.extend(adj[v].difference(&comp).iter());
            }
            seen = seen.union(&comp);
            out.push(comp.iter().collect());
        }
        out
    }
}
