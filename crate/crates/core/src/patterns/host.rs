use crate::hypercore::{Hypergraph, VertexSet};

/// Read access the containment testers need from a host hypergraph.
pub trait HostView {
    fn host_vertex_count(&self) -> usize;
    fn host_edge_count(&self) -> usize;
    fn host_edge(&self, i: usize) -> &[u8];
    fn host_edge_set(&self, i: usize) -> &VertexSet;
    /// Edges through `v`, in the order the backtracker should try them.
    fn host_edges_at(&self, v: usize) -> &[u32];

    fn host_degree(&self, v: usize) -> usize {
        self.host_edges_at(v).len()
    }
}

impl HostView for Hypergraph {
    fn host_vertex_count(&self) -> usize {
        self.vertex_count()
    }

    fn host_edge_count(&self) -> usize {
        self.edge_count()
    }

    fn host_edge(&self, i: usize) -> &[u8] {
        self.edge(i).as_slice()
    }

    fn host_edge_set(&self, i: usize) -> &VertexSet {
        self.edge_set(i)
    }

    fn host_edges_at(&self, v: usize) -> &[u32] {
        self.edges_at(v)
    }
}

/// A host with stack-like edge insertion, for searches that add and
/// retract edges. Edge indices are insertion positions.
#[derive(Clone, Debug, Default)]
pub struct DynamicHost {
    edges: Vec<Vec<u8>>,
    sets: Vec<VertexSet>,
    incidence: Vec<Vec<u32>>,
}

impl DynamicHost {
    pub fn new(n: usize) -> Self {
        DynamicHost {
            edges: Vec::new(),
            sets: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let mut host = Self::new(h.vertex_count());
        for e in h.edges() {
            host.push(&e.to_vec());
        }
        host
    }

    pub fn push(&mut self, e: &[usize]) -> usize {
        let idx = self.edges.len();
        for &v in e {
            self.incidence[v].push(idx as u32);
        }
        self.edges.push(e.iter().map(|&v| v as u8).collect());
        self.sets.push(e.iter().copied().collect());
        idx
    }

    pub fn pop(&mut self) {
        if let Some(e) = self.edges.pop() {
            self.sets.pop();
            for v in e {
                self.incidence[v as usize].pop();
            }
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_lists(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|e| e.iter().map(|&v| v as usize).collect())
    }
}

impl HostView for DynamicHost {
    fn host_vertex_count(&self) -> usize {
        self.incidence.len()
    }

    fn host_edge_count(&self) -> usize {
        self.edges.len()
    }

    fn host_edge(&self, i: usize) -> &[u8] {
        &self.edges[i]
    }

    fn host_edge_set(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    fn host_edges_at(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }
}
