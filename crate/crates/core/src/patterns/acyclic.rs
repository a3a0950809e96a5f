use crate::hypercore::{Hypergraph, HypergraphError, VertexSet};

/// Outcome of the acyclicity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acyclicity {
    pub acyclic: bool,
    /// When acyclic: an edge order in which each edge meets the union of
    /// the earlier ones in at most one vertex. Otherwise: the edges left
    /// when peeling got stuck.
    pub order: Vec<usize>,
}

impl Acyclicity {
    /// Forward re-check of an acyclic certificate.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        if !self.acyclic {
            return true;
        }
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        if sorted != (0..h.edge_count()).collect::<Vec<_>>() {
            return false;
        }
        let mut seen = VertexSet::new();
        for &e in &self.order {
            if h.edge_set(e).intersection_len(&seen) > 1 {
                return false;
            }
            seen = seen.union(h.edge_set(e));
        }
        true
    }
}

/// Decides acyclicity of a linear hypergraph by reverse peeling: repeatedly
/// drop an edge meeting the union of the remaining edges in at most one
/// vertex. The reversed drop order is the build order.
pub fn is_acyclic(h: &Hypergraph) -> Result<Acyclicity, HypergraphError> {
    h.pair_coverage()?;
    let mut count = vec![0usize; h.vertex_count()];
    for e in h.edges() {
        for v in e.iter() {
            count[v] += 1;
        }
    }
    let mut alive = vec![true; h.edge_count()];
    let mut removed = Vec::with_capacity(h.edge_count());
    loop {
        let peel = (0..h.edge_count()).find(|&i| {
            alive[i] && h.edge(i).iter().filter(|&v| count[v] >= 2).count() <= 1
        });
        match peel {
            Some(i) => {
                alive[i] = false;
                for v in h.edge(i).iter() {
                    count[v] -= 1;
                }
                removed.push(i);
            }
            None => break,
        }
    }
    if removed.len() == h.edge_count() {
        removed.reverse();
        Ok(Acyclicity {
            acyclic: true,
            order: removed,
        })
    } else {
        Ok(Acyclicity {
            acyclic: false,
            order: (0..h.edge_count()).filter(|&i| alive[i]).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::TreePattern;

    #[test]
    fn trees_and_matchings_are_acyclic() {
        for t in [
            TreePattern::path(4, 6).unwrap(),
            TreePattern::e4_plus(4).unwrap(),
            TreePattern::s3_plus(4).unwrap(),
        ] {
            let h = t.realize();
            let a = is_acyclic(&h).unwrap();
            assert!(a.acyclic);
            assert!(a.verify(&h));
        }
        let two = Hypergraph::new(4, 8, [[0, 1, 2, 3], [4, 5, 6, 7]]).unwrap();
        assert!(is_acyclic(&two).unwrap().acyclic);
    }

    #[test]
    fn triangle_is_cyclic() {
        let tri = Hypergraph::new(4, 9, [[0, 1, 2, 3], [3, 4, 5, 6], [6, 7, 8, 0]]).unwrap();
        let a = is_acyclic(&tri).unwrap();
        assert!(!a.acyclic);
        assert_eq!(a.order.len(), 3);
    }

    #[test]
    fn non_linear_is_an_error() {
        let h = Hypergraph::new(4, 6, [[0, 1, 2, 3], [0, 1, 4, 5]]).unwrap();
        assert!(is_acyclic(&h).is_err());
    }
}
