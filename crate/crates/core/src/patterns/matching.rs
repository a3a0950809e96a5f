use super::{Embedding, HostView};
use crate::hypercore::VertexSet;

fn embedding_for<H: HostView>(host: &H, chosen: &[usize]) -> Embedding {
    let vertex_map = chosen
        .iter()
        .flat_map(|&e| {
            let mut vs: Vec<usize> = host.host_edge(e).iter().map(|&v| v as usize).collect();
            vs.sort_unstable();
            vs
        })
        .collect();
    Embedding {
        edge_map: chosen.to_vec(),
        vertex_map,
    }
}

fn greedy<H: HostView>(host: &H, k: usize, candidates: &[usize], used: VertexSet) -> Option<Vec<usize>> {
    let mut order = candidates.to_vec();
    // edges touching few others first
    order.sort_by_cached_key(|&e| {
        let load: usize = host.host_edge(e).iter().map(|&v| host.host_degree(v as usize)).sum();
        (load, e)
    });
    let mut used = used;
    let mut chosen = Vec::new();
    for e in order {
        if host.host_edge_set(e).is_disjoint(&used) {
            used = used.union(host.host_edge_set(e));
            chosen.push(e);
            if chosen.len() == k {
                return Some(chosen);
            }
        }
    }
    None
}

struct Exact<'a, H: HostView> {
    host: &'a H,
    candidates: &'a [usize],
    k: usize,
    free_vertices: usize,
    chosen: Vec<usize>,
}

impl<H: HostView> Exact<'_, H> {
    fn run(&mut self, start: usize, used: VertexSet) -> bool {
        if self.chosen.len() == self.k {
            return true;
        }
        let missing = self.k - self.chosen.len();
        if self.candidates.len() - start < missing {
            return false;
        }
        let r = self.host.host_edge(self.candidates[start]).len();
        if (self.free_vertices - used.len()) / r < missing {
            return false;
        }
        for i in start..self.candidates.len() {
            if self.candidates.len() - i < missing {
                break;
            }
            let e = self.candidates[i];
            let set = self.host.host_edge_set(e);
            if !set.is_disjoint(&used) {
                continue;
            }
            self.chosen.push(e);
            if self.run(i + 1, used.union(set)) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn find<H: HostView>(host: &H, k: usize, candidates: &[usize], used: VertexSet) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if candidates.len() < k {
        return None;
    }
    if let Some(found) = greedy(host, k, candidates, used) {
        return Some(found);
    }
    let mut exact = Exact {
        host,
        candidates,
        k,
        free_vertices: host.host_vertex_count(),
        chosen: Vec::new(),
    };
    exact.run(0, used).then_some(exact.chosen)
}

/// Finds `k` pairwise disjoint edges. Greedy first, then exhaustive
/// branch-and-bound, so a `None` is a proof of absence.
pub fn contains_matching<H: HostView>(host: &H, k: usize) -> Option<Embedding> {
    let all: Vec<usize> = (0..host.host_edge_count()).collect();
    find(host, k, &all, VertexSet::new()).map(|chosen| embedding_for(host, &chosen))
}

/// Finds `k` pairwise disjoint edges, one of them being `edge`.
pub fn matching_through<H: HostView>(host: &H, k: usize, edge: usize) -> Option<Embedding> {
    if k == 0 {
        return None;
    }
    let blocked = *host.host_edge_set(edge);
    let rest: Vec<usize> = (0..host.host_edge_count())
        .filter(|&e| host.host_edge_set(e).is_disjoint(&blocked))
        .collect();
    find(host, k - 1, &rest, blocked).map(|mut chosen| {
        chosen.insert(0, edge);
        embedding_for(host, &chosen)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::Hypergraph;
    use crate::patterns::Forbidden;

    #[test]
    fn single_edge_has_no_two_matching() {
        let h = Hypergraph::new(4, 4, [[0, 1, 2, 3]]).unwrap();
        assert!(contains_matching(&h, 2).is_none());
        assert!(contains_matching(&h, 1).is_some());
    }

    #[test]
    fn greedy_miss_is_recovered_exactly() {
        // a 2-matching exists, a 3-matching does not
        let h = Hypergraph::new(
            4,
            12,
            [[0, 1, 2, 3], [3, 4, 5, 6], [6, 7, 8, 9], [0, 10, 11, 4]],
        )
        .unwrap();
        let emb = contains_matching(&h, 2).unwrap();
        emb.validate(&h, &Forbidden::Matching { r: 4, k: 2 }.realize()).unwrap();
        assert!(contains_matching(&h, 3).is_none());
    }

    #[test]
    fn through_edge() {
        let h = Hypergraph::new(4, 12, [[0, 1, 2, 3], [4, 5, 6, 7], [0, 4, 8, 9]]).unwrap();
        let through_star = h.position(&[0, 4, 8, 9]).unwrap();
        assert!(matching_through(&h, 2, through_star).is_none());
        let emb = matching_through(&h, 2, 0).unwrap();
        assert_eq!(emb.edge_map[0], 0);
    }
}
