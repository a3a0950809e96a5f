//! Backtracking embedder for linear tree patterns.
//!
//! Pattern edges are placed in an order where each new edge hangs off one
//! already-placed vertex. A host edge can take a new pattern edge when it
//! contains the anchor's image and its other vertices are all unused, which
//! makes every image edge meet the earlier images exactly where the pattern
//! says, even in non-linear hosts.

use super::{Embedding, HostView, TreePattern};
use crate::hypercore::VertexSet;

const UNSET: usize = usize::MAX;

struct Step {
    edge: usize,
    anchor: Option<usize>,
    /// New pattern vertices; the first `branching` of them carry further edges.
    fresh: Vec<usize>,
    branching: usize,
}

struct Plan {
    steps: Vec<Step>,
    /// pattern vertex -> number of pattern edges containing it
    need: Vec<usize>,
    vertex_count: usize,
}

fn make_plan(edges: &[Vec<usize>], vertex_count: usize, root: usize) -> Plan {
    let mut need = vec![0usize; vertex_count];
    for e in edges {
        for &v in e {
            need[v] += 1;
        }
    }
    let order_fresh = |vs: Vec<usize>| {
        let mut vs = vs;
        vs.sort_by_key(|&v| (std::cmp::Reverse(need[v]), v));
        let branching = vs.iter().filter(|&&v| need[v] >= 2).count();
        (vs, branching)
    };

    let mut placed_vertices = VertexSet::new();
    let mut placed = vec![false; edges.len()];
    let mut steps = Vec::with_capacity(edges.len());

    let (fresh, branching) = order_fresh(edges[root].clone());
    for &v in &edges[root] {
        placed_vertices.insert(v);
    }
    placed[root] = true;
    steps.push(Step {
        edge: root,
        anchor: None,
        fresh,
        branching,
    });

    // breadth-first over edges so anchors are always placed
    let mut frontier = 0;
    while steps.len() < edges.len() {
        assert!(frontier < steps.len(), "pattern is not a connected linear tree");
        let base = steps[frontier].edge;
        let base_vertices: Vec<usize> = edges[base].clone();
        for (i, e) in edges.iter().enumerate() {
            if placed[i] {
                continue;
            }
            let shared: Vec<usize> = e.iter().copied().filter(|&v| placed_vertices.contains(v)).collect();
            if shared.len() == 1 && base_vertices.contains(&shared[0]) {
                let anchor = shared[0];
                let (fresh, branching) =
                    order_fresh(e.iter().copied().filter(|&v| v != anchor).collect());
                for &v in e {
                    placed_vertices.insert(v);
                }
                placed[i] = true;
                steps.push(Step {
                    edge: i,
                    anchor: Some(anchor),
                    fresh,
                    branching,
                });
            }
        }
        frontier += 1;
    }
    Plan {
        steps,
        need,
        vertex_count,
    }
}

/// All orderings of `items` whose tail after `head` positions is ascending.
fn arrangements(items: &[usize], head: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, head: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == head || rest.is_empty() {
            let mut tail = rest.clone();
            tail.sort_unstable();
            let mut full = cur.clone();
            full.extend(tail);
            out.push(full);
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, head, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut items.to_vec(), &mut Vec::new(), head, &mut out);
    out
}

struct Search<'a, H: HostView> {
    host: &'a H,
    plan: &'a Plan,
    vmap: Vec<usize>,
    emap: Vec<usize>,
    used_vertices: VertexSet,
    used_edges: Vec<bool>,
}

impl<'a, H: HostView> Search<'a, H> {
    fn new(host: &'a H, plan: &'a Plan, edge_count: usize) -> Self {
        Search {
            host,
            plan,
            vmap: vec![UNSET; plan.vertex_count],
            emap: vec![UNSET; edge_count],
            used_vertices: VertexSet::new(),
            used_edges: vec![false; host.host_edge_count()],
        }
    }

    fn try_edge(&mut self, depth: usize, host_edge: usize) -> bool {
        if self.used_edges[host_edge] {
            return false;
        }
        let plan = self.plan;
        let step = &plan.steps[depth];
        let anchor_image = step.anchor.map(|a| self.vmap[a]);
        let others: Vec<usize> = self
            .host
            .host_edge(host_edge)
            .iter()
            .map(|&v| v as usize)
            .filter(|&v| Some(v) != anchor_image)
            .collect();
        if others.len() != step.fresh.len() || others.iter().any(|&v| self.used_vertices.contains(v)) {
            return false;
        }
        for arrangement in arrangements(&others, step.branching) {
            let degree_ok = step.fresh[..step.branching]
                .iter()
                .zip(&arrangement)
                .all(|(&p, &h)| self.host.host_degree(h) >= plan.need[p]);
            if !degree_ok {
                continue;
            }
            for (&p, &h) in step.fresh.iter().zip(&arrangement) {
                self.vmap[p] = h;
                self.used_vertices.insert(h);
            }
            self.emap[step.edge] = host_edge;
            self.used_edges[host_edge] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used_edges[host_edge] = false;
            self.emap[step.edge] = UNSET;
            for (&p, &h) in step.fresh.iter().zip(&arrangement) {
                self.vmap[p] = UNSET;
                self.used_vertices.remove(h);
            }
        }
        false
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.plan.steps.len() {
            return true;
        }
        let anchor = self.plan.steps[depth]
            .anchor
            .expect("only the root step lacks an anchor");
        let image = self.vmap[anchor];
        let host = self.host;
        for &e in host.host_edges_at(image) {
            if self.try_edge(depth, e as usize) {
                return true;
            }
        }
        false
    }

    /// The embedding with edges indexed as in `pattern.realize()`, whose
    /// edge list is sorted rather than in attachment order.
    fn finish(self, pattern: &TreePattern, edges: &[Vec<usize>]) -> Embedding {
        let realized = pattern.realize();
        let mut edge_map = vec![UNSET; edges.len()];
        for (i, e) in edges.iter().enumerate() {
            let at = realized.position(e).expect("literal edges are the realized edges");
            edge_map[at] = self.emap[i];
        }
        Embedding {
            edge_map,
            vertex_map: self.vmap,
        }
    }
}

fn plan_root(pattern: &TreePattern, edges: &[Vec<usize>]) -> usize {
    let mut need = vec![0usize; pattern.vertex_count()];
    for e in edges {
        for &v in e {
            need[v] += 1;
        }
    }
    (0..edges.len())
        .max_by_key(|&i| {
            let branching = edges[i].iter().filter(|&&v| need[v] >= 2).count();
            (branching, std::cmp::Reverse(i))
        })
        .unwrap_or(0)
}

/// Finds a copy of `pattern` in `host`, if any.
pub fn contains_tree<H: HostView>(host: &H, pattern: &TreePattern) -> Option<Embedding> {
    if host.host_edge_count() < pattern.edge_count() {
        return None;
    }
    let edges = pattern.literal_edges();
    let root = plan_root(pattern, &edges);
    let plan = make_plan(&edges, pattern.vertex_count(), root);
    let mut roots: Vec<usize> = (0..host.host_edge_count()).collect();
    // fail fast on dense hosts: high-degree edges first
    roots.sort_by_cached_key(|&e| {
        let mut d: Vec<usize> = host.host_edge(e).iter().map(|&v| host.host_degree(v as usize)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        (std::cmp::Reverse(d), e)
    });
    let mut search = Search::new(host, &plan, edges.len());
    for e in roots {
        if search.try_edge(0, e) {
            return Some(search.finish(pattern, &edges));
        }
    }
    None
}

/// Finds a copy of `pattern` that uses host edge `edge`.
pub fn contains_tree_through<H: HostView>(
    host: &H,
    pattern: &TreePattern,
    edge: usize,
) -> Option<Embedding> {
    if host.host_edge_count() < pattern.edge_count() {
        return None;
    }
    let edges = pattern.literal_edges();
    for root in 0..edges.len() {
        let plan = make_plan(&edges, pattern.vertex_count(), root);
        let mut search = Search::new(host, &plan, edges.len());
        if search.try_edge(0, edge) {
            return Some(search.finish(pattern, &edges));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::Hypergraph;

    #[test]
    fn arrangement_counts() {
        assert_eq!(arrangements(&[1, 2, 3, 4], 4).len(), 24);
        assert_eq!(arrangements(&[1, 2, 3, 4], 1).len(), 4);
        assert_eq!(arrangements(&[1, 2, 3], 0), vec![vec![1, 2, 3]]);
        assert_eq!(arrangements(&[3, 1, 2], 2).len(), 6);
    }

    #[test]
    fn literal_realization_embeds_as_identity() {
        for t in [
            TreePattern::e4_plus(4).unwrap(),
            TreePattern::path(4, 5).unwrap(),
            TreePattern::s3_plus(4).unwrap(),
            TreePattern::star(3, 4).unwrap(),
        ] {
            let host = t.realize();
            let emb = contains_tree(&host, &t).expect("pattern embeds in itself");
            emb.validate(&host, &host).unwrap();
            let mut edges = emb.edge_map.clone();
            edges.sort_unstable();
            assert_eq!(edges, (0..t.edge_count()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn edge_map_follows_realized_order() {
        // the third edge hangs off vertex 0, so it sorts before the second
        let t = TreePattern::new(3, vec![(0, 2), (0, 0)]).unwrap();
        let host = Hypergraph::new(3, 8, [[0, 2, 6], [0, 4, 5], [1, 3, 5], [1, 6, 7], [2, 3, 7]]).unwrap();
        let emb = contains_tree(&host, &t).unwrap();
        emb.validate(&host, &t.realize()).unwrap();
        for e in 0..host.edge_count() {
            if let Some(emb) = contains_tree_through(&host, &t, e) {
                emb.validate(&host, &t.realize()).unwrap();
            }
        }
    }

    #[test]
    fn path_is_not_in_star() {
        let star = TreePattern::star(4, 5).unwrap().realize();
        assert!(contains_tree(&star, &TreePattern::path(4, 3).unwrap()).is_none());
        assert!(contains_tree(&star, &TreePattern::star(4, 5).unwrap()).is_some());
        assert!(contains_tree(&star, &TreePattern::star(4, 6).unwrap()).is_none());
    }

    #[test]
    fn through_a_given_edge() {
        // a P3 plus a far-away disjoint edge
        let host = Hypergraph::new(
            4,
            14,
            [[0, 1, 2, 3], [3, 4, 5, 6], [6, 7, 8, 9], [10, 11, 12, 13]],
        )
        .unwrap();
        let p3 = TreePattern::path(4, 3).unwrap();
        for e in 0..3 {
            let emb = contains_tree_through(&host, &p3, e).unwrap();
            assert!(emb.edge_map.contains(&e));
            emb.validate(&host, &p3.realize()).unwrap();
        }
        assert!(contains_tree_through(&host, &p3, 3).is_none());
    }
}
