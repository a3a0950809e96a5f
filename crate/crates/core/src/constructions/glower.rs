//! Many quadruples meeting a fixed small set `A`.
//!
//! `A` is the first `k-1` vertices. Inside `A` goes the best packing we can
//! certify. Outside `A`, `k-1` pairwise pair-disjoint parallel classes of
//! triples are built on `3 floor((n-k+1)/3)` vertices, and class `i` is
//! joined to the `i`-th vertex of `A`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{packing_optimal_small, Certificate, Construction, ConstructionError, PACKING_TABLE_ORDERS};
use crate::bounds::g_bounds;
use crate::hypercore::{Hypergraph, LinearBuilder};
use crate::search::{exact_packing, Budget};

/// Node budget for the parallel-class backtracking.
pub const CLASS_NODES: u64 = 2_000_000;

/// Parallel classes of triples on `0..points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelClasses {
    pub points: usize,
    pub classes: Vec<Vec<[usize; 3]>>,
    /// False if some class is only a partial matching.
    pub complete: bool,
}

/// Classes `{(0,y), (1,y+c), (2,y+2c)}` on three rows of `t` points.
fn grid_classes(t: usize) -> Vec<Vec<[usize; 3]>> {
    let available = if t % 2 == 1 { t } else { t / 2 };
    (0..available)
        .map(|c| {
            (0..t)
                .map(|y| [y, t + (y + c) % t, 2 * t + (y + 2 * c) % t])
                .collect()
        })
        .collect()
}

struct ClassSearch {
    points: usize,
    count: usize,
    used: Vec<bool>,
    in_class: Vec<bool>,
    classes: Vec<Vec<[usize; 3]>>,
    order: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl ClassSearch {
    fn pair(&self, a: usize, b: usize) -> usize {
        a * self.points + b
    }

    fn set(&mut self, t: [usize; 3], value: bool) {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let (i, j) = (self.pair(a, b), self.pair(b, a));
            self.used[i] = value;
            self.used[j] = value;
        }
        for v in t {
            self.in_class[v] = value;
        }
    }

    fn fill(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        let current = self.classes.len() - 1;
        let Some(p) = self.order.iter().copied().find(|&v| !self.in_class[v]) else {
            if self.classes.len() == self.count {
                return true;
            }
            let saved = std::mem::replace(&mut self.in_class, vec![false; self.points]);
            self.classes.push(Vec::new());
            if self.fill() {
                return true;
            }
            self.classes.pop();
            self.in_class = saved;
            return false;
        };
        let free: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|&v| v != p && !self.in_class[v] && !self.used[self.pair(p, v)])
            .collect();
        for (i, &q) in free.iter().enumerate() {
            for &r in &free[i + 1..] {
                if self.used[self.pair(q, r)] {
                    continue;
                }
                let mut t = [p, q, r];
                t.sort_unstable();
                self.set(t, true);
                self.classes[current].push(t);
                if self.fill() {
                    return true;
                }
                self.classes[current].pop();
                self.set(t, false);
                if self.nodes > self.limit {
                    return false;
                }
            }
        }
        false
    }
}

fn search_classes(
    points: usize,
    count: usize,
    fixed: &[Vec<[usize; 3]>],
    rng: &mut ChaCha8Rng,
    limit: u64,
) -> Option<Vec<Vec<[usize; 3]>>> {
    let mut order: Vec<usize> = (0..points).collect();
    order.shuffle(rng);
    let mut s = ClassSearch {
        points,
        count,
        used: vec![false; points * points],
        in_class: vec![false; points],
        classes: Vec::new(),
        order,
        nodes: 0,
        limit,
    };
    for class in fixed {
        for &t in class {
            s.set(t, true);
        }
        s.classes.push(class.clone());
    }
    if s.classes.len() >= count {
        s.classes.truncate(count);
        return Some(s.classes);
    }
    s.in_class = vec![false; points];
    s.classes.push(Vec::new());
    s.fill().then_some(s.classes)
}

/// Largest partial class found greedily in a random order, avoiding the
/// pairs already used by `classes`.
fn partial_class(points: usize, classes: &[Vec<[usize; 3]>], rng: &mut ChaCha8Rng, tries: usize) -> Vec<[usize; 3]> {
    let mut used = vec![false; points * points];
    for t in classes.iter().flatten() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            used[a * points + b] = true;
            used[b * points + a] = true;
        }
    }
    let mut best: Vec<[usize; 3]> = Vec::new();
    let mut order: Vec<usize> = (0..points).collect();
    for _ in 0..tries {
        order.shuffle(rng);
        let mut taken = vec![false; points];
        let mut class = Vec::new();
        for (i, &a) in order.iter().enumerate() {
            if taken[a] {
                continue;
            }
            'pick: for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if taken[b] || used[a * points + b] {
                    continue;
                }
                for &c in &order[j + 1..] {
                    if !taken[c] && !used[a * points + c] && !used[b * points + c] {
                        let mut t = [a, b, c];
                        t.sort_unstable();
                        class.push(t);
                        for v in t {
                            taken[v] = true;
                        }
                        break 'pick;
                    }
                }
            }
        }
        if class.len() > best.len() {
            best = class;
        }
    }
    best.sort_unstable();
    best
}

/// `count` pairwise pair-disjoint parallel classes of triples on `points`
/// (a multiple of 3) vertices. Grid classes are used when there are enough;
/// otherwise a seeded backtracking search extends them. If that fails
/// within the node budget, the missing classes are filled with partial
/// matchings and `complete` is false.
pub fn parallel_classes(points: usize, count: usize, seed: u64, limit: u64) -> ParallelClasses {
    assert_eq!(points % 3, 0, "points must be a multiple of 3");
    let t = points / 3;
    if count == 0 || t == 0 {
        return ParallelClasses {
            points,
            classes: vec![Vec::new(); count],
            complete: t > 0 || count == 0,
        };
    }
    let grid = grid_classes(t);
    if grid.len() >= count {
        return ParallelClasses {
            points,
            classes: grid[..count].to_vec(),
            complete: true,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for keep in [grid.len(), grid.len().min(1), 0] {
        if let Some(classes) = search_classes(points, count, &grid[..keep], &mut rng, limit / 3) {
            return ParallelClasses {
                points,
                classes,
                complete: true,
            };
        }
    }
    let mut classes = grid;
    while classes.len() < count {
        let next = partial_class(points, &classes, &mut rng, 200);
        classes.push(next);
    }
    ParallelClasses {
        points,
        complete: classes.iter().all(|c| c.len() == t),
        classes,
    }
}

#[derive(Clone, Debug)]
pub struct GConstruction {
    pub construction: Construction,
    /// The fixed set `A`.
    pub fixed_set: Vec<usize>,
    /// Edges placed inside `A`.
    pub inside: usize,
    pub classes_complete: bool,
}

/// Best certified packing on `a` points, and how it was obtained.
fn inside_packing(a: usize) -> (Hypergraph, &'static str) {
    if PACKING_TABLE_ORDERS.contains(&a) {
        let c = packing_optimal_small(a).expect("listed order");
        return (c.hypergraph, "tabulated optimal packing");
    }
    if a <= 13 {
        let r = exact_packing(a, Budget::default()).expect("a is small");
        if r.completed {
            return (r.witness, "exact search");
        }
    }
    if a == 16 {
        let h = super::steiner_2_4_16().hypergraph;
        return (h, "S(2,4,16)");
    }
    // greedy, in lexicographic order
    let mut b = LinearBuilder::new(4, a).expect("a is within capacity");
    for q in crate::search::combinations4(a) {
        if b.fits(&q) {
            b.try_add(&q).expect("fits was checked");
        }
    }
    (b.build(), "greedy packing (possibly suboptimal)")
}

/// The construction for `g(n, k)`, with `A = {0, ..., k-2}`.
pub fn g_lower_construction(n: usize, k: usize, seed: u64) -> Result<GConstruction, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Domain {
            construction: "g(n,k) construction",
            requirement: "k >= 2".into(),
            value: k,
        });
    }
    if n < 4 * k - 4 {
        return Err(ConstructionError::Domain {
            construction: "g(n,k) construction",
            requirement: format!("n >= 4k-4 = {}", 4 * k - 4),
            value: n,
        });
    }
    let a = k - 1;
    let t = (n - a) / 3;
    let (packing, how) = inside_packing(a);
    let pc = parallel_classes(3 * t, a, seed, CLASS_NODES);
    let mut edges: Vec<Vec<usize>> = packing.edges().iter().map(|e| e.to_vec()).collect();
    for (i, class) in pc.classes.iter().enumerate() {
        for tr in class {
            edges.push(vec![i, a + tr[0], a + tr[1], a + tr[2]]);
        }
    }
    let h = Hypergraph::new(4, n, edges)?;
    let fixed: Vec<usize> = (0..a).collect();
    let rep = g_bounds(n as i64, k as i64).expect("k >= 2");
    let m = h.edge_count() as i64;

    let mut cert = Certificate::new();
    cert.linear(&h);
    let meets = h.edges().iter().all(|e| e.iter().any(|v| v < a));
    cert.check("every edge meets A", meets, format!("A = {fixed:?}"));
    cert.check(
        "edges>=lower bound",
        m >= rep.lower_int(),
        format!("{m} edges, lower bound {}", crate::bounds::fmt_rational(rep.lower)),
    );
    cert.check(
        "edges<=upper bound",
        m <= rep.upper_int(),
        format!("{m} edges, upper bound {}", crate::bounds::fmt_rational(rep.upper)),
    );
    if k == 2 {
        cert.check(
            "edges=floor((n-1)/3)",
            m as usize == (n - 1) / 3,
            format!("{m} edges"),
        );
    }
    let mut c = Construction::new(format!("g construction n={n} k={k}"), h);
    c.certificate = cert;
    c.findings.push(format!("inside A: {} edges ({how})", packing.edge_count()));
    if !pc.complete {
        c.findings.push(format!(
            "only partial parallel classes exist on {} points for {a} classes; sizes {:?}",
            3 * t,
            pc.classes.iter().map(Vec::len).collect::<Vec<_>>()
        ));
    }
    if !c.certificate.all_passed() {
        let failed: Vec<String> = c.certificate.failures().map(|f| f.property.clone()).collect();
        return Err(ConstructionError::Infeasible(format!(
            "g construction n={n} k={k} failed: {}",
            failed.join(", ")
        )));
    }
    Ok(GConstruction {
        construction: c,
        fixed_set: fixed,
        inside: packing.edge_count(),
        classes_complete: pc.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_classes_are_pair_disjoint() {
        for t in 1..9 {
            let pc = parallel_classes(3 * t, grid_classes(t).len(), 0, 1000);
            assert!(pc.complete);
            let mut seen = std::collections::HashSet::new();
            for tr in pc.classes.iter().flatten() {
                for p in [(tr[0], tr[1]), (tr[0], tr[2]), (tr[1], tr[2])] {
                    assert!(seen.insert(p), "t = {t}");
                }
            }
        }
    }

    #[test]
    fn star_case() {
        for (n, e) in [(7, 2), (16, 5), (40, 13)] {
            let g = g_lower_construction(n, 2, 1).unwrap();
            assert_eq!(g.construction.hypergraph.edge_count(), e);
        }
    }
}
