//! Shapes of packing leaves.

use std::fmt;

use crate::hypercore::LeaveGraph;

/// The leave shapes that optimal 2-(m,4,1) packings take, plus stars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LeaveClass {
    Empty,
    /// disjoint triangles
    Triangles(usize),
    /// disjoint single pairs
    Matching(usize),
    /// `K_{1,4}` plus this many disjoint pairs
    ClawPlusMatching(usize),
    K33,
    /// `K_6` minus the edges of a `K_4`, plus this many disjoint triangles
    K6MinusK4PlusTriangles(usize),
    /// `K_{1,t}`, for `t >= 2`, `t != 4`
    Star(usize),
    Other,
}

impl fmt::Display for LeaveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeaveClass::Empty => write!(f, "empty"),
            LeaveClass::Triangles(t) => write!(f, "{t}K3"),
            LeaveClass::Matching(t) => write!(f, "{t}K2"),
            LeaveClass::ClawPlusMatching(0) => write!(f, "K1,4"),
            LeaveClass::ClawPlusMatching(t) => write!(f, "K1,4+{t}K2"),
            LeaveClass::K33 => write!(f, "K3,3"),
            LeaveClass::K6MinusK4PlusTriangles(0) => write!(f, "K6-K4"),
            LeaveClass::K6MinusK4PlusTriangles(t) => write!(f, "K6-K4+{t}K3"),
            LeaveClass::Star(t) => write!(f, "K1,{t}"),
            LeaveClass::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    K2,
    K3,
    Claw,
    K33,
    K6MinusK4,
    Star(usize),
    Other,
}

fn shape(leave: &LeaveGraph, comp: &[usize]) -> Shape {
    let v = comp.len();
    let e = leave
        .pairs()
        .iter()
        .filter(|(a, _)| comp.contains(a))
        .count();
    let mut deg: Vec<usize> = comp.iter().map(|&x| leave.degree(x)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    match (v, e) {
        (2, 1) => Shape::K2,
        (3, 3) => Shape::K3,
        (6, 9) if deg == [5, 5, 2, 2, 2, 2] => Shape::K6MinusK4,
        (6, 9) if deg.iter().all(|&d| d == 3) && bipartite(leave, comp) => Shape::K33,
        _ if e + 1 == v && deg[0] == e => {
            if e == 4 {
                Shape::Claw
            } else {
                Shape::Star(e)
            }
        }
        _ => Shape::Other,
    }
}

fn bipartite(leave: &LeaveGraph, comp: &[usize]) -> bool {
    let n = leave.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut stack = vec![comp[0]];
    color[comp[0]] = 0;
    while let Some(u) = stack.pop() {
        for w in leave.neighbors(u).iter() {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                stack.push(w);
            } else if color[w] == color[u] {
                return false;
            }
        }
    }
    true
}

/// Classifies a leave by the shapes of its components. Classes are tried
/// in a fixed order, so a lone `K_{1,4}` is `ClawPlusMatching(0)` and
/// never `Star(4)`.
pub fn classify_leave(leave: &LeaveGraph) -> LeaveClass {
    let comps = leave.components();
    if comps.is_empty() {
        return LeaveClass::Empty;
    }
    let shapes: Vec<Shape> = comps.iter().map(|c| shape(leave, c)).collect();
    let count = |s: Shape| shapes.iter().filter(|&&x| x == s).count();
    let total = shapes.len();
    if count(Shape::K3) == total {
        return LeaveClass::Triangles(total);
    }
    if count(Shape::K2) == total {
        return LeaveClass::Matching(total);
    }
    if count(Shape::Claw) == 1 && count(Shape::K2) == total - 1 {
        return LeaveClass::ClawPlusMatching(total - 1);
    }
    if total == 1 && shapes[0] == Shape::K33 {
        return LeaveClass::K33;
    }
    if count(Shape::K6MinusK4) == 1 && count(Shape::K3) == total - 1 {
        return LeaveClass::K6MinusK4PlusTriangles(total - 1);
    }
    if let [Shape::Star(t)] = shapes[..] {
        return LeaveClass::Star(t);
    }
    LeaveClass::Other
}

impl LeaveClass {
    /// Vertices the shape occupies.
    pub fn vertex_count(&self) -> Option<usize> {
        Some(match self {
            LeaveClass::Empty => 0,
            LeaveClass::Triangles(t) => 3 * t,
            LeaveClass::Matching(t) => 2 * t,
            LeaveClass::ClawPlusMatching(t) => 5 + 2 * t,
            LeaveClass::K33 => 6,
            LeaveClass::K6MinusK4PlusTriangles(t) => 6 + 3 * t,
            LeaveClass::Star(t) => t + 1,
            LeaveClass::Other => return None,
        })
    }

    /// Number of uncovered pairs.
    pub fn pair_count(&self) -> Option<usize> {
        Some(match self {
            LeaveClass::Empty => 0,
            LeaveClass::Triangles(t) => 3 * t,
            LeaveClass::Matching(t) => *t,
            LeaveClass::ClawPlusMatching(t) => 4 + t,
            LeaveClass::K33 => 9,
            LeaveClass::K6MinusK4PlusTriangles(t) => 9 + 3 * t,
            LeaveClass::Star(t) => *t,
            LeaveClass::Other => return None,
        })
    }

    /// A concrete leave of this shape on `n` vertices, using the lowest ids.
    pub fn render(&self, n: usize) -> Option<LeaveGraph> {
        if self.vertex_count()? > n {
            return None;
        }
        let mut pairs = Vec::new();
        let mut next = 0;
        let mut take = |k: usize| {
            let s = next;
            next += k;
            s
        };
        let triangle = |s: usize, pairs: &mut Vec<(usize, usize)>| {
            pairs.extend([(s, s + 1), (s, s + 2), (s + 1, s + 2)]);
        };
        match self {
            LeaveClass::Empty | LeaveClass::Other => {}
            LeaveClass::Triangles(t) => {
                for _ in 0..*t {
                    triangle(take(3), &mut pairs);
                }
            }
            LeaveClass::Matching(t) => {
                for _ in 0..*t {
                    let s = take(2);
                    pairs.push((s, s + 1));
                }
            }
            LeaveClass::ClawPlusMatching(t) => {
                let c = take(5);
                pairs.extend((1..5).map(|i| (c, c + i)));
                for _ in 0..*t {
                    let s = take(2);
                    pairs.push((s, s + 1));
                }
            }
            LeaveClass::K33 => {
                let s = take(6);
                for a in 0..3 {
                    for b in 3..6 {
                        pairs.push((s + a, s + b));
                    }
                }
            }
            LeaveClass::K6MinusK4PlusTriangles(t) => {
                let s = take(6);
                pairs.push((s, s + 1));
                for hub in [s, s + 1] {
                    pairs.extend((2..6).map(|i| (hub, s + i)));
                }
                for _ in 0..*t {
                    triangle(take(3), &mut pairs);
                }
            }
            LeaveClass::Star(t) => {
                let c = take(t + 1);
                pairs.extend((1..=*t).map(|i| (c, c + i)));
            }
        }
        Some(LeaveGraph::new(n, pairs))
    }
}

/// The leave an optimal packing on `m` points has, for `m` outside the
/// exceptional orders 8, 9, 10, 11, 17 and 19.
pub fn lemma41_leave(m: usize) -> Option<LeaveClass> {
    if matches!(m, 8 | 9 | 10 | 11 | 17 | 19) || m < 4 {
        return None;
    }
    Some(match m % 12 {
        0 | 3 => LeaveClass::Triangles(m / 3),
        2 | 8 => LeaveClass::Matching(m / 2),
        5 | 11 => LeaveClass::ClawPlusMatching((m - 5) / 2),
        7 | 10 => LeaveClass::K33,
        6 | 9 => LeaveClass::K6MinusK4PlusTriangles((m - 6) / 3),
        _ => LeaveClass::Empty,
    })
}
