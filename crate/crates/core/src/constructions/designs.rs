//! Hardcoded designs and the constructions built directly from them.

use super::{pad, repeat, Construction, ConstructionError};
use crate::bounds::packing_value;
use crate::hypercore::Hypergraph;
use crate::patterns::{named_pattern, Forbidden, TreePattern};

const S13: [[usize; 4]; 13] = [
    [1, 2, 3, 4],
    [1, 5, 6, 7],
    [1, 8, 9, 10],
    [1, 11, 12, 13],
    [2, 5, 9, 13],
    [2, 6, 10, 11],
    [2, 7, 8, 12],
    [3, 5, 10, 12],
    [3, 6, 8, 13],
    [3, 7, 9, 11],
    [4, 5, 8, 11],
    [4, 6, 9, 12],
    [4, 7, 10, 13],
];

// GF(4) with elements 0, 1, a, a+1 encoded as 0..4; addition is xor.
const GF4_MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

/// Lines of AG(2,4), point `(x, y)` numbered `4x + y + 1`.
fn affine_plane_4() -> Vec<[usize; 4]> {
    let point = |x: usize, y: usize| 4 * x + y + 1;
    let mut lines = Vec::with_capacity(20);
    for slope in 0..4 {
        for b in 0..4 {
            let mut l = [0; 4];
            for (x, p) in l.iter_mut().enumerate() {
                *p = point(x, GF4_MUL[slope][x] ^ b);
            }
            lines.push(l);
        }
    }
    for x in 0..4 {
        lines.push([point(x, 0), point(x, 1), point(x, 2), point(x, 3)]);
    }
    lines
}

/// Points of `Z_p^d`, numbered in base `p`.
fn group_point(p: usize, coords: &[usize]) -> usize {
    coords.iter().fold(0, |acc, &c| acc * p + c % p)
}

/// All translates of `base` blocks in `Z_p^d`.
fn develop(p: usize, d: usize, base: &[[[usize; 3]; 4]]) -> Vec<[usize; 4]> {
    let order = p.pow(d as u32);
    let mut blocks = Vec::with_capacity(order * base.len());
    for g in 0..order {
        let shift: Vec<usize> = (0..d).rev().map(|i| g / p.pow(i as u32) % p).collect();
        for b in base {
            blocks.push(b.map(|x| {
                let moved: Vec<usize> = (0..d).map(|i| x[3 - d + i] + shift[i]).collect();
                group_point(p, &moved)
            }));
        }
    }
    blocks
}

/// `S(2,4,25)` from a difference family in `Z_5 x Z_5`.
fn steiner_25_blocks() -> Vec<[usize; 4]> {
    develop(
        5,
        2,
        &[
            [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 2, 2]],
            [[0, 0, 0], [0, 0, 2], [0, 1, 3], [0, 3, 2]],
        ],
    )
}

/// `S(2,4,28)` on `Z_3^3` plus a point at infinity (vertex 27).
fn steiner_28_blocks() -> Vec<[usize; 4]> {
    let mut blocks = develop(
        3,
        3,
        &[
            [[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 1]],
            [[0, 0, 0], [0, 1, 2], [1, 2, 1], [2, 2, 0]],
        ],
    );
    // the short orbit: infinity with each coset of {(0,0,c)}
    for x in (0..27).step_by(3) {
        blocks.push([x, x + 1, x + 2, 27]);
    }
    blocks
}

const H1: [[usize; 4]; 2] = [[1, 2, 3, 4], [5, 6, 7, 8]];
const H2: [[usize; 4]; 3] = [[1, 2, 3, 4], [1, 5, 6, 7], [3, 6, 8, 9]];
const H3: [[usize; 4]; 5] = [[1, 2, 3, 4], [2, 5, 6, 7], [1, 5, 9, 10], [3, 7, 8, 10], [4, 6, 8, 9]];
const H4: [[usize; 4]; 6] = [
    [1, 2, 3, 4],
    [1, 5, 6, 7],
    [1, 8, 9, 10],
    [2, 5, 8, 11],
    [3, 6, 9, 11],
    [4, 7, 10, 11],
];

// Stinson's optimal packing on 19 points.
const P19: [[usize; 4]; 25] = [
    [1, 2, 3, 4],
    [1, 5, 6, 10],
    [2, 5, 7, 17],
    [3, 6, 8, 18],
    [4, 7, 9, 18],
    [5, 8, 9, 11],
    [1, 7, 11, 12],
    [1, 8, 13, 14],
    [1, 9, 15, 16],
    [2, 6, 11, 15],
    [2, 8, 12, 16],
    [3, 5, 13, 19],
    [3, 7, 14, 15],
    [3, 9, 10, 12],
    [4, 5, 14, 16],
    [4, 6, 12, 19],
    [4, 8, 15, 17],
    [6, 7, 13, 16],
    [6, 9, 14, 17],
    [7, 8, 10, 19],
    [1, 17, 18, 19],
    [2, 10, 14, 18],
    [3, 11, 16, 17],
    [4, 10, 11, 13],
    [5, 12, 15, 18],
];

/// Orders with a hardcoded optimal packing.
pub const PACKING_TABLE_ORDERS: [usize; 6] = [8, 9, 10, 11, 17, 19];

fn table(n: usize, rows: &[[usize; 4]]) -> Hypergraph {
    Hypergraph::from_one_based(4, n, rows).expect("design tables are well formed")
}

fn steiner(name: &str, n: usize, rows: &[[usize; 4]]) -> Construction {
    certified_steiner(name, table(n, rows))
}

fn certified_steiner(name: &str, h: Hypergraph) -> Construction {
    let n = h.vertex_count();
    let mut c = Construction::new(name, h);
    let h = &c.hypergraph;
    let mut cert = std::mem::take(&mut c.certificate);
    cert.linear(h);
    cert.steiner(h);
    cert.regular(h, (n - 1) / 3);
    cert.edge_count(h, n * (n - 1) / 12);
    c.certificate = cert;
    c
}

/// The projective plane of order 3 as an `S(2,4,13)`.
pub fn steiner_2_4_13() -> Construction {
    steiner("S(2,4,13)", 13, &S13)
}

/// The affine plane of order 4 as an `S(2,4,16)`.
pub fn steiner_2_4_16() -> Construction {
    steiner("S(2,4,16)", 16, &affine_plane_4())
}

/// An `S(2,4,25)` developed from two base blocks over `Z_5 x Z_5`.
pub fn steiner_2_4_25() -> Construction {
    certified_steiner("S(2,4,25)", zero_based(25, &steiner_25_blocks()))
}

/// An `S(2,4,28)` developed over `Z_3^3` with one fixed point.
pub fn steiner_2_4_28() -> Construction {
    certified_steiner("S(2,4,28)", zero_based(28, &steiner_28_blocks()))
}

fn zero_based(n: usize, blocks: &[[usize; 4]]) -> Hypergraph {
    Hypergraph::new(4, n, blocks.iter().copied()).expect("developed blocks are well formed")
}

/// An `STS(9)` together with its four parallel classes.
#[derive(Clone, Debug)]
pub struct ResolvableTripleSystem {
    pub base: Hypergraph,
    pub classes: Vec<Vec<[usize; 3]>>,
}

impl ResolvableTripleSystem {
    pub fn certify(&self) -> super::Certificate {
        let mut cert = super::Certificate::new();
        cert.linear(&self.base);
        cert.steiner(&self.base);
        cert.edge_count(&self.base, 12);
        let mut all: Vec<[usize; 3]> = self.classes.concat();
        all.sort_unstable();
        let base: Vec<[usize; 3]> = self
            .base
            .edges()
            .iter()
            .map(|e| [e.to_vec()[0], e.to_vec()[1], e.to_vec()[2]])
            .collect();
        cert.check("classes partition the triples", all == base, format!("{} classes", self.classes.len()));
        for (i, class) in self.classes.iter().enumerate() {
            let mut pts: Vec<usize> = class.iter().flatten().copied().collect();
            pts.sort_unstable();
            cert.check(
                format!("class {i} is a parallel class"),
                pts == (0..9).collect::<Vec<_>>(),
                format!("{class:?}"),
            );
        }
        cert
    }
}

/// `STS(9)` as the 3x3 grid (point `3x + y`): rows, columns, and the two
/// families of wrap-around diagonals.
pub fn sts9_resolvable() -> ResolvableTripleSystem {
    let p = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
    let sorted = |mut t: [usize; 3]| {
        t.sort_unstable();
        t
    };
    let rows = (0..3).map(|x| sorted([p(x, 0), p(x, 1), p(x, 2)])).collect();
    let cols = (0..3).map(|y| sorted([p(0, y), p(1, y), p(2, y)])).collect();
    let diag = (0..3).map(|c| sorted([p(0, c), p(1, 1 + c), p(2, 2 + c)])).collect();
    let anti = (0..3).map(|c| sorted([p(0, c), p(1, c + 2), p(2, c + 1)])).collect();
    let classes: Vec<Vec<[usize; 3]>> = vec![rows, cols, diag, anti];
    let base = Hypergraph::new(3, 9, classes.concat()).expect("the grid design is well formed");
    ResolvableTripleSystem { base, classes }
}

/// Optimal 2-(m,4,1) packings for the orders where the general recipe fails.
pub fn packing_optimal_small(m: usize) -> Result<Construction, ConstructionError> {
    let h = match m {
        8 => table(8, &H1),
        9 => table(9, &H2),
        10 => table(10, &H3),
        11 => table(11, &H4),
        17 => pad(&table(16, &affine_plane_4()), 1)?,
        19 => table(19, &P19),
        _ => {
            return Err(ConstructionError::Domain {
                construction: "tabulated packing",
                requirement: format!("m in {PACKING_TABLE_ORDERS:?}"),
                value: m,
            })
        }
    };
    let mut c = Construction::new(format!("optimal packing m={m}"), h);
    c.certificate.linear(&c.hypergraph);
    c.certificate
        .edge_count(&c.hypergraph, packing_value(m as i64) as usize);
    Ok(c)
}

fn steiner_of_order(order: usize) -> Result<Hypergraph, ConstructionError> {
    match order {
        4 => Ok(Hypergraph::new(4, 4, [[0, 1, 2, 3]])?),
        13 => Ok(table(13, &S13)),
        16 => Ok(table(16, &affine_plane_4())),
        25 => Ok(zero_based(25, &steiner_25_blocks())),
        28 => Ok(zero_based(28, &steiner_28_blocks())),
        _ => Err(ConstructionError::SteinerUnavailable(order)),
    }
}

/// Disjoint copies of `S(2,4,3k-2)` on `n` vertices.
pub fn prop2_construction(n: usize, k: usize) -> Result<Construction, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Domain {
            construction: "Steiner-copy construction",
            requirement: "k >= 2".into(),
            value: k,
        });
    }
    let order = 3 * k - 2;
    if n == 0 || !n.is_multiple_of(order) || !matches!(order % 12, 1 | 4) {
        return Err(ConstructionError::Domain {
            construction: "Steiner-copy construction",
            requirement: format!("a positive multiple of 3k-2 = {order} with 3k-2 = 1 or 4 mod 12"),
            value: n,
        });
    }
    let block = steiner_of_order(order)?;
    let h = repeat(&block, n / order)?;
    let mut c = Construction::new(format!("{} copies of S(2,4,{order})", n / order), h);
    let h = &c.hypergraph;
    let mut cert = std::mem::take(&mut c.certificate);
    cert.linear(h);
    cert.edge_count(h, n * (k - 1) / 4);
    cert.check(
        "components",
        h.components().parts.len() == n / order,
        format!("{} components", h.components().parts.len()),
    );
    let star = Forbidden::Tree(TreePattern::star(4, k).expect("k is at least 2"));
    cert.free_of(h, &star);
    c.certificate = cert;
    Ok(c)
}

/// Disjoint `S(2,4,13)` copies, then disjoint edges on what is left; P3-free.
pub fn p3_lower_construction(n: usize) -> Result<Construction, ConstructionError> {
    let s13 = table(13, &S13);
    let copies = repeat(&s13, n / 13)?;
    let rest = n % 13;
    let matching = matching_on(rest)?;
    let h = super::disjoint_union(&[&copies, &matching])?;
    let mut c = Construction::new(format!("{} copies of S(2,4,13) plus {} disjoint edges", n / 13, rest / 4), h);
    let p3 = named_pattern("P3").expect("P3 is a valid name");
    let h = &c.hypergraph;
    let mut cert = std::mem::take(&mut c.certificate);
    cert.linear(h);
    cert.free_of(h, &p3);
    c.certificate = cert;
    Ok(c)
}

/// Disjoint `S(2,4,16)` copies, then an `S(2,4,13)` or disjoint edges on the
/// rest; free of both `S3+` and `P4`.
pub fn th11_lower_construction(n: usize) -> Result<Construction, ConstructionError> {
    let s16 = table(16, &affine_plane_4());
    let copies = repeat(&s16, n / 16)?;
    let rest = n % 16;
    let tail = if rest >= 13 {
        pad(&table(13, &S13), rest - 13)?
    } else {
        matching_on(rest)?
    };
    let h = super::disjoint_union(&[&copies, &tail])?;
    let mut c = Construction::new(format!("{} copies of S(2,4,16) plus a tail on {rest} vertices", n / 16), h);
    let h = &c.hypergraph;
    let mut cert = std::mem::take(&mut c.certificate);
    cert.linear(h);
    for name in ["S3plus", "P4"] {
        cert.free_of(h, &named_pattern(name).expect("valid pattern name"));
    }
    c.certificate = cert;
    Ok(c)
}

/// `floor(n/4)` disjoint edges on `n` vertices.
pub(crate) fn matching_on(n: usize) -> Result<Hypergraph, ConstructionError> {
    Ok(Hypergraph::new(4, n, (0..n / 4).map(|i| [4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]))?)
}
