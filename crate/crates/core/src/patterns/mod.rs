//! Forbidden configurations (linear trees and matchings) and containment
//! testers that return explicit embeddings.

mod acyclic;
mod embed;
mod host;
mod matching;

pub use acyclic::{is_acyclic, Acyclicity};
pub use embed::{contains_tree, contains_tree_through};
pub use host::{DynamicHost, HostView};
pub use matching::{contains_matching, matching_through};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hypercore::Hypergraph;

/// Largest number of edges a pattern may have.
pub const MAX_PATTERN_EDGES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("unknown pattern `{0}` (expected P<k>, S<k>, S3plus, E4plus, M<k> or T:<attachments>)")]
    UnknownName(String),
    #[error("pattern size must be at least 1, got {0}")]
    ZeroSize(usize),
    #[error("patterns are capped at {MAX_PATTERN_EDGES} edges, got {0}")]
    TooLarge(usize),
    #[error("edge {edge} cannot attach to edge {target} slot {slot}")]
    BadAttachment { edge: usize, target: usize, slot: usize },
    #[error("unsupported uniformity {0}")]
    Uniformity(usize),
}

/// A linear tree described by how each edge hangs off an earlier one.
///
/// `attachments[i - 1] = (j, s)` means edge `i` meets the union of edges
/// `0..i` exactly in the vertex at slot `s` of edge `j`. Edge 0 is the root.
/// In every non-root edge, slot 0 is the shared vertex and slots `1..r` are new.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreePattern {
    r: usize,
    attachments: Vec<(usize, usize)>,
}

impl TreePattern {
    pub fn new(r: usize, attachments: Vec<(usize, usize)>) -> Result<Self, PatternError> {
        if r != 3 && r != 4 {
            return Err(PatternError::Uniformity(r));
        }
        if attachments.len() + 1 > MAX_PATTERN_EDGES {
            return Err(PatternError::TooLarge(attachments.len() + 1));
        }
        for (i, &(target, slot)) in attachments.iter().enumerate() {
            if target > i || slot >= r {
                return Err(PatternError::BadAttachment {
                    edge: i + 1,
                    target,
                    slot,
                });
            }
        }
        Ok(TreePattern { r, attachments })
    }

    fn sized(k: usize) -> Result<(), PatternError> {
        match k {
            0 => Err(PatternError::ZeroSize(0)),
            k if k > MAX_PATTERN_EDGES => Err(PatternError::TooLarge(k)),
            _ => Ok(()),
        }
    }

    /// Linear path: each edge hangs off the last slot of its predecessor,
    /// which is never the vertex the predecessor shares backwards.
    pub fn path(r: usize, k: usize) -> Result<Self, PatternError> {
        Self::sized(k)?;
        Self::new(r, (1..k).map(|i| (i - 1, r - 1)).collect())
    }

    /// Linear star: every edge through slot 0 of the root.
    pub fn star(r: usize, k: usize) -> Result<Self, PatternError> {
        Self::sized(k)?;
        Self::new(r, vec![(0, 0); k - 1])
    }

    /// Star with three edges plus one edge hung at a degree-one vertex of a leaf edge.
    pub fn s3_plus(r: usize) -> Result<Self, PatternError> {
        Self::new(r, vec![(0, 0), (0, 0), (1, 1)])
    }

    /// A center edge with pendant edges at three distinct center vertices.
    pub fn e4_plus(r: usize) -> Result<Self, PatternError> {
        Self::new(r, vec![(0, 0), (0, 1), (0, 2)])
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.attachments.len() + 1
    }

    pub fn vertex_count(&self) -> usize {
        (self.r - 1) * self.edge_count() + 1
    }

    pub fn attachments(&self) -> &[(usize, usize)] {
        &self.attachments
    }

    /// Edge vertex lists in slot order, over vertices `0..vertex_count()`.
    pub fn literal_edges(&self) -> Vec<Vec<usize>> {
        let mut edges: Vec<Vec<usize>> = vec![(0..self.r).collect()];
        let mut next = self.r;
        for &(target, slot) in &self.attachments {
            let mut e = vec![edges[target][slot]];
            e.extend(next..next + self.r - 1);
            next += self.r - 1;
            edges.push(e);
        }
        edges
    }

    pub fn realize(&self) -> Hypergraph {
        Hypergraph::new(self.r, self.vertex_count(), self.literal_edges())
            .expect("tree patterns realize as valid hypergraphs")
    }
}

/// Names accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternName {
    Path(usize),
    Star(usize),
    S3Plus,
    E4Plus,
    Matching(usize),
    Tree(Vec<(usize, usize)>),
}

impl FromStr for PatternName {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || PatternError::UnknownName(s.to_string());
        let number = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        match s {
            "S3plus" | "S3+" => return Ok(PatternName::S3Plus),
            "E4plus" | "E4+" => return Ok(PatternName::E4Plus),
            _ => {}
        }
        if let Some(list) = s.strip_prefix("T:") {
            let mut out = Vec::new();
            for item in list.split(',').filter(|t| !t.is_empty()) {
                let (edge, slot) = item.split_once('.').ok_or_else(unknown)?;
                out.push((number(edge)?, number(slot)?));
            }
            return Ok(PatternName::Tree(out));
        }
        if let Some(k) = s.strip_prefix('P') {
            return Ok(PatternName::Path(number(k)?));
        }
        if let Some(k) = s.strip_prefix('S') {
            return Ok(PatternName::Star(number(k)?));
        }
        if let Some(k) = s.strip_prefix('M') {
            return Ok(PatternName::Matching(number(k)?));
        }
        Err(unknown())
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::Path(k) => write!(f, "P{k}"),
            PatternName::Star(k) => write!(f, "S{k}"),
            PatternName::S3Plus => write!(f, "S3plus"),
            PatternName::E4Plus => write!(f, "E4plus"),
            PatternName::Matching(k) => write!(f, "M{k}"),
            PatternName::Tree(att) => {
                let items: Vec<String> = att.iter().map(|(e, s)| format!("{e}.{s}")).collect();
                write!(f, "T:{}", items.join(","))
            }
        }
    }
}

/// A forbidden configuration: a linear tree or a `k`-matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Forbidden {
    Tree(TreePattern),
    Matching { r: usize, k: usize },
}

impl Forbidden {
    pub fn from_name(name: &PatternName, r: usize) -> Result<Self, PatternError> {
        Ok(match name {
            PatternName::Path(k) => Forbidden::Tree(TreePattern::path(r, *k)?),
            PatternName::Star(k) => Forbidden::Tree(TreePattern::star(r, *k)?),
            PatternName::S3Plus => Forbidden::Tree(TreePattern::s3_plus(r)?),
            PatternName::E4Plus => Forbidden::Tree(TreePattern::e4_plus(r)?),
            PatternName::Matching(k) => {
                if *k == 0 {
                    return Err(PatternError::ZeroSize(0));
                }
                if *k > MAX_PATTERN_EDGES {
                    return Err(PatternError::TooLarge(*k));
                }
                Forbidden::Matching { r, k: *k }
            }
            PatternName::Tree(att) => Forbidden::Tree(TreePattern::new(r, att.clone())?),
        })
    }

    pub fn uniformity(&self) -> usize {
        match self {
            Forbidden::Tree(t) => t.uniformity(),
            Forbidden::Matching { r, .. } => *r,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Forbidden::Tree(t) => t.edge_count(),
            Forbidden::Matching { k, .. } => *k,
        }
    }

    /// The configuration as a concrete hypergraph.
    pub fn realize(&self) -> Hypergraph {
        match self {
            Forbidden::Tree(t) => t.realize(),
            Forbidden::Matching { r, k } => {
                Hypergraph::new(*r, r * k, (0..*k).map(|i| (r * i..r * i + r).collect::<Vec<_>>()))
                    .expect("matchings realize as valid hypergraphs")
            }
        }
    }

    pub fn find_in<H: HostView>(&self, host: &H) -> Option<Embedding> {
        match self {
            Forbidden::Tree(t) => contains_tree(host, t),
            Forbidden::Matching { k, .. } => contains_matching(host, *k),
        }
    }

    /// A copy that uses host edge `e`.
    pub fn find_through<H: HostView>(&self, host: &H, e: usize) -> Option<Embedding> {
        match self {
            Forbidden::Tree(t) => contains_tree_through(host, t, e),
            Forbidden::Matching { k, .. } => matching_through(host, *k, e),
        }
    }

    /// The command-line name, recognizing the named trees.
    pub fn name(&self) -> PatternName {
        match self {
            Forbidden::Matching { k, .. } => PatternName::Matching(*k),
            Forbidden::Tree(t) => {
                let r = t.uniformity();
                let k = t.edge_count();
                if TreePattern::star(r, k).as_ref() == Ok(t) {
                    PatternName::Star(k)
                } else if TreePattern::path(r, k).as_ref() == Ok(t) {
                    PatternName::Path(k)
                } else if TreePattern::s3_plus(r).as_ref() == Ok(t) {
                    PatternName::S3Plus
                } else if TreePattern::e4_plus(r).as_ref() == Ok(t) {
                    PatternName::E4Plus
                } else {
                    PatternName::Tree(t.attachments().to_vec())
                }
            }
        }
    }
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name().fmt(f)
    }
}

/// Parses a pattern name for 4-uniform hosts.
pub fn named_pattern(name: &str) -> Result<Forbidden, PatternError> {
    Forbidden::from_name(&name.parse()?, 4)
}

/// True iff `host` contains no member of `family`.
pub fn is_free<H: HostView>(host: &H, family: &[Forbidden]) -> bool {
    family.iter().all(|f| f.find_in(host).is_none())
}

/// Witness map from a pattern into a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// pattern edge (indexed as in the pattern's `realize()`) -> host edge index
    pub edge_map: Vec<usize>,
    /// pattern vertex -> host vertex
    pub vertex_map: Vec<usize>,
}

impl Embedding {
    /// Independent re-check: injective on edges and vertices, and every
    /// pattern edge maps onto exactly its image edge's vertex set.
    pub fn validate<H: HostView>(&self, host: &H, pattern: &Hypergraph) -> Result<(), String> {
        if self.edge_map.len() != pattern.edge_count() {
            return Err("edge map has the wrong length".into());
        }
        if self.vertex_map.len() != pattern.vertex_count() {
            return Err("vertex map has the wrong length".into());
        }
        let mut seen = std::collections::HashSet::new();
        if !self.edge_map.iter().all(|e| seen.insert(*e)) {
            return Err("edge map is not injective".into());
        }
        let mut seen = std::collections::HashSet::new();
        if !self.vertex_map.iter().all(|v| seen.insert(*v)) {
            return Err("vertex map is not injective".into());
        }
        for (p, e) in pattern.edges().iter().enumerate() {
            let h = self.edge_map[p];
            if h >= host.host_edge_count() {
                return Err(format!("host edge {h} does not exist"));
            }
            let mut image: Vec<usize> = e.iter().map(|v| self.vertex_map[v]).collect();
            image.sort_unstable();
            let target: Vec<usize> = host.host_edge(h).iter().map(|&v| v as usize).collect();
            let mut target = target;
            target.sort_unstable();
            if image != target {
                return Err(format!("pattern edge {p} maps to {image:?}, host edge is {target:?}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_shapes() {
        let p2 = TreePattern::path(4, 2).unwrap();
        assert_eq!(p2.vertex_count(), 7);
        let g = p2.realize();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge_set(0).intersection_len(g.edge_set(1)), 1);

        let e4 = TreePattern::e4_plus(4).unwrap().realize();
        assert_eq!((e4.edge_count(), e4.vertex_count()), (4, 13));
        let center = e4.degree_sequence();
        assert_eq!(&center[..3], &[2, 2, 2]);

        let s5 = TreePattern::star(4, 5).unwrap().realize();
        assert_eq!(s5.vertex_count(), 16);
        assert_eq!(s5.degree(0).unwrap(), 5);

        let p4 = TreePattern::path(4, 4).unwrap().realize();
        assert!(p4.is_linear());
        assert_eq!(p4.degree_sequence()[..4], [2, 2, 2, 1]);
    }

    #[test]
    fn pattern_errors() {
        assert_eq!(TreePattern::path(4, 0), Err(PatternError::ZeroSize(0)));
        assert_eq!(TreePattern::star(4, 17), Err(PatternError::TooLarge(17)));
        assert!(matches!(
            TreePattern::new(4, vec![(1, 0)]),
            Err(PatternError::BadAttachment { .. })
        ));
        assert!(matches!(
            TreePattern::new(4, vec![(0, 4)]),
            Err(PatternError::BadAttachment { .. })
        ));
        assert!(matches!(named_pattern("Q3"), Err(PatternError::UnknownName(_))));
        assert!(matches!(named_pattern("M0"), Err(PatternError::ZeroSize(0))));
    }

    #[test]
    fn names_round_trip() {
        for s in ["P3", "S4", "S3plus", "E4plus", "M2", "T:0.0,1.2,1.3"] {
            let f = named_pattern(s).unwrap();
            assert_eq!(f.to_string(), s);
        }
        // an explicit attachment list that spells a path is named as one
        assert_eq!(named_pattern("T:0.3,1.3").unwrap().to_string(), "P3");
    }

    #[test]
    fn single_edge_patterns_coincide() {
        let a = named_pattern("P1").unwrap().realize();
        let b = named_pattern("S1").unwrap().realize();
        let c = named_pattern("M1").unwrap().realize();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}
