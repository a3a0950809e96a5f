//! Explicit designs and lower-bound constructions, each returned with a
//! certificate whose claims are re-checked from scratch.

mod designs;
mod e4plus;
mod glower;
mod leave;

pub use designs::{
    p3_lower_construction, packing_optimal_small, prop2_construction, steiner_2_4_13,
    steiner_2_4_16, steiner_2_4_25, steiner_2_4_28, sts9_resolvable, th11_lower_construction, ResolvableTripleSystem,
    PACKING_TABLE_ORDERS,
};
pub use e4plus::{e4plus_lower_construction, e4plus_lower_construction_with, E4PlusConstruction};
pub use glower::{g_lower_construction, parallel_classes, GConstruction, ParallelClasses};
pub use leave::{classify_leave, lemma41_leave, LeaveClass};

pub use crate::bounds::epsilon;

use std::fmt;

use thiserror::Error;

use crate::hypercore::{Hypergraph, HypergraphError, MAX_VERTICES};
use crate::patterns::Forbidden;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{construction} needs {requirement}, got {value}")]
    Domain {
        construction: &'static str,
        requirement: String,
        value: usize,
    },
    #[error("no S(2,4,{0}) is available (supported orders: 4, 13, 16, 25, 28)")]
    SteinerUnavailable(usize),
    #[error("{0}")]
    Infeasible(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// One checked property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub property: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub claims: Vec<Claim>,
}

impl Certificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, property: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            property: property.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    /// Stable `claim.<i>=<property>:<pass|fail>:<detail>` lines.
    pub fn kv_lines(&self) -> Vec<String> {
        self.claims
            .iter()
            .enumerate()
            .map(|(i, c)| {
                format!(
                    "claim.{i}={}:{}:{}",
                    c.property,
                    if c.passed { "pass" } else { "fail" },
                    c.detail
                )
            })
            .collect()
    }

    // Common claims.

    pub(crate) fn linear(&mut self, h: &Hypergraph) {
        match h.pair_coverage() {
            Ok(_) => self.check("linear", true, "no pair lies in two edges"),
            Err(e) => self.check("linear", false, e.to_string()),
        }
    }

    pub(crate) fn edge_count(&mut self, h: &Hypergraph, expected: usize) {
        self.check(
            format!("edges={expected}"),
            h.edge_count() == expected,
            format!("{} edges", h.edge_count()),
        );
    }

    pub(crate) fn steiner(&mut self, h: &Hypergraph) {
        let complete = h.pair_coverage().map(|pc| pc.is_complete()).unwrap_or(false);
        let n = h.vertex_count();
        self.check(
            "every pair covered once",
            complete,
            format!("{} pairs", n * n.saturating_sub(1) / 2),
        );
    }

    pub(crate) fn regular(&mut self, h: &Hypergraph, d: usize) {
        self.check(
            format!("{d}-regular"),
            h.regular_degree() == Some(d),
            format!("degree sequence {:?}", dedup_degrees(h)),
        );
    }

    pub(crate) fn free_of(&mut self, h: &Hypergraph, f: &Forbidden) {
        let witness = f.find_in(h);
        let detail = match &witness {
            None => "no copy found by exhaustive search".to_string(),
            Some(emb) => format!("copy on host edges {:?}", emb.edge_map),
        };
        self.check(format!("{f}-free"), witness.is_none(), detail);
    }
}

fn dedup_degrees(h: &Hypergraph) -> Vec<usize> {
    let mut d = h.degree_sequence();
    d.dedup();
    d
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "pass" } else { "FAIL" },
                c.property,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// A generated hypergraph with its certificate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub certificate: Certificate,
    /// Things worth reporting that are not failures (e.g. a shortfall
    /// against a target the construction does not promise).
    pub findings: Vec<String>,
}

impl Construction {
    pub fn new(name: impl Into<String>, hypergraph: Hypergraph) -> Self {
        Construction {
            name: name.into(),
            hypergraph,
            certificate: Certificate::new(),
            findings: Vec::new(),
        }
    }
}

/// Places the given hypergraphs side by side on disjoint vertex ranges.
pub fn disjoint_union(parts: &[&Hypergraph]) -> Result<Hypergraph, ConstructionError> {
    let r = parts.first().map_or(4, |h| h.uniformity());
    let n: usize = parts.iter().map(|h| h.vertex_count()).sum();
    if n > MAX_VERTICES {
        return Err(HypergraphError::Capacity(n).into());
    }
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut offset = 0;
    for h in parts {
        if h.uniformity() != r {
            return Err(HypergraphError::UniformityMismatch(r, h.uniformity()).into());
        }
        edges.extend(h.edges().iter().map(|e| e.iter().map(|v| v + offset).collect()));
        offset += h.vertex_count();
    }
    Ok(Hypergraph::new(r, n, edges)?)
}

/// `copies` disjoint copies of `h`.
pub fn repeat(h: &Hypergraph, copies: usize) -> Result<Hypergraph, ConstructionError> {
    let parts: Vec<&Hypergraph> = std::iter::repeat_n(h, copies).collect();
    if parts.is_empty() {
        return Ok(Hypergraph::empty(h.uniformity(), 0)?);
    }
    disjoint_union(&parts)
}

/// Adds `extra` isolated vertices.
pub fn pad(h: &Hypergraph, extra: usize) -> Result<Hypergraph, ConstructionError> {
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    Ok(Hypergraph::new(h.uniformity(), h.vertex_count() + extra, edges)?)
}

/// Certifies that `h` avoids every member of `family`.
pub fn certify_free(h: &Hypergraph, family: &[Forbidden]) -> Certificate {
    let mut cert = Certificate::new();
    cert.linear(h);
    for f in family {
        cert.free_of(h, f);
    }
    cert
}
