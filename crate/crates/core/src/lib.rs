//! Linear 3- and 4-uniform hypergraphs: extremal constructions, forbidden
//! tree and matching detection, Turan-type bounds and exact small-case search.

pub mod hypercore;
pub mod patterns;
pub mod bounds;
pub mod search;
pub mod constructions;
pub mod cli;
