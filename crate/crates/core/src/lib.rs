//! Exact invariants, constructions and isomorph-free search for extremal triangle-free graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`], [`graph6`], [`canon`]: bit-row graphs, the graph6 format, canonical labelling.
//! - [`invariants`]: χ, d₂, ν, τ, odd girth, C5-homomorphisms, each with a certificate.
//! - [`constructions`]: Turán graphs, `H0`, the Grötzsch graph and its blow-up family, `H_n`.
//! - [`bounds`]: closed-form extremal bounds and the C5 blow-up inequality.
//! - [`lemmas`]: greedy bipartization, the ν = 3 classifier and the transversal partition.
//! - [`search`]: canonical-augmentation enumeration and exact max-edge search.
//! - [`report`]: JSON report types shared with the command-line front end.

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod lemmas;
pub mod report;
pub mod search;

pub use bitset::VertexSet;
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{blow_up, BlowupSpec, Graph};
pub use graph6::{from_graph6, to_graph6};
