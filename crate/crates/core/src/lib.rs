//! Toolkit for k-uniform hypergraphs under minimum-codegree conditions.
//!
//! The crate is organised around five areas:
//!
//! * [`hypercore`]: the [`Hypergraph`] type, codegree profiles, induced
//!   subgraphs, embeddings, isomorphism and the `.khg` text format.
//! * [`constructions`]: generators for the extremal constructions and the
//!   extension families built on top of a base k-graph.
//! * [`checkers`]: exact decision procedures (weak colourability, subgraph
//!   containment, extension-member containment) and the greedy embedders.
//! * [`satgate`]: CNF encoding of the co-ex decision problem, an internal
//!   CDCL solver, an external-solver process wrapper and a brute-force oracle.
//! * [`analysis`]: closed-form parameter calculators, the dense m-set
//!   estimator and co-ex density tables.
//!
//! [`claims`] bundles the end-to-end verification suite used by `khg verify`.

pub mod analysis;
pub mod bitset;
pub mod checkers;
pub mod claims;
pub mod combinat;
pub mod constructions;
mod error;
pub mod hypercore;
pub mod satgate;

pub use error::{Error, Result};
pub use hypercore::{CodegreeProfile, Colouring, Embedding, Hypergraph};
