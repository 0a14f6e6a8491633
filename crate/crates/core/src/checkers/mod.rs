//! Decision procedures: subgraph embedding, weak colourability, extension
//! containment, and the inductive embedders for `F^k_r`.
//!
//! Positive answers always carry a certificate that has been re-checked by
//! the independent verifiers in [`crate::hypercore`].

mod colour;
mod embed;
mod extension;
mod greedy;
mod matching;

pub use colour::{colour, ColourBackend, ColourOutcome, BRUTE_VERTEX_LIMIT};
pub use embed::{
    find_embedding, find_embedding_indexed, find_embedding_with, for_each_embedding, Completion,
    HostIndex,
};
pub use extension::{contains_extension_member, verify_containment, ContainmentCertificate, Link};
pub use greedy::{
    embed_fr_recursive, greedy_embed_f2, FrFailure, FrOutcome, GreedyFailure, GreedyOutcome,
};
pub use matching::{is_perfect_left_matching, maximum_matching};

/// Caps on a search. The default is unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: Option<u64>,
}

impl SearchLimits {
    pub fn nodes(n: u64) -> Self {
        SearchLimits {
            node_budget: Some(n),
        }
    }
}

/// Result of a search that may be cut short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    None,
    Budget,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}
