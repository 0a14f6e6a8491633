//! Core data model: hypergraphs, codegrees, certificates, isomorphism and
//! the `.khg` format.

mod certificate;
mod codegree;
mod hypergraph;
mod iso;
mod khg;

pub use certificate::{
    verify_colouring, verify_embedding, Colouring, ColouringDefect, Embedding, EmbeddingDefect,
};
pub use codegree::{min_codegree, CodegreeProfile, PROFILE_LIMIT};
pub use hypergraph::Hypergraph;
pub use iso::{is_isomorphic, is_isomorphic_with_limit, ISO_VERTEX_LIMIT};
pub use khg::{parse_khg, write_khg};

/// Free-function form of [`CodegreeProfile::compute`].
pub fn codegree_profile(h: &Hypergraph) -> crate::Result<CodegreeProfile> {
    CodegreeProfile::compute(h)
}

/// Free-function form of [`Hypergraph::neighbourhood`].
pub fn neighbourhood(h: &Hypergraph, s: &[usize]) -> crate::Result<Vec<usize>> {
    h.neighbourhood(s)
}

/// Free-function form of [`Hypergraph::induced`].
pub fn induced(h: &Hypergraph, w: &[usize]) -> crate::Result<Hypergraph> {
    h.induced(w)
}
