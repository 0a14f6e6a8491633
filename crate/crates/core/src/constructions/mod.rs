//! Generators for the explicit constructions.

mod extension;
mod fr;
mod hfamily;
mod partite;

pub use extension::{
    extension_family_iter, extension_member, ExtensionFamily, ExtensionSpec, FamilyIter,
    EXTENSION_R_LIMIT, FAMILY_SIZE_LIMIT,
};
pub use fr::{gen_fr, gen_fr_with_limit, FrParams, FR_VERTEX_LIMIT};
pub use hfamily::{enumerate_min_codegree_family, MinCodegreeFamily, HFAMILY_SLOT_LIMIT};
pub use partite::{gen_gabn, gen_ktt, gen_rpartite, ktt_edge_count, near_equal_parts, GabnParams};
