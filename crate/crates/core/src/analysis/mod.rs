//! Closed-form parameters, the dense m-set estimator and co-ex tables.
//!
//! Binomial coefficients are exact integers; only the final comparisons in
//! [`compute_m`] run in floating point, in log space with a slack of
//! [`LOG_SLACK`].

mod params;
mod sample;
mod table;

pub use params::{
    compute_m, compute_m_certified, compute_rho, ln_binomial, nonprincipality_params,
    ratio_condition, size_condition, tail_condition, MCertificate, NonprincipalityParams,
    LOG_SLACK,
};
pub use sample::{sample_dense_msets, SampleEstimate, SampleMode, EXHAUSTIVE_LIMIT, GENERATOR};
pub use table::{density_table, format_sig10, table_csv, DensityRow};
