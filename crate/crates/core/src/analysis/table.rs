use std::fmt::Write as _;

use crate::satgate::{coex_exact, Backend};
use crate::{Error, Hypergraph, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct DensityRow {
    pub n: usize,
    pub coex: usize,
    pub ratio: f64,
}

/// co-ex(n, F) and co-ex(n, F)/n for each n in `n_from..=n_to`.
pub fn density_table(
    family: &[Hypergraph],
    k: usize,
    n_from: usize,
    n_to: usize,
    backend: &Backend,
) -> Result<Vec<DensityRow>> {
    if n_from < k || n_from > n_to {
        return Err(Error::InvalidParameter(format!(
            "need k ≤ n_from ≤ n_to, got {n_from}..{n_to} with k = {k}"
        )));
    }
    (n_from..=n_to)
        .map(|n| {
            let r = coex_exact(n, k, family, backend)?;
            Ok(DensityRow {
                n,
                coex: r.value,
                ratio: r.value as f64 / n as f64,
            })
        })
        .collect()
}

/// CSV with header `n,coex,ratio`.
pub fn table_csv(rows: &[DensityRow]) -> String {
    let mut out = String::from("n,coex,ratio\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.n, r.coex, format_sig10(r.ratio));
    }
    out
}

/// Ten significant digits in positional notation; zero prints as `0`.
pub fn format_sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.9e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific notation has an exponent");
    let decimals = (9 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}
