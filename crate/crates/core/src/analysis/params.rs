use crate::combinat::binomial;
use crate::constructions::{gen_fr, gen_ktt};
use crate::{Error, Hypergraph, Result};

/// Slack used in the floating comparisons of [`compute_m`].
pub const LOG_SLACK: f64 = 1e-12;

const M_CAP: u64 = 1 << 52;

/// `ln C(m, j)`, or `-inf` when `m < j`.
pub fn ln_binomial(m: u64, j: u64) -> f64 {
    if m < j {
        return f64::NEG_INFINITY;
    }
    (0..j)
        .map(|i| ((m - i) as f64).ln() - ((i + 1) as f64).ln())
        .sum()
}

/// `m ≥ 2(k−1)/δ`, with the slack applied.
pub fn size_condition(m: u64, delta: f64, k: usize) -> bool {
    m as f64 * delta >= 2.0 * (k as f64 - 1.0) - LOG_SLACK
}

/// `ln C(m, k−1) − δ²(m−k+1)/12 ≤ ln(1/2)`, with the slack applied.
pub fn tail_condition(m: u64, delta: f64, k: usize) -> bool {
    let j = k as u64 - 1;
    if m < j {
        return true;
    }
    let lhs = ln_binomial(m, j) - delta * delta * (m - j) as f64 / 12.0;
    lhs <= 0.5f64.ln() + LOG_SLACK
}

/// `(m+1)/(m+2−k) ≤ e^{δ²/12}`: from here on the tail expression is
/// non-increasing in m.
pub fn ratio_condition(m: u64, delta: f64, k: usize) -> bool {
    let j = k as u64 - 1;
    if m < j {
        return false;
    }
    ((m + 1) as f64 / (m + 1 - j) as f64).ln() <= delta * delta / 12.0 + LOG_SLACK
}

/// The threshold together with the points that certify it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MCertificate {
    /// Smallest M such that both conditions hold for every m ≥ M.
    pub m: u64,
    /// ⌈2(k−1)/δ⌉.
    pub size_bound: u64,
    /// First m from which the ratio condition holds.
    pub ratio_start: u64,
}

/// Smallest M with `m ≥ 2(k−1)/δ` and `C(m,k−1) e^{−δ²(m−k+1)/12} ≤ 1/2`
/// for every m ≥ M.
pub fn compute_m(delta: f64, k: usize) -> Result<u64> {
    compute_m_certified(delta, k).map(|c| c.m)
}

pub fn compute_m_certified(delta: f64, k: usize) -> Result<MCertificate> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in (0, 1], got {delta}"
        )));
    }
    if k < 2 {
        return Err(Error::Uniformity(k));
    }
    let first = |pred: &dyn Fn(u64) -> bool, from: u64| -> Result<u64> {
        // pred is monotone (false then true) on [from, ∞).
        if pred(from) {
            return Ok(from);
        }
        let mut lo = from;
        let mut hi = from.max(1) * 2;
        while !pred(hi) {
            lo = hi;
            hi *= 2;
            if hi > M_CAP {
                return Err(Error::SizeGuard {
                    what: "M search",
                    size: hi as u128,
                    limit: M_CAP as u128,
                });
            }
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if pred(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    };
    let size_bound = first(&|m| size_condition(m, delta, k), 0)?;
    let ratio_start = first(&|m| ratio_condition(m, delta, k), k as u64 - 1)?;
    let start = size_bound.max(ratio_start);
    let mut m = first(&|m| tail_condition(m, delta, k), start)?;
    while m > size_bound && tail_condition(m - 1, delta, k) {
        m -= 1;
    }
    Ok(MCertificate {
        m,
        size_bound,
        ratio_start,
    })
}

fn check_rho_args(k: usize, ell: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    if ell < k - 1 {
        return Err(Error::InvalidParameter(format!(
            "ell must be at least k-1 = {}, got {ell}",
            k - 1
        )));
    }
    Ok(())
}

/// `½(1 − 1/C + 1/(C·2^{1/ℓ}))` with `C = C(ℓ, k−1)`.
pub fn compute_rho(k: usize, ell: usize) -> Result<f64> {
    check_rho_args(k, ell)?;
    let c = binomial(ell, k - 1) as f64;
    let drop = 1.0 - (-1.0 / ell as f64).exp2();
    Ok(0.5 - drop / (2.0 * c))
}

/// The parameters of the two-member non-principal family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NonprincipalityParams {
    pub k: usize,
    pub ell: usize,
    pub rho: f64,
    /// `(1/6)(1/2 − ρ)`.
    pub epsilon: f64,
}

impl NonprincipalityParams {
    /// The bipartite member `K^k(ℓ, ℓ)`.
    pub fn bipartite_member(&self) -> Result<Hypergraph> {
        gen_ktt(self.ell, self.k)
    }

    /// The recursive member `F^k_2`.
    pub fn recursive_member(&self) -> Result<Hypergraph> {
        gen_fr(self.k, 2)
    }
}

pub fn nonprincipality_params(k: usize, ell: usize) -> Result<NonprincipalityParams> {
    let rho = compute_rho(k, ell)?;
    Ok(NonprincipalityParams {
        k,
        ell,
        rho,
        epsilon: (0.5 - rho) / 6.0,
    })
}
