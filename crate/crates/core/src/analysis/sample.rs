//! Fraction of m-subsets S with δ_{k−1}(G[S]) > α·m.
//!
//! When n ≥ m ≥ M(δ) and δ_{k−1}(G) ≥ (α + δ)n, at least half of all m-sets
//! qualify. That regime is far out of reach here, so the estimator is
//! checked against its own exhaustive mode instead.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinat::{binomial, colex_rank, lex_subsets};
use crate::hypercore::min_codegree;
use crate::{Error, Hypergraph, Result};

/// Largest C(n, m) for which `Auto` enumerates every subset.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Generator identity recorded next to sampled estimates.
pub const GENERATOR: &str = "ChaCha8Rng::seed_from_u64";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Exhaustive when C(n, m) ≤ [`EXHAUSTIVE_LIMIT`], sampled otherwise.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleEstimate {
    pub hits: u64,
    pub total: u64,
    pub fraction: f64,
    /// `sqrt(p(1−p)/trials)` when sampled, 0 when exhaustive.
    pub stderr: f64,
    pub exhaustive: bool,
    pub seed: u64,
}

struct Dense<'a> {
    g: &'a Hypergraph,
    /// Neighbourhood masks by colex rank of the (k−1)-set, when n ≤ 64.
    masks: Option<Vec<u64>>,
    threshold: f64,
}

impl Dense<'_> {
    fn qualifies(&self, s: &[usize]) -> Result<bool> {
        let k = self.g.k();
        let Some(masks) = &self.masks else {
            let delta = min_codegree(&self.g.induced(s)?)?;
            return Ok(delta as f64 > self.threshold);
        };
        let smask = s.iter().fold(0u64, |m, &v| m | 1 << v);
        for pos in lex_subsets(s.len(), k - 1) {
            let t: Vec<usize> = pos.iter().map(|&p| s[p]).collect();
            let d = (masks[colex_rank(&t)] & smask).count_ones();
            if d as f64 <= self.threshold {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Estimates P[δ_{k−1}(G[S]) > α·m] over uniform m-subsets S.
pub fn sample_dense_msets(
    g: &Hypergraph,
    m: usize,
    alpha: f64,
    trials: u64,
    seed: u64,
    mode: SampleMode,
) -> Result<SampleEstimate> {
    let (n, k) = (g.n(), g.k());
    if m > n || m < k - 1 {
        return Err(Error::InvalidParameter(format!(
            "need n ≥ m ≥ k−1, got n = {n}, m = {m}, k = {k}"
        )));
    }
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter("alpha must be finite".into()));
    }
    let subsets = binomial(n, m);
    let exhaustive = match mode {
        SampleMode::Auto => subsets <= EXHAUSTIVE_LIMIT,
        SampleMode::Exhaustive => {
            if subsets > EXHAUSTIVE_LIMIT {
                return Err(Error::SizeGuard {
                    what: "m-subsets",
                    size: subsets,
                    limit: EXHAUSTIVE_LIMIT,
                });
            }
            true
        }
        SampleMode::Sampled => false,
    };
    if !exhaustive && trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let masks = (n <= 64).then(|| {
        let mut masks = vec![0u64; binomial(n, k - 1) as usize];
        for e in g.edges() {
            for (i, &v) in e.iter().enumerate() {
                let mut rest = e.clone();
                rest.remove(i);
                masks[colex_rank(&rest)] |= 1 << v;
            }
        }
        masks
    });
    let dense = Dense {
        g,
        masks,
        threshold: alpha * m as f64,
    };
    let (mut hits, mut total) = (0u64, 0u64);
    if exhaustive {
        for s in lex_subsets(n, m) {
            total += 1;
            hits += u64::from(dense.qualifies(&s)?);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let mut s = sample(&mut rng, n, m).into_vec();
            s.sort_unstable();
            total += 1;
            hits += u64::from(dense.qualifies(&s)?);
        }
    }
    let fraction = hits as f64 / total as f64;
    let stderr = if exhaustive {
        0.0
    } else {
        (fraction * (1.0 - fraction) / total as f64).sqrt()
    };
    Ok(SampleEstimate {
        hits,
        total,
        fraction,
        stderr,
        exhaustive,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_gabn, GabnParams};

    #[test]
    fn trivial_extremes() {
        let k8 = Hypergraph::complete(3, 8).unwrap();
        let e = sample_dense_msets(&k8, 5, 0.4, 1, 0, SampleMode::Auto).unwrap();
        assert!(e.exhaustive);
        assert_eq!((e.hits, e.total), (56, 56));
        let empty = Hypergraph::empty(3, 8).unwrap();
        let e = sample_dense_msets(&empty, 5, 0.1, 100, 1, SampleMode::Sampled).unwrap();
        assert_eq!(e.fraction, 0.0);
    }

    #[test]
    fn gabn_exact_fraction() {
        let g = gen_gabn(&GabnParams::new(2, 1, 8, 3).unwrap()).unwrap();
        let e = sample_dense_msets(&g, 5, 0.3, 1, 0, SampleMode::Exhaustive).unwrap();
        assert_eq!((e.hits, e.total), (48, 56));
    }

    #[test]
    fn mask_and_generic_paths_agree() {
        let g = gen_gabn(&GabnParams::new(3, 1, 9, 3).unwrap()).unwrap();
        let dense = Dense {
            g: &g,
            masks: None,
            threshold: 1.5,
        };
        let fast = sample_dense_msets(&g, 6, 0.25, 1, 0, SampleMode::Exhaustive).unwrap();
        let slow = lex_subsets(9, 6)
            .filter(|s| dense.qualifies(s).unwrap())
            .count();
        assert_eq!(fast.hits as usize, slow);
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let g = gen_gabn(&GabnParams::new(2, 1, 10, 3).unwrap()).unwrap();
        let a = sample_dense_msets(&g, 6, 0.3, 500, 7, SampleMode::Sampled).unwrap();
        let b = sample_dense_msets(&g, 6, 0.3, 500, 7, SampleMode::Sampled).unwrap();
        assert_eq!(a, b);
        assert!(a.stderr > 0.0);
    }

    #[test]
    fn parameter_errors() {
        let g = Hypergraph::complete(3, 5).unwrap();
        assert!(sample_dense_msets(&g, 6, 0.1, 1, 0, SampleMode::Auto).is_err());
        assert!(sample_dense_msets(&g, 1, 0.1, 1, 0, SampleMode::Auto).is_err());
        assert!(sample_dense_msets(&g, 3, 0.1, 0, 0, SampleMode::Sampled).is_err());
    }
}
