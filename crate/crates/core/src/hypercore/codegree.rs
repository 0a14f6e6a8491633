use crate::combinat::{binomial, colex_rank, colex_subsets, without};
use crate::{Error, Hypergraph, Result};

/// Upper bound on the number of (k−1)-subsets a profile will materialise.
pub const PROFILE_LIMIT: u128 = 1 << 28;

/// Codegree `d(S)` of every (k−1)-subset, indexed by colex rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeProfile {
    k: usize,
    n: usize,
    degrees: Vec<u32>,
    min: usize,
    witness: Vec<usize>,
}

impl CodegreeProfile {
    pub fn compute(h: &Hypergraph) -> Result<Self> {
        let (k, n) = (h.k(), h.n());
        if n < k - 1 {
            return Err(Error::TooFewVertices { n, needed: k - 1 });
        }
        let size = binomial(n, k - 1);
        if size > PROFILE_LIMIT {
            return Err(Error::SizeGuard {
                what: "codegree profile",
                size,
                limit: PROFILE_LIMIT,
            });
        }
        let mut degrees = vec![0u32; size as usize];
        for e in h.edges() {
            for pos in 0..k {
                degrees[colex_rank(&without(e, pos))] += 1;
            }
        }
        let (min_rank, &min) = degrees
            .iter()
            .enumerate()
            .min_by_key(|&(i, d)| (*d, i))
            .expect("at least one (k-1)-subset");
        let witness = unrank(min_rank, n, k - 1);
        Ok(CodegreeProfile {
            k,
            n,
            degrees,
            min: min as usize,
            witness,
        })
    }

    /// The minimum codegree `δ_{k−1}`.
    pub fn min(&self) -> usize {
        self.min
    }

    /// A (k−1)-subset attaining the minimum (least colex rank).
    pub fn witness(&self) -> &[usize] {
        &self.witness
    }

    pub fn degree(&self, s: &[usize]) -> usize {
        let mut s = s.to_vec();
        s.sort_unstable();
        self.degrees[colex_rank(&s)] as usize
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().map(|&d| d as usize).sum()
    }

    /// `(S, d(S))` pairs in colex order of `S`.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, usize)> + '_ {
        colex_subsets(self.n, self.k - 1)
            .into_iter()
            .zip(self.degrees.iter().map(|&d| d as usize))
    }
}

/// Inverse of [`colex_rank`]: the `size`-subset of `0..n` with that rank.
pub(crate) fn unrank(mut rank: usize, n: usize, size: usize) -> Vec<usize> {
    let mut out = vec![0; size];
    let mut hi = n;
    for i in (0..size).rev() {
        let mut v = hi;
        while binomial(v, i + 1) as usize > rank {
            v -= 1;
        }
        out[i] = v;
        rank -= binomial(v, i + 1) as usize;
        hi = v;
    }
    out
}

/// Minimum codegree, `δ_{k−1}(H)`.
pub fn min_codegree(h: &Hypergraph) -> Result<usize> {
    CodegreeProfile::compute(h).map(|p| p.min())
}
