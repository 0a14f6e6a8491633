//! Binomial coefficients and colexicographic subset indexing.

use itertools::Itertools;

/// Exact binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Binomial coefficient as `usize`, `None` on overflow.
pub fn binomial_usize(n: usize, k: usize) -> Option<usize> {
    usize::try_from(binomial(n, k))
        .ok()
        .filter(|_| binomial(n, k) != u128::MAX)
}

/// Colex rank of a strictly increasing subset: `sum_i C(s_i, i + 1)`.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v, i + 1) as usize)
        .sum()
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(k)
}

/// Copy of `sorted` without the element at `pos`.
pub(crate) fn without(sorted: &[usize], pos: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(sorted.len().saturating_sub(1));
    out.extend_from_slice(&sorted[..pos]);
    out.extend_from_slice(&sorted[pos + 1..]);
    out
}

/// Sorted union of a sorted set and one extra element not in it.
pub(crate) fn with(sorted: &[usize], extra: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(sorted.len() + 1);
    let at = sorted.partition_point(|&v| v < extra);
    out.extend_from_slice(&sorted[..at]);
    out.push(extra);
    out.extend_from_slice(&sorted[at..]);
    out
}

/// Whether sorted `small` is a subset of sorted `big`.
pub(crate) fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}
