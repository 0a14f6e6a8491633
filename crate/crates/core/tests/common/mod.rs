#![allow(dead_code)]

use khg_core::combinat::lex_subsets;
use khg_core::Hypergraph;
use proptest::prelude::*;

/// A k-graph on `n` vertices keeping the k-sets whose bit in `bits` is set.
pub fn from_bits(k: usize, n: usize, bits: &[bool]) -> Hypergraph {
    let edges: Vec<Vec<usize>> = lex_subsets(n, k)
        .zip(bits.iter().cycle())
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Hypergraph::new(k, n, edges).unwrap()
}

/// Random 3-graphs on `lo..=hi` vertices with edge density around `p`.
pub fn graph3(lo: usize, hi: usize, p: f64) -> impl Strategy<Value = Hypergraph> {
    (lo..=hi).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(p), 1..=64)
            .prop_map(move |bits| from_bits(3, n, &bits))
    })
}

/// Random k-graphs with k in 3..=4.
pub fn graph_k(lo: usize, hi: usize) -> impl Strategy<Value = Hypergraph> {
    (3usize..=4, lo..=hi).prop_flat_map(|(k, n)| {
        let n = n.max(k);
        proptest::collection::vec(any::<bool>(), 1..=70)
            .prop_map(move |bits| from_bits(k, n, &bits))
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
