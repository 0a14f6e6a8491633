//! Exhaustive co-ex oracle, sharing no search code with the SAT path.

use crate::combinat::{binomial, lex_subsets};
use crate::{Error, Hypergraph, Result};

/// Largest number of potential edges `brute_force_coex` will enumerate.
pub const BRUTE_EDGE_LIMIT: usize = 20;

/// co-ex(n, F) by scanning every edge subset of K_n^(k).
pub fn brute_force_coex(n: usize, k: usize, family: &[Hypergraph]) -> Result<usize> {
    if k < 2 {
        return Err(Error::Uniformity(k));
    }
    if n < k {
        return Err(Error::TooFewVertices { n, needed: k });
    }
    let slots = binomial(n, k);
    if slots > BRUTE_EDGE_LIMIT as u128 {
        return Err(Error::SizeGuard {
            what: "potential edges",
            size: slots,
            limit: BRUTE_EDGE_LIMIT as u128,
        });
    }
    let all: Vec<Vec<usize>> = lex_subsets(n, k).collect();
    let index_of = |e: &[usize]| all.iter().position(|x| x == e).expect("k-subset");

    // Edge mask of every (k−1)-set's link.
    let links: Vec<u32> = lex_subsets(n, k - 1)
        .map(|s| {
            all.iter()
                .enumerate()
                .filter(|(_, e)| s.iter().all(|v| e.contains(v)))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect();

    // Edge masks of every injective image of every member.
    let mut images: Vec<u32> = Vec::new();
    for f in family {
        if f.k() != k {
            return Err(Error::InvalidParameter("family uniformity mismatch".into()));
        }
        if f.n() > n {
            continue;
        }
        for_each_injection(f.n(), n, &mut |map| {
            let mask = f.edges().iter().fold(0u32, |m, e| {
                let mut img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
                img.sort_unstable();
                m | 1 << index_of(&img)
            });
            images.push(mask);
        });
    }
    images.sort_unstable();
    images.dedup();

    let mut best: Option<usize> = None;
    for h in 0u32..(1u32 << all.len()) {
        let delta = links
            .iter()
            .map(|&l| (l & h).count_ones() as usize)
            .min()
            .unwrap_or(0);
        if best.is_some_and(|b| delta <= b) {
            continue;
        }
        if images.iter().any(|&img| img & !h == 0) {
            continue;
        }
        best = Some(delta);
    }
    best.ok_or(Error::NoFreeHypergraph { n })
}

fn for_each_injection(len: usize, n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(map: &mut Vec<usize>, used: &mut [bool], len: usize, visit: &mut dyn FnMut(&[usize])) {
        if map.len() == len {
            visit(map);
            return;
        }
        for h in 0..used.len() {
            if !used[h] {
                used[h] = true;
                map.push(h);
                go(map, used, len, visit);
                map.pop();
                used[h] = false;
            }
        }
    }
    go(
        &mut Vec::with_capacity(len),
        &mut vec![false; n],
        len,
        visit,
    );
}
