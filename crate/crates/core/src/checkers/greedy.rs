//! Embedders for `F^k_r` that follow the inductive construction.
//!
//! [`greedy_embed_f2`] is the one-pass greedy for `F^k_2`: fix the first
//! (2k−3)-set, then for each (k−1)-subset `X_i` take the lexicographically
//! least edge inside the still-free part of `N(X_i)`. It can fail on hosts
//! that do contain `F^k_2`.
//!
//! [`embed_fr_recursive`] runs the same induction for any `r` but backtracks
//! over every choice (core set, then each block copy in turn), so a failure
//! is an exhaustive answer.

use std::fmt;

use crate::bitset::BitSet;
use crate::combinat::{colex_subsets, lex_subsets};
use crate::constructions::{gen_fr, FrParams};
use crate::hypercore::verify_embedding;
use crate::{Embedding, Error, Hypergraph, Result};

use super::embed::HostIndex;
use super::SearchLimits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyFailure {
    /// Host has fewer vertices than the pattern.
    TooSmall { host: usize, needed: usize },
    /// At step `step` (1-based) the free part `available` of `N(X_i)` spans
    /// no host edge.
    NoEdge {
        step: usize,
        x: Vec<usize>,
        available: Vec<usize>,
    },
}

impl fmt::Display for GreedyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooSmall { host, needed } => {
                write!(f, "host has {host} vertices, pattern needs {needed}")
            }
            Self::NoEdge { step, x, available } => write!(
                f,
                "step {step}: free neighbourhood of {x:?} ({} vertices {available:?}) spans no edge",
                available.len()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Found(Embedding),
    Failed(GreedyFailure),
}

/// One-pass greedy embedding of `F^k_2` (lexicographically least choices).
pub fn greedy_embed_f2(host: &Hypergraph) -> Result<GreedyOutcome> {
    let k = host.k();
    let params = FrParams::new(k, 2)?;
    let needed = params.vertex_count() as usize;
    if host.n() < needed {
        return Ok(GreedyOutcome::Failed(GreedyFailure::TooSmall {
            host: host.n(),
            needed,
        }));
    }
    let index = HostIndex::new(host);
    let core = params.core_size();
    let mut map: Vec<usize> = (0..core).collect();
    let mut used = BitSet::new(host.n());
    for v in 0..core {
        used.insert(v);
    }
    for (i, x) in colex_subsets(core, k - 1).into_iter().enumerate() {
        let mut avail = index.neighbourhood(&x).clone();
        avail.difference_with(&used);
        let pool: Vec<usize> = avail.iter().collect();
        let block = lex_subsets(pool.len(), k - 1).find_map(|pos| {
            let y: Vec<usize> = pos.iter().map(|&p| pool[p]).collect();
            let mut reach = index.neighbourhood(&y).clone();
            reach.intersect_with(&avail);
            let last = reach.iter().next()?;
            let mut e = y;
            e.push(last);
            e.sort_unstable();
            Some(e)
        });
        let Some(block) = block else {
            return Ok(GreedyOutcome::Failed(GreedyFailure::NoEdge {
                step: i + 1,
                x,
                available: pool,
            }));
        };
        for &v in &block {
            used.insert(v);
        }
        map.extend(block);
    }
    let pattern = gen_fr(k, 2)?;
    verify_embedding(host, &pattern, &map).map_err(|d| Error::Certificate(d.to_string()))?;
    Ok(GreedyOutcome::Found(Embedding::new(map)))
}

/// Where the deepest attempt of [`embed_fr_recursive`] got stuck.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FrFailure {
    /// Top-level core sets tried.
    pub cores_tried: u64,
    /// Innermost-last chain of `(level r, block index, core set)` along the
    /// attempt that placed the most blocks before failing.
    pub path: Vec<(usize, usize, Vec<usize>)>,
}

impl fmt::Display for FrFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no copy after {} core sets", self.cores_tried)?;
        for (r, block, core) in &self.path {
            write!(f, "; r={r} stuck at block {} of core {core:?}", block + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrOutcome {
    Found(Embedding),
    Failed(FrFailure),
    Budget,
}

enum Flow {
    Continue,
    Stop,
    Budget,
}

struct FrSearch<'a> {
    index: &'a HostIndex,
    k: usize,
    nodes: u64,
    budget: Option<u64>,
    cores_tried: u64,
    best_depth: usize,
    best_path: Vec<(usize, usize, Vec<usize>)>,
    stack: Vec<(usize, usize, Vec<usize>)>,
}

impl FrSearch<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.budget.is_some_and(|b| self.nodes > b)
    }

    fn note_failure(&mut self) {
        let depth: usize = self.stack.iter().map(|(_, b, _)| b + 1).sum();
        if depth > self.best_depth || self.best_path.is_empty() {
            self.best_depth = depth;
            self.best_path = self.stack.clone();
        }
    }

    /// Visits every copy of `F^k_r` inside `allowed`, in layout order.
    fn copies(
        &mut self,
        allowed: &BitSet,
        r: usize,
        top: bool,
        visit: &mut dyn FnMut(&mut Self, &[usize]) -> Flow,
    ) -> Flow {
        let verts: Vec<usize> = allowed.iter().collect();
        if r == 1 {
            for pos in lex_subsets(verts.len(), self.k) {
                if self.tick() {
                    return Flow::Budget;
                }
                let e: Vec<usize> = pos.iter().map(|&p| verts[p]).collect();
                if self.index.has_edge(&e) {
                    let flow = visit(self, &e);
                    if !matches!(flow, Flow::Continue) {
                        return flow;
                    }
                }
            }
            return Flow::Continue;
        }
        let params = FrParams { k: self.k, r };
        let core_size = params.core_size();
        let block_size = FrParams {
            k: self.k,
            r: r - 1,
        }
        .vertex_count() as usize;
        let xs = colex_subsets(core_size, self.k - 1);
        if verts.len() < params.vertex_count() as usize {
            return Flow::Continue;
        }
        for pos in lex_subsets(verts.len(), core_size) {
            if self.tick() {
                return Flow::Budget;
            }
            if top {
                self.cores_tried += 1;
            }
            let core: Vec<usize> = pos.iter().map(|&p| verts[p]).collect();
            let mut free = allowed.clone();
            for &v in &core {
                free.remove(v);
            }
            let mut acc = core.clone();
            let flow = self.blocks(&core, &xs, 0, &free, r, block_size, &mut acc, visit);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    #[allow(clippy::too_many_arguments)]
    fn blocks(
        &mut self,
        core: &[usize],
        xs: &[Vec<usize>],
        i: usize,
        free: &BitSet,
        r: usize,
        block_size: usize,
        acc: &mut Vec<usize>,
        visit: &mut dyn FnMut(&mut Self, &[usize]) -> Flow,
    ) -> Flow {
        if i == xs.len() {
            let done = acc.clone();
            return visit(self, &done);
        }
        let x: Vec<usize> = xs[i].iter().map(|&j| core[j]).collect();
        let mut allowed = self.index.neighbourhood(&x).clone();
        allowed.intersect_with(free);
        self.stack.push((r, i, core.to_vec()));
        let flow = if allowed.count() < block_size {
            Flow::Continue
        } else {
            self.copies(
                &allowed,
                r - 1,
                false,
                &mut |s: &mut Self, copy: &[usize]| {
                    let mut rest = free.clone();
                    for &v in copy {
                        rest.remove(v);
                    }
                    let len = acc.len();
                    acc.extend_from_slice(copy);
                    let flow = s.blocks(core, xs, i + 1, &rest, r, block_size, acc, visit);
                    acc.truncate(len);
                    flow
                },
            )
        };
        if matches!(flow, Flow::Continue) {
            self.note_failure();
        }
        self.stack.pop();
        flow
    }
}

/// Exhaustive inductive search for `F^k_r` in `host`.
pub fn embed_fr_recursive(host: &Hypergraph, r: usize, limits: &SearchLimits) -> Result<FrOutcome> {
    let k = host.k();
    let params = FrParams::new(k, r)?;
    let pattern = gen_fr(k, r)?;
    if (host.n() as u128) < params.vertex_count() {
        return Ok(FrOutcome::Failed(FrFailure::default()));
    }
    let index = HostIndex::new(host);
    let mut search = FrSearch {
        index: &index,
        k,
        nodes: 0,
        budget: limits.node_budget,
        cores_tried: 0,
        best_depth: 0,
        best_path: Vec::new(),
        stack: Vec::new(),
    };
    let mut found: Option<Vec<usize>> = None;
    let flow = search.copies(&BitSet::full(host.n()), r, true, &mut |_, copy| {
        found = Some(copy.to_vec());
        Flow::Stop
    });
    match (flow, found) {
        (Flow::Stop, Some(map)) => {
            verify_embedding(host, &pattern, &map)
                .map_err(|d| Error::Certificate(d.to_string()))?;
            Ok(FrOutcome::Found(Embedding::new(map)))
        }
        (Flow::Budget, _) => Ok(FrOutcome::Budget),
        _ => Ok(FrOutcome::Failed(FrFailure {
            cores_tried: search.cores_tried,
            path: search.best_path,
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_rpartite;

    #[test]
    fn greedy_in_complete_graph() {
        let host = Hypergraph::complete(3, 20).unwrap();
        let GreedyOutcome::Found(e) = greedy_embed_f2(&host).unwrap() else {
            panic!("greedy should succeed in K_20")
        };
        assert!(verify_embedding(&host, &gen_fr(3, 2).unwrap(), e.map()).is_ok());
        // S = {0,1,2}, first block is the least edge in N({0,1}) \ S.
        assert_eq!(&e.map()[..6], &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn greedy_fails_on_two_partite() {
        let host = gen_rpartite(20, 2, 3).unwrap();
        let GreedyOutcome::Failed(GreedyFailure::NoEdge { step, .. }) =
            greedy_embed_f2(&host).unwrap()
        else {
            panic!("host is F_2-free")
        };
        assert!(step >= 1);
    }

    #[test]
    fn greedy_too_small() {
        let host = Hypergraph::complete(3, 11).unwrap();
        assert_eq!(
            greedy_embed_f2(&host).unwrap(),
            GreedyOutcome::Failed(GreedyFailure::TooSmall {
                host: 11,
                needed: 12
            })
        );
    }

    #[test]
    fn recursive_in_complete_graph() {
        let host = Hypergraph::complete(3, 15).unwrap();
        let FrOutcome::Found(e) = embed_fr_recursive(&host, 2, &SearchLimits::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(e.map().len(), 12);
    }

    #[test]
    fn recursive_r1() {
        let host = Hypergraph::new(3, 5, [[1, 3, 4]]).unwrap();
        let FrOutcome::Found(e) = embed_fr_recursive(&host, 1, &SearchLimits::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(e.map(), &[1, 3, 4]);
        let empty = Hypergraph::empty(3, 5).unwrap();
        assert!(matches!(
            embed_fr_recursive(&empty, 1, &SearchLimits::default()).unwrap(),
            FrOutcome::Failed(_)
        ));
    }

    #[test]
    fn recursive_fails_on_two_partite() {
        let host = gen_rpartite(16, 2, 3).unwrap();
        let FrOutcome::Failed(f) = embed_fr_recursive(&host, 2, &SearchLimits::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(f.cores_tried, 560);
        assert!(!f.path.is_empty());
    }

    #[test]
    fn recursive_r3_in_complete_graph() {
        let host = Hypergraph::complete(3, 76).unwrap();
        let out = embed_fr_recursive(&host, 3, &SearchLimits::default()).unwrap();
        assert!(matches!(out, FrOutcome::Found(_)));
    }
}
