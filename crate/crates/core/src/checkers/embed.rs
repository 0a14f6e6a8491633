//! Backtracking subgraph embedding.
//!
//! Pattern vertices are placed one at a time, always picking the unplaced
//! vertex with the fewest surviving host candidates (ties: larger pattern
//! degree, then smaller index). Candidates are pruned by host degree, by the
//! 2-shadow of placed neighbours, and exactly by host codegree
//! neighbourhoods for pattern edges whose other k−1 vertices are placed.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::combinat::without;
use crate::hypercore::verify_embedding;
use crate::{Embedding, Error, Hypergraph, Result};

use super::{SearchLimits, SearchOutcome};

/// Codegree neighbourhoods and 2-shadow of a host, reusable across searches.
#[derive(Clone, Debug)]
pub struct HostIndex {
    k: usize,
    n: usize,
    degree: Vec<usize>,
    nbr: HashMap<Vec<usize>, BitSet>,
    shadow: Vec<BitSet>,
    empty: BitSet,
}

impl HostIndex {
    pub fn new(host: &Hypergraph) -> Self {
        let (k, n) = (host.k(), host.n());
        let mut nbr: HashMap<Vec<usize>, BitSet> = HashMap::new();
        let mut shadow = vec![BitSet::new(n); n];
        for e in host.edges() {
            for (pos, &v) in e.iter().enumerate() {
                nbr.entry(without(e, pos))
                    .or_insert_with(|| BitSet::new(n))
                    .insert(v);
                for &u in e {
                    if u != v {
                        shadow[v].insert(u);
                    }
                }
            }
        }
        HostIndex {
            k,
            n,
            degree: host.degrees(),
            nbr,
            shadow,
            empty: BitSet::new(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `N(S)` for a sorted (k−1)-set.
    pub fn neighbourhood(&self, sorted: &[usize]) -> &BitSet {
        self.nbr.get(sorted).unwrap_or(&self.empty)
    }

    pub fn has_edge(&self, sorted: &[usize]) -> bool {
        let Some((&last, rest)) = sorted.split_last() else {
            return false;
        };
        self.neighbourhood(rest).contains(last)
    }
}

struct PatternInfo {
    n: usize,
    edges: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    shadow: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl PatternInfo {
    fn new(p: &Hypergraph) -> Self {
        let n = p.n();
        let mut incident = vec![Vec::new(); n];
        let mut shadow = vec![Vec::new(); n];
        for (i, e) in p.edges().iter().enumerate() {
            for &v in e {
                incident[v].push(i);
                for &u in e {
                    if u != v && !shadow[v].contains(&u) {
                        shadow[v].push(u);
                    }
                }
            }
        }
        PatternInfo {
            n,
            edges: p.edges().to_vec(),
            incident,
            shadow,
            degree: p.degrees(),
        }
    }
}

/// How a full enumeration ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completion {
    /// Every embedding was visited.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    Budget,
}

enum Flow {
    Continue,
    Stop,
    Budget,
}

struct Search<'a, F> {
    host: &'a HostIndex,
    pat: &'a PatternInfo,
    base: Vec<BitSet>,
    map: Vec<usize>,
    used: BitSet,
    placed: usize,
    nodes: u64,
    budget: Option<u64>,
    key: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn candidates(&mut self, v: usize) -> BitSet {
        let mut c = self.base[v].clone();
        c.difference_with(&self.used);
        for &u in &self.pat.shadow[v] {
            if self.map[u] != usize::MAX {
                c.intersect_with(&self.host.shadow[self.map[u]]);
            }
        }
        for &ei in &self.pat.incident[v] {
            let e = &self.pat.edges[ei];
            if e.iter().all(|&u| u == v || self.map[u] != usize::MAX) {
                self.key.clear();
                self.key
                    .extend(e.iter().filter(|&&u| u != v).map(|&u| self.map[u]));
                self.key.sort_unstable();
                c.intersect_with(self.host.neighbourhood(&self.key));
            }
        }
        c
    }

    fn dfs(&mut self) -> Flow {
        if self.placed == self.pat.n {
            return match (self.visit)(&self.map) {
                ControlFlow::Continue(()) => Flow::Continue,
                ControlFlow::Break(()) => Flow::Stop,
            };
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Flow::Budget;
        }
        let mut best: Option<(usize, BitSet)> = None;
        for v in 0..self.pat.n {
            if self.map[v] != usize::MAX {
                continue;
            }
            let c = self.candidates(v);
            let better = match &best {
                None => true,
                Some((b, bc)) => {
                    let (cn, bn) = (c.count(), bc.count());
                    cn < bn || (cn == bn && self.pat.degree[v] > self.pat.degree[*b])
                }
            };
            if better {
                let empty = c.is_empty();
                best = Some((v, c));
                if empty {
                    return Flow::Continue;
                }
            }
        }
        let (v, cands) = best.expect("unplaced vertex exists");
        for h in cands.iter() {
            self.map[v] = h;
            self.used.insert(h);
            self.placed += 1;
            let flow = self.dfs();
            self.placed -= 1;
            self.used.remove(h);
            self.map[v] = usize::MAX;
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

/// Calls `visit` with every embedding `pattern → host` (as a vertex map).
pub fn for_each_embedding<F>(
    host: &HostIndex,
    pattern: &Hypergraph,
    limits: &SearchLimits,
    visit: F,
) -> Completion
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.n() > host.n || (pattern.edge_count() > 0 && pattern.k() != host.k) {
        return Completion::Exhausted;
    }
    let pat = PatternInfo::new(pattern);
    let base = (0..pat.n)
        .map(|v| {
            let mut s = BitSet::new(host.n);
            for h in 0..host.n {
                if host.degree[h] >= pat.degree[v] {
                    s.insert(h);
                }
            }
            s
        })
        .collect();
    let mut search = Search {
        host,
        pat: &pat,
        base,
        map: vec![usize::MAX; pat.n],
        used: BitSet::new(host.n),
        placed: 0,
        nodes: 0,
        budget: limits.node_budget,
        key: Vec::with_capacity(host.k),
        visit,
    };
    match search.dfs() {
        Flow::Continue => Completion::Exhausted,
        Flow::Stop => Completion::Stopped,
        Flow::Budget => Completion::Budget,
    }
}

/// Finds one embedding of `pattern` into `host`, re-verified independently.
pub fn find_embedding(host: &Hypergraph, pattern: &Hypergraph) -> Result<SearchOutcome<Embedding>> {
    find_embedding_with(host, pattern, &SearchLimits::default())
}

pub fn find_embedding_with(
    host: &Hypergraph,
    pattern: &Hypergraph,
    limits: &SearchLimits,
) -> Result<SearchOutcome<Embedding>> {
    find_embedding_indexed(host, &HostIndex::new(host), pattern, limits)
}

pub fn find_embedding_indexed(
    host: &Hypergraph,
    index: &HostIndex,
    pattern: &Hypergraph,
    limits: &SearchLimits,
) -> Result<SearchOutcome<Embedding>> {
    let mut found = None;
    let completion = for_each_embedding(index, pattern, limits, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    match (completion, found) {
        (Completion::Stopped, Some(map)) => {
            verify_embedding(host, pattern, &map).map_err(|d| Error::Certificate(d.to_string()))?;
            Ok(SearchOutcome::Found(Embedding::new(map)))
        }
        (Completion::Budget, _) => Ok(SearchOutcome::Budget),
        _ => Ok(SearchOutcome::None),
    }
}
