//! CNF encoding of "some n-vertex family-free k-graph has δ_{k−1} ≥ t"
//! and the binary search for co-ex(n, F) on top of it.

use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use super::backend::{run_backend, Backend, SatStatus, SolverVerdict};
use super::cnf::CnfInstance;
use crate::checkers::{find_embedding, for_each_embedding, HostIndex, SearchLimits, SearchOutcome};
use crate::combinat::{colex_rank, colex_subsets, with};
use crate::hypercore::min_codegree;
use crate::{Error, Hypergraph, Result};

/// Cap on embedding maps enumerated per family member.
pub const EMBEDDING_LIMIT: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoexEncoding {
    pub cnf: CnfInstance,
    /// `edges[i]` is the k-set of variable `i + 1` (colex order).
    pub edges: Vec<Vec<usize>>,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// Number of at-least-t constraints (one per (k−1)-set when t ≥ 1).
    pub cardinality_constraints: usize,
    /// Number of distinct forbidden edge-set images.
    pub blocking_clauses: usize,
}

impl CoexEncoding {
    /// The hypergraph selected by the edge variables of `model`.
    pub fn decode(&self, model: &[bool]) -> Hypergraph {
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| model.get(i + 1).copied().unwrap_or(false))
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph::new(self.k, self.n, edges).expect("edge variables are canonical k-sets")
    }
}

fn check_family(n: usize, k: usize, family: &[Hypergraph]) -> Result<()> {
    if k < 2 {
        return Err(Error::Uniformity(k));
    }
    if n < k {
        return Err(Error::TooFewVertices { n, needed: k });
    }
    if let Some(f) = family.iter().find(|f| f.k() != k) {
        return Err(Error::InvalidParameter(format!(
            "family member has uniformity {}, expected {k}",
            f.k()
        )));
    }
    Ok(())
}

/// Encodes the co-ex decision problem for threshold `t`.
pub fn encode_coex_cnf(
    n: usize,
    k: usize,
    family: &[Hypergraph],
    t: usize,
) -> Result<CoexEncoding> {
    check_family(n, k, family)?;
    let edges = colex_subsets(n, k);
    let mut cnf = CnfInstance::new(edges.len());
    let edge_var = |e: &[usize]| colex_rank(e) as i32 + 1;
    let mut contradiction = false;

    let mut cardinality_constraints = 0;
    if t > 0 {
        let ladder = n - k + 1;
        for s in colex_subsets(n, k - 1) {
            cardinality_constraints += 1;
            if t > ladder {
                contradiction = true;
                continue;
            }
            let xs: Vec<i32> = (0..n)
                .filter(|v| !s.contains(v))
                .map(|v| edge_var(&with(&s, v)))
                .collect();
            at_least(&mut cnf, &xs, t);
        }
    }

    let mut blocking = HashSet::new();
    let complete = HostIndex::new(&Hypergraph::complete(k, n)?);
    for f in family {
        if f.n() > n {
            continue;
        }
        if f.edge_count() == 0 {
            contradiction = true;
            continue;
        }
        let mut visited = 0u64;
        let completion = for_each_embedding(&complete, f, &SearchLimits::default(), |map| {
            visited += 1;
            if visited > EMBEDDING_LIMIT {
                return ControlFlow::Break(());
            }
            let mut image: Vec<i32> = f
                .edges()
                .iter()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&v| map[v]).collect();
                    img.sort_unstable();
                    -edge_var(&img)
                })
                .collect();
            image.sort_unstable();
            blocking.insert(image);
            ControlFlow::Continue(())
        });
        if visited > EMBEDDING_LIMIT || completion != crate::checkers::Completion::Exhausted {
            return Err(Error::SizeGuard {
                what: "embedding enumeration",
                size: visited as u128,
                limit: EMBEDDING_LIMIT as u128,
            });
        }
    }
    let mut blocking: Vec<Vec<i32>> = blocking.into_iter().collect();
    blocking.sort_unstable_by(|a, b| b.cmp(a));
    let blocking_clauses = blocking.len();
    for c in blocking {
        cnf.add(c);
    }
    if contradiction {
        let z = cnf.fresh();
        cnf.add(vec![z]);
        cnf.add(vec![-z]);
    }
    Ok(CoexEncoding {
        cnf,
        edges,
        n,
        k,
        t,
        cardinality_constraints,
        blocking_clauses,
    })
}

/// Sequential counter asserting that at least `t` of `xs` are true,
/// for 1 ≤ t ≤ |xs|. Register `(i, j)` implies "at least j of the first i".
fn at_least(cnf: &mut CnfInstance, xs: &[i32], t: usize) {
    let len = xs.len();
    let mut prev: Vec<i32> = Vec::new();
    for i in 1..=len {
        let x = xs[i - 1];
        let width = i.min(t);
        // Registers that cannot matter for the final (len, t) are skipped.
        let lo = t.saturating_sub(len - i).max(1);
        let mut cur = vec![0i32; width + 1];
        for j in lo..=width {
            let s = cnf.fresh();
            cur[j] = s;
            let keep = (j < i && j < prev.len())
                .then(|| prev[j])
                .filter(|&p| p != 0);
            let mut c1 = vec![-s, x];
            c1.extend(keep);
            cnf.add(c1);
            if j >= 2 {
                let mut c2 = vec![-s, prev[j - 1]];
                c2.extend(keep);
                cnf.add(c2);
            }
        }
        prev = cur;
    }
    cnf.add(vec![prev[t]]);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoexVerdict {
    pub verdict: SolverVerdict,
    /// Present exactly when the status is SAT; independently re-verified.
    pub witness: Option<Hypergraph>,
}

/// Decides whether some `n`-vertex family-free k-graph has δ_{k−1} ≥ `t`.
pub fn coex_decision(
    n: usize,
    k: usize,
    family: &[Hypergraph],
    t: usize,
    backend: &Backend,
) -> Result<CoexVerdict> {
    let enc = encode_coex_cnf(n, k, family, t)?;
    let verdict = run_backend(&enc.cnf, backend)?;
    let witness = match (&verdict.status, &verdict.model) {
        (SatStatus::Sat, Some(model)) => {
            let h = enc.decode(model);
            verify_witness(&h, family, t)?;
            Some(h)
        }
        (SatStatus::Sat, None) => return Err(Error::Backend("SAT without a model".into())),
        _ => None,
    };
    Ok(CoexVerdict { verdict, witness })
}

/// Checks δ_{k−1}(h) ≥ t and that no family member embeds in `h`.
pub fn verify_witness(h: &Hypergraph, family: &[Hypergraph], t: usize) -> Result<()> {
    let delta = min_codegree(h)?;
    if delta < t {
        return Err(Error::Certificate(format!("witness has δ = {delta} < {t}")));
    }
    for (i, f) in family.iter().enumerate() {
        match find_embedding(h, f)? {
            SearchOutcome::None => {}
            SearchOutcome::Found(_) => {
                return Err(Error::Certificate(format!(
                    "witness contains family member {i}"
                )))
            }
            SearchOutcome::Budget => return Err(Error::Budget),
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoexResult {
    pub value: usize,
    pub witness: Hypergraph,
    /// Every verdict obtained, keyed by t.
    pub verdicts: BTreeMap<usize, SatStatus>,
}

/// co-ex(n, F) by binary search over t ∈ [0, n−k+1].
pub fn coex_exact(
    n: usize,
    k: usize,
    family: &[Hypergraph],
    backend: &Backend,
) -> Result<CoexResult> {
    check_family(n, k, family)?;
    let mut cache: BTreeMap<usize, SatStatus> = BTreeMap::new();
    let mut witnesses: BTreeMap<usize, Hypergraph> = BTreeMap::new();
    let mut decide = |t: usize| -> Result<bool> {
        if let Some(s) = cache.get(&t) {
            return Ok(*s == SatStatus::Sat);
        }
        let v = coex_decision(n, k, family, t, backend)?;
        cache.insert(t, v.verdict.status);
        match v.verdict.status {
            SatStatus::Sat => {
                witnesses.insert(t, v.witness.expect("SAT carries a witness"));
                Ok(true)
            }
            SatStatus::Unsat => Ok(false),
            SatStatus::Unknown => Err(Error::Unknown { t }),
        }
    };
    if !decide(0)? {
        return Err(Error::NoFreeHypergraph { n });
    }
    let (mut lo, mut hi) = (0, n - k + 2);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if decide(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let sat_max = cache
        .iter()
        .filter(|(_, s)| **s == SatStatus::Sat)
        .map(|(t, _)| *t)
        .max();
    let unsat_min = cache
        .iter()
        .filter(|(_, s)| **s == SatStatus::Unsat)
        .map(|(t, _)| *t)
        .min();
    if let (Some(a), Some(b)) = (sat_max, unsat_min) {
        if a >= b {
            return Err(Error::Certificate(format!(
                "SAT at t = {a} but UNSAT at t = {b}"
            )));
        }
    }
    let witness = witnesses.remove(&lo).expect("lo was decided SAT");
    let delta = min_codegree(&witness)?;
    if unsat_min.is_some_and(|b| delta >= b) {
        return Err(Error::Certificate(format!(
            "witness for t = {lo} has δ = {delta}, contradicting an UNSAT verdict"
        )));
    }
    Ok(CoexResult {
        value: lo,
        witness,
        verdicts: cache,
    })
}
