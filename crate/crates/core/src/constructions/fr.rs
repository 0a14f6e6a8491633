use crate::combinat::{binomial, colex_subsets};
use crate::{Error, Hypergraph, Result};

/// Default cap on `|V(F^k_r)|`.
pub const FR_VERTEX_LIMIT: u128 = 1_000_000;

/// Size data of the recursive non-r-colourable k-graph `F^k_r`.
///
/// Layout: the core set `S = 0..r(k−2)+1` comes first, then one block per
/// (k−1)-subset `X_j` of `S` (colex order), each block a copy of
/// `F^k_{r−1}` laid out the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrParams {
    pub k: usize,
    pub r: usize,
}

impl FrParams {
    pub fn new(k: usize, r: usize) -> Result<Self> {
        if k < 3 || r == 0 {
            return Err(Error::InvalidParameter(format!(
                "F^k_r needs k >= 3, r >= 1 (got k={k}, r={r})"
            )));
        }
        Ok(FrParams { k, r })
    }

    /// `|S| = r(k−2)+1`; for r = 1 this is the single edge itself.
    pub fn core_size(&self) -> usize {
        if self.r == 1 {
            self.k
        } else {
            self.r * (self.k - 2) + 1
        }
    }

    /// `m = C(r(k−2)+1, k−1)` blocks.
    pub fn block_count(&self) -> u128 {
        if self.r == 1 {
            0
        } else {
            binomial(self.core_size(), self.k - 1)
        }
    }

    pub fn previous(&self) -> Option<FrParams> {
        (self.r > 1).then(|| FrParams {
            k: self.k,
            r: self.r - 1,
        })
    }

    /// `|V_r| = |S| + m·|V_{r−1}|`, `|V_1| = k`.
    pub fn vertex_count(&self) -> u128 {
        match self.previous() {
            None => self.k as u128,
            Some(prev) => (self.core_size() as u128)
                .saturating_add(self.block_count().saturating_mul(prev.vertex_count())),
        }
    }

    /// `|E_r| = m·(|V_{r−1}| + |E_{r−1}|)`, `|E_1| = 1`.
    pub fn edge_count(&self) -> u128 {
        match self.previous() {
            None => 1,
            Some(prev) => self
                .block_count()
                .saturating_mul(prev.vertex_count().saturating_add(prev.edge_count())),
        }
    }
}

pub fn gen_fr(k: usize, r: usize) -> Result<Hypergraph> {
    gen_fr_with_limit(k, r, FR_VERTEX_LIMIT)
}

pub fn gen_fr_with_limit(k: usize, r: usize, limit: u128) -> Result<Hypergraph> {
    let params = FrParams::new(k, r)?;
    let size = params.vertex_count();
    if size > limit {
        return Err(Error::SizeGuard {
            what: "F^k_r vertex set",
            size,
            limit,
        });
    }
    let mut edges = Vec::new();
    build(&params, 0, &mut edges);
    edges.sort_unstable();
    Ok(Hypergraph::from_canonical(k, size as usize, edges))
}

fn build(p: &FrParams, offset: usize, edges: &mut Vec<Vec<usize>>) -> usize {
    let Some(prev) = p.previous() else {
        edges.push((offset..offset + p.k).collect());
        return p.k;
    };
    let core = p.core_size();
    let mut next = offset + core;
    for x in colex_subsets(core, p.k - 1) {
        let start = next;
        next += build(&prev, start, edges);
        for v in start..next {
            let mut e: Vec<usize> = x.iter().map(|&i| offset + i).collect();
            e.push(v);
            edges.push(e);
        }
    }
    next - offset
}
