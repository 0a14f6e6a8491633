use crate::combinat::{binomial, lex_subsets};
use crate::{Error, Hypergraph, Result};

/// Part index of each vertex when `0..n` is cut into `parts` contiguous
/// near-equal blocks, the first `n mod parts` blocks one larger.
pub fn near_equal_parts(n: usize, parts: usize) -> Vec<usize> {
    let base = n / parts;
    let extra = n % parts;
    let mut out = Vec::with_capacity(n);
    for p in 0..parts {
        let size = base + usize::from(p < extra);
        out.extend(std::iter::repeat_n(p, size));
    }
    out
}

/// Parameters of the a-part construction with forward span b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GabnParams {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub k: usize,
}

impl GabnParams {
    pub fn new(a: usize, b: usize, n: usize, k: usize) -> Result<Self> {
        if a < 2 || b == 0 || b >= a || n < a || k < 3 {
            return Err(Error::InvalidParameter(format!(
                "gabn needs n >= a >= 2, 1 <= b < a, k >= 3 (got a={a}, b={b}, n={n}, k={k})"
            )));
        }
        Ok(GabnParams { a, b, n, k })
    }

    /// Lower bound `(b/a)·n − b − (k−1)` on the minimum codegree.
    pub fn codegree_lower_bound(&self) -> f64 {
        self.b as f64 / self.a as f64 * self.n as f64 - self.b as f64 - (self.k - 1) as f64
    }

    pub fn parts(&self) -> Vec<usize> {
        near_equal_parts(self.n, self.a)
    }

    /// Parts `i+1, ..., i+b` (mod a) that a (k−1)-set inside part `i` sees.
    pub fn forward_parts(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.b).map(move |j| (i + j) % self.a)
    }

    /// Whether a k-set with the given per-part counts is an edge.
    fn accepts(&self, counts: &[(usize, usize)]) -> bool {
        match counts {
            [] | [_] => false,
            [(i, ci), (j, cj)] => {
                let forward = |from: usize, to: usize| {
                    (1..=self.b).contains(&((to + self.a - from) % self.a))
                };
                (*ci >= 2 && *cj >= 2)
                    || (*ci == self.k - 1 && *cj == 1 && forward(*i, *j))
                    || (*cj == self.k - 1 && *ci == 1 && forward(*j, *i))
            }
            _ => true,
        }
    }
}

/// The a-part construction: k−1 vertices of `V_i` plus one of `V_{i+1..i+b}`,
/// every k-set meeting at least three parts, and every k-set inside two parts
/// meeting each in at least two vertices.
pub fn gen_gabn(p: &GabnParams) -> Result<Hypergraph> {
    let p = GabnParams::new(p.a, p.b, p.n, p.k)?;
    let part = p.parts();
    let mut counts: Vec<(usize, usize)> = Vec::with_capacity(p.k);
    let edges = lex_subsets(p.n, p.k)
        .filter(|e| {
            counts.clear();
            for &v in e {
                match counts.iter_mut().find(|(q, _)| *q == part[v]) {
                    Some((_, c)) => *c += 1,
                    None => counts.push((part[v], 1)),
                }
            }
            p.accepts(&counts)
        })
        .collect();
    Ok(Hypergraph::from_canonical(p.k, p.n, edges))
}

/// All k-sets meeting at least two of `r` near-equal parts.
pub fn gen_rpartite(n: usize, r: usize, k: usize) -> Result<Hypergraph> {
    if r == 0 || n < r || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "rpartite needs n >= r >= 1, k >= 2 (got n={n}, r={r}, k={k})"
        )));
    }
    let part = near_equal_parts(n, r);
    let edges = lex_subsets(n, k)
        .filter(|e| e.iter().any(|&v| part[v] != part[e[0]]))
        .collect();
    Ok(Hypergraph::from_canonical(k, n, edges))
}

/// `K^k(t,t)`: A = `0..t`, B = `t..2t`, edges meet A or B in exactly one vertex.
pub fn gen_ktt(t: usize, k: usize) -> Result<Hypergraph> {
    if t == 0 || k < 3 {
        return Err(Error::InvalidParameter(format!(
            "ktt needs t >= 1, k >= 3 (got t={t}, k={k})"
        )));
    }
    let edges = lex_subsets(2 * t, k)
        .filter(|e| {
            let in_a = e.iter().filter(|&&v| v < t).count();
            in_a == 1 || k - in_a == 1
        })
        .collect();
    Ok(Hypergraph::from_canonical(k, 2 * t, edges))
}

/// `2t·C(t, k−1)`, the edge count of `K^k(t,t)`.
pub fn ktt_edge_count(t: usize, k: usize) -> u128 {
    2 * t as u128 * binomial(t, k - 1)
}
