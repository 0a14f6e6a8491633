//! Isomorphism test for small k-graphs by refined backtracking.

use crate::{Error, Hypergraph, Result};

/// Default vertex limit for [`is_isomorphic`].
pub const ISO_VERTEX_LIMIT: usize = 16;

/// Whether an edge-preserving vertex bijection exists.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    is_isomorphic_with_limit(a, b, ISO_VERTEX_LIMIT)
}

pub fn is_isomorphic_with_limit(a: &Hypergraph, b: &Hypergraph, limit: usize) -> Result<bool> {
    if a.n().max(b.n()) > limit {
        return Err(Error::SizeGuard {
            what: "isomorphism instance",
            size: a.n().max(b.n()) as u128,
            limit: limit as u128,
        });
    }
    if a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let ia = Invariants::new(a);
    let ib = Invariants::new(b);
    let mut sa = ia.signature.clone();
    let mut sb = ib.signature.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(false);
    }

    // Place vertices with the rarest signature first.
    let n = a.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let rarity = ia
            .signature
            .iter()
            .filter(|s| **s == ia.signature[v])
            .count();
        (rarity, std::cmp::Reverse(ia.degree[v]), v)
    });
    // Edges of `a` checked once their last vertex (in `order`) is placed.
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in a.edges() {
        let last = e.iter().map(|&v| pos[v]).max().unwrap();
        closing[last].push(e);
    }

    let mut search = IsoSearch {
        a,
        b,
        ia: &ia,
        ib: &ib,
        order: &order,
        closing: &closing,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        image: Vec::with_capacity(a.k()),
    };
    Ok(search.extend(0))
}

struct Invariants {
    degree: Vec<usize>,
    /// Number of edges containing both `u` and `v`.
    pair: Vec<Vec<usize>>,
    signature: Vec<(usize, Vec<usize>)>,
}

impl Invariants {
    fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let degree = h.degrees();
        let mut pair = vec![vec![0; n]; n];
        for e in h.edges() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    pair[u][v] += 1;
                    pair[v][u] += 1;
                }
            }
        }
        let signature = (0..n)
            .map(|v| {
                let mut row = pair[v].clone();
                row.sort_unstable();
                (degree[v], row)
            })
            .collect();
        Invariants {
            degree,
            pair,
            signature,
        }
    }
}

struct IsoSearch<'a> {
    a: &'a Hypergraph,
    b: &'a Hypergraph,
    ia: &'a Invariants,
    ib: &'a Invariants,
    order: &'a [usize],
    closing: &'a [Vec<&'a [usize]>],
    map: Vec<usize>,
    used: Vec<bool>,
    image: Vec<usize>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.b.n() {
            if self.used[w] || self.ia.signature[v] != self.ib.signature[w] {
                continue;
            }
            let pairs_ok = self.order[..depth]
                .iter()
                .all(|&u| self.ia.pair[u][v] == self.ib.pair[self.map[u]][w]);
            if !pairs_ok {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.edges_ok(depth) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn edges_ok(&mut self, depth: usize) -> bool {
        for e in &self.closing[depth] {
            self.image.clear();
            self.image.extend(e.iter().map(|&v| self.map[v]));
            self.image.sort_unstable();
            if !self.b.has_edge(&self.image) {
                return false;
            }
        }
        debug_assert!(self.a.k() == self.b.k());
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn random_relabelling_is_isomorphic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let h = Hypergraph::new(
            3,
            9,
            [
                [0, 1, 2],
                [1, 2, 3],
                [3, 4, 5],
                [0, 5, 8],
                [6, 7, 8],
                [2, 4, 6],
            ],
        )
        .unwrap();
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            assert!(is_isomorphic(&h, &h.relabel(&perm).unwrap()).unwrap());
        }
    }

    #[test]
    fn edge_vs_empty() {
        let e = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let z = Hypergraph::empty(3, 3).unwrap();
        assert!(!is_isomorphic(&e, &z).unwrap());
    }

    #[test]
    fn same_degrees_different_structure() {
        // Two 3-graphs with equal degree sequences: a tight path and a "star" pair.
        let p = Hypergraph::new(3, 6, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]]).unwrap();
        let q = Hypergraph::new(3, 6, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [1, 4, 5]]).unwrap();
        assert_eq!(
            {
                let mut d = p.degrees();
                d.sort();
                d
            },
            {
                let mut d = q.degrees();
                d.sort();
                d
            }
        );
        assert!(!is_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn size_guard() {
        let big = Hypergraph::empty(3, 20).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::SizeGuard { .. })
        ));
        assert!(is_isomorphic_with_limit(&big, &big, 20).unwrap());
    }
}
