use std::fmt;

use crate::combinat::is_subset;
use crate::{Error, Result};

/// A k-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored as strictly increasing vertex tuples, sorted
/// lexicographically and free of duplicates. For `n <= 64` every edge also
/// carries a bit mask so subset tests are a single AND.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Option<Vec<u64>>,
}

impl Hypergraph {
    /// Builds a hypergraph, canonicalising vertex order inside each edge.
    ///
    /// Two input edges that coincide as sets are rejected as duplicates.
    pub fn new<I, E>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if k < 2 {
            return Err(Error::Uniformity(k));
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != k {
                return Err(Error::EdgeArity {
                    edge: e.to_vec(),
                    expected: k,
                    found: e.len(),
                });
            }
            let mut sorted = e.to_vec();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex {
                        vertex: w[0],
                        edge: e.to_vec(),
                    });
                }
            }
            if let Some(&v) = sorted.last().filter(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out.push(sorted);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self::from_canonical(k, n, out))
    }

    /// Edgeless k-graph on `n` vertices.
    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, std::iter::empty::<Vec<usize>>())
    }

    /// Complete k-graph on `n` vertices.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Uniformity(k));
        }
        Ok(Self::from_canonical(
            k,
            n,
            crate::combinat::lex_subsets(n, k).collect(),
        ))
    }

    /// Caller guarantees the edge list is already canonical.
    pub(crate) fn from_canonical(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let masks = (n <= 64).then(|| {
            edges
                .iter()
                .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        });
        Hypergraph { k, n, edges, masks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Per-edge bit masks, present when `n <= 64`.
    pub fn edge_masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    /// Membership test for a strictly increasing k-tuple.
    pub fn has_edge(&self, sorted: &[usize]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(sorted))
            .is_ok()
    }

    /// Membership test for an arbitrary vertex list (sorted internally).
    pub fn has_edge_unsorted(&self, vertices: &[usize]) -> bool {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        self.has_edge(&v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// `N(S) = { v : S ∪ {v} ∈ E }` for a (k−1)-subset `S`.
    pub fn neighbourhood(&self, s: &[usize]) -> Result<Vec<usize>> {
        let s = self.check_subset(s)?;
        let mut out = Vec::new();
        match &self.masks {
            Some(masks) => {
                let sm = s.iter().fold(0u64, |m, &v| m | 1 << v);
                for &em in masks {
                    if em & sm == sm {
                        out.push((em ^ sm).trailing_zeros() as usize);
                    }
                }
            }
            None => {
                for e in &self.edges {
                    if is_subset(&s, e) {
                        out.extend(e.iter().copied().filter(|v| s.binary_search(v).is_err()));
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn check_subset(&self, s: &[usize]) -> Result<Vec<usize>> {
        if s.len() + 1 != self.k {
            return Err(Error::EdgeArity {
                edge: s.to_vec(),
                expected: self.k - 1,
                found: s.len(),
            });
        }
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex {
                    vertex: w[0],
                    edge: s.to_vec(),
                });
            }
        }
        if let Some(&v) = sorted.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(sorted)
    }

    /// Sub-hypergraph induced on `w`, relabelled to `0..|w|` preserving order.
    pub fn induced(&self, w: &[usize]) -> Result<Hypergraph> {
        let mut keep = w.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        // Order-preserving relabelling keeps lexicographic order.
        Ok(Self::from_canonical(self.k, keep.len(), edges))
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        Hypergraph::new(
            self.k,
            self.n,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }

    /// Same edges on a larger vertex set.
    pub fn with_vertices(&self, n: usize) -> Result<Hypergraph> {
        if n < self.n {
            return Err(Error::InvalidParameter(format!(
                "cannot shrink {} vertices to {n}",
                self.n
            )));
        }
        Ok(Self::from_canonical(self.k, n, self.edges.clone()))
    }

    /// Copy with one edge removed (no-op if absent).
    pub fn without_edge(&self, edge: &[usize]) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.as_slice() != edge)
            .cloned()
            .collect();
        Self::from_canonical(self.k, self.n, edges)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(k={}, n={}, {:?})",
            self.k, self.n, self.edges
        )
    }
}
