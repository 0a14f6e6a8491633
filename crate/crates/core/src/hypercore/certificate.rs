use std::fmt;

use crate::Hypergraph;

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, pattern_vertex: usize) -> usize {
        self.map[pattern_vertex]
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.map
    }
}

impl fmt::Display for Embedding {
    /// One `p→h` line per pattern vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, h) in self.map.iter().enumerate() {
            writeln!(f, "{p}→{h}")?;
        }
        Ok(())
    }
}

/// Why a candidate embedding was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingDefect {
    UniformityMismatch {
        host: usize,
        pattern: usize,
    },
    WrongLength {
        expected: usize,
        found: usize,
    },
    OutOfRange {
        pattern_vertex: usize,
        host_vertex: usize,
    },
    NotInjective {
        host_vertex: usize,
    },
    MissingEdge {
        pattern_edge: Vec<usize>,
    },
}

impl fmt::Display for EmbeddingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UniformityMismatch { host, pattern } => {
                write!(f, "uniformity mismatch: host {host}, pattern {pattern}")
            }
            Self::WrongLength { expected, found } => {
                write!(
                    f,
                    "map has {found} entries, pattern has {expected} vertices"
                )
            }
            Self::OutOfRange {
                pattern_vertex,
                host_vertex,
            } => write!(f, "{pattern_vertex}→{host_vertex} is outside the host"),
            Self::NotInjective { host_vertex } => {
                write!(f, "host vertex {host_vertex} used twice")
            }
            Self::MissingEdge { pattern_edge } => {
                write!(
                    f,
                    "image of pattern edge {pattern_edge:?} is not a host edge"
                )
            }
        }
    }
}

/// Checks that `map` is an injective edge-preserving map `pattern → host`.
pub fn verify_embedding(
    host: &Hypergraph,
    pattern: &Hypergraph,
    map: &[usize],
) -> Result<(), EmbeddingDefect> {
    if map.len() != pattern.n() {
        return Err(EmbeddingDefect::WrongLength {
            expected: pattern.n(),
            found: map.len(),
        });
    }
    if pattern.edge_count() > 0 && host.k() != pattern.k() {
        return Err(EmbeddingDefect::UniformityMismatch {
            host: host.k(),
            pattern: pattern.k(),
        });
    }
    let mut seen = vec![false; host.n()];
    for (p, &h) in map.iter().enumerate() {
        if h >= host.n() {
            return Err(EmbeddingDefect::OutOfRange {
                pattern_vertex: p,
                host_vertex: h,
            });
        }
        if std::mem::replace(&mut seen[h], true) {
            return Err(EmbeddingDefect::NotInjective { host_vertex: h });
        }
    }
    for e in pattern.edges() {
        let image: Vec<usize> = e.iter().map(|&v| map[v]).collect();
        if !host.has_edge_unsorted(&image) {
            return Err(EmbeddingDefect::MissingEdge {
                pattern_edge: e.clone(),
            });
        }
    }
    Ok(())
}

/// Vertex → part assignment for a weak r-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    parts: Vec<usize>,
    r: usize,
}

impl Colouring {
    pub fn new(parts: Vec<usize>, r: usize) -> Self {
        Colouring { parts, r }
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.parts[v]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Vertices of each part, in increasing order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r];
        for (v, &p) in self.parts.iter().enumerate() {
            out[p].push(v);
        }
        out
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes().iter().enumerate() {
            let vs: Vec<String> = class.iter().map(|v| v.to_string()).collect();
            writeln!(f, "part {i}: {}", vs.join(" "))?;
        }
        Ok(())
    }
}

/// Reasons a colouring certificate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringDefect {
    WrongLength { expected: usize, found: usize },
    PartOutOfRange { vertex: usize, part: usize },
    Monochromatic { edge: Vec<usize> },
}

impl fmt::Display for ColouringDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongLength { expected, found } => {
                write!(
                    f,
                    "colouring has {found} entries, graph has {expected} vertices"
                )
            }
            Self::PartOutOfRange { vertex, part } => write!(f, "vertex {vertex} in part {part}"),
            Self::Monochromatic { edge } => write!(f, "edge {edge:?} is monochromatic"),
        }
    }
}

/// Scans every edge for a monochromatic one.
pub fn verify_colouring(h: &Hypergraph, c: &Colouring) -> Result<(), ColouringDefect> {
    if c.parts.len() != h.n() {
        return Err(ColouringDefect::WrongLength {
            expected: h.n(),
            found: c.parts.len(),
        });
    }
    if let Some((vertex, &part)) = c.parts.iter().enumerate().find(|(_, &p)| p >= c.r) {
        return Err(ColouringDefect::PartOutOfRange { vertex, part });
    }
    for e in h.edges() {
        let first = c.parts[e[0]];
        if e.iter().all(|&v| c.parts[v] == first) {
            return Err(ColouringDefect::Monochromatic { edge: e.clone() });
        }
    }
    Ok(())
}
