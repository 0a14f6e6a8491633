//! Weak r-colourability: a vertex partition into r parts with no edge
//! inside a single part.

use crate::hypercore::verify_colouring;
use crate::satgate::{run_backend, Backend, CnfInstance, SatStatus};
use crate::{Colouring, Error, Hypergraph, Result};

/// Largest vertex count the exhaustive backend accepts.
pub const BRUTE_VERTEX_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColourBackend {
    /// Exhaustive search over partitions, vertex 0 in part 0 and parts
    /// opened in first-use order.
    Brute,
    Sat(Backend),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColourOutcome {
    Colourable(Colouring),
    NotColourable,
}

impl ColourOutcome {
    pub fn is_colourable(&self) -> bool {
        matches!(self, ColourOutcome::Colourable(_))
    }
}

/// Decides whether `h` has a weak `r`-colouring.
pub fn colour(h: &Hypergraph, r: usize, backend: &ColourBackend) -> Result<ColourOutcome> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let parts = match backend {
        ColourBackend::Brute => brute(h, r)?,
        ColourBackend::Sat(b) => sat(h, r, b)?,
    };
    match parts {
        None => Ok(ColourOutcome::NotColourable),
        Some(parts) => {
            let c = Colouring::new(parts, r);
            verify_colouring(h, &c).map_err(|d| Error::Certificate(d.to_string()))?;
            Ok(ColourOutcome::Colourable(c))
        }
    }
}

fn brute(h: &Hypergraph, r: usize) -> Result<Option<Vec<usize>>> {
    let n = h.n();
    if n > BRUTE_VERTEX_LIMIT {
        return Err(Error::SizeGuard {
            what: "vertices for exhaustive colouring",
            size: n as u128,
            limit: BRUTE_VERTEX_LIMIT as u128,
        });
    }
    let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in h.edges() {
        closing[*e.last().expect("non-empty edge")].push(e);
    }
    let mut parts = vec![0usize; n];

    fn go(
        v: usize,
        opened: usize,
        r: usize,
        parts: &mut [usize],
        closing: &[Vec<&[usize]>],
    ) -> bool {
        if v == parts.len() {
            return true;
        }
        for c in 0..(opened + 1).min(r) {
            parts[v] = c;
            let ok = closing[v].iter().all(|e| e.iter().any(|&u| parts[u] != c));
            if ok && go(v + 1, opened.max(c + 1), r, parts, closing) {
                return true;
            }
        }
        false
    }

    Ok(go(0, 0, r, &mut parts, &closing).then_some(parts))
}

/// CNF for weak r-colouring: one part per vertex, no monochromatic edge,
/// vertex 0 in part 0. Variable of (v, c) is `v·r + c + 1`.
pub(crate) fn colouring_cnf(h: &Hypergraph, r: usize) -> CnfInstance {
    let n = h.n();
    let x = |v: usize, c: usize| (v * r + c + 1) as i32;
    let mut cnf = CnfInstance::new(n * r);
    for v in 0..n {
        cnf.add((0..r).map(|c| x(v, c)).collect());
        for c in 0..r {
            for d in c + 1..r {
                cnf.add(vec![-x(v, c), -x(v, d)]);
            }
        }
    }
    for e in h.edges() {
        for c in 0..r {
            cnf.add(e.iter().map(|&u| -x(u, c)).collect());
        }
    }
    if n > 0 {
        cnf.add(vec![x(0, 0)]);
    }
    cnf
}

fn sat(h: &Hypergraph, r: usize, backend: &Backend) -> Result<Option<Vec<usize>>> {
    let cnf = colouring_cnf(h, r);
    let verdict = run_backend(&cnf, backend)?;
    match verdict.status {
        SatStatus::Unsat => Ok(None),
        SatStatus::Unknown => Err(Error::Backend(format!(
            "{} returned UNKNOWN",
            verdict.backend
        ))),
        SatStatus::Sat => {
            let model = verdict.model.expect("SAT carries a model");
            let parts = (0..h.n())
                .map(|v| {
                    (0..r)
                        .find(|&c| model[v * r + c + 1])
                        .expect("every vertex has a part")
                })
                .collect();
            Ok(Some(parts))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_fr;

    #[test]
    fn k4_two_colourable() {
        let k4 = Hypergraph::complete(3, 4).unwrap();
        let ColourOutcome::Colourable(c) = colour(&k4, 2, &ColourBackend::Brute).unwrap() else {
            panic!()
        };
        assert_eq!(c.parts(), &[0, 0, 1, 1]);
        assert!(colour(&k4, 2, &ColourBackend::Sat(Backend::internal()))
            .unwrap()
            .is_colourable());
        assert_eq!(
            colour(&k4, 1, &ColourBackend::Brute).unwrap(),
            ColourOutcome::NotColourable
        );
    }

    #[test]
    fn f32_not_two_colourable() {
        let f = gen_fr(3, 2).unwrap();
        for b in [
            ColourBackend::Brute,
            ColourBackend::Sat(Backend::internal()),
        ] {
            assert_eq!(colour(&f, 2, &b).unwrap(), ColourOutcome::NotColourable);
            assert!(colour(&f, 3, &b).unwrap().is_colourable());
        }
    }

    #[test]
    fn edgeless_and_empty() {
        let e = Hypergraph::empty(3, 5).unwrap();
        assert!(colour(&e, 1, &ColourBackend::Brute)
            .unwrap()
            .is_colourable());
        let z = Hypergraph::empty(3, 0).unwrap();
        assert!(colour(&z, 1, &ColourBackend::Sat(Backend::internal()))
            .unwrap()
            .is_colourable());
        assert!(colour(&z, 0, &ColourBackend::Brute).is_err());
    }

    #[test]
    fn brute_guard() {
        let big = Hypergraph::empty(3, 40).unwrap();
        assert!(matches!(
            colour(&big, 2, &ColourBackend::Brute),
            Err(Error::SizeGuard { .. })
        ));
    }
}
