//! Exact containment test for the (s,t)-extension family of a base graph.
//!
//! For each distinct vertex image `W` of an embedding of `F`, index `j`
//! may use a host vertex `v ∉ W` iff `v` forms host edges with at least `t`
//! members of the image of `T_j`. Some member of `F(s,t)` sits on `W` iff
//! this candidacy relation has a system of distinct representatives, which
//! is decided by maximum matching.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::constructions::{extension_member, ExtensionFamily};
use crate::hypercore::verify_embedding;
use crate::{Embedding, Error, Hypergraph, Result};

use super::embed::{for_each_embedding, Completion, HostIndex};
use super::matching::maximum_matching;
use super::{SearchLimits, SearchOutcome};

/// The vertex chosen for index `j` and the elements of `T_j` it links to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub vertex: usize,
    /// Indices into `A(F)`, ascending; `P_j` is the first `t` of them.
    pub linked: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentCertificate {
    pub embedding: Embedding,
    pub links: Vec<Link>,
}

impl ContainmentCertificate {
    /// The `P`-vector induced by the certificate.
    pub fn p_vector(&self, t: usize) -> Vec<Vec<usize>> {
        self.links
            .iter()
            .map(|l| l.linked[..t.min(l.linked.len())].to_vec())
            .collect()
    }

    /// Full vertex map of the member `F(P)` into the host.
    pub fn member_map(&self) -> Vec<usize> {
        let mut map = self.embedding.map().to_vec();
        map.extend(self.links.iter().map(|l| l.vertex));
        map
    }
}

impl fmt::Display for ContainmentCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.embedding)?;
        for (j, l) in self.links.iter().enumerate() {
            let linked: Vec<String> = l.linked.iter().map(|y| y.to_string()).collect();
            writeln!(f, "v{}→{} links {}", j + 1, l.vertex, linked.join(" "))?;
        }
        Ok(())
    }
}

/// Decides whether `host` contains some member of `F(s,t)`.
pub fn contains_extension_member(
    host: &Hypergraph,
    base: &Hypergraph,
    s: usize,
    t: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome<ContainmentCertificate>> {
    let fam = ExtensionFamily::new(base, s, t)?;
    if base.n() + fam.r() > host.n() {
        return Ok(SearchOutcome::None);
    }
    let index = HostIndex::new(host);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: Option<ContainmentCertificate> = None;
    let completion = for_each_embedding(&index, base, limits, |map| {
        let mut w = map.to_vec();
        w.sort_unstable();
        if !seen.insert(w) {
            return ControlFlow::Continue(());
        }
        match match_on_image(&index, &fam, map) {
            Some(links) => {
                found = Some(ContainmentCertificate {
                    embedding: Embedding::new(map.to_vec()),
                    links,
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    match (completion, found) {
        (_, Some(cert)) => {
            verify_containment(host, base, s, t, &cert)?;
            Ok(SearchOutcome::Found(cert))
        }
        (Completion::Budget, None) => Ok(SearchOutcome::Budget),
        _ => Ok(SearchOutcome::None),
    }
}

fn match_on_image(index: &HostIndex, fam: &ExtensionFamily, map: &[usize]) -> Option<Vec<Link>> {
    let n = index.n();
    let mut outside = BitSet::full(n);
    for &h in map {
        outside.remove(h);
    }
    // Host neighbourhood of each image φ(Y), Y ∈ A, restricted to V \ W.
    let nbrs: Vec<BitSet> = fam
        .a_sets()
        .iter()
        .map(|y| {
            let mut img: Vec<usize> = y.iter().map(|&v| map[v]).collect();
            img.sort_unstable();
            let mut s = index.neighbourhood(&img).clone();
            s.intersect_with(&outside);
            s
        })
        .collect();
    let t = fam.t();
    let adj: Vec<Vec<usize>> = fam
        .t_sets()
        .iter()
        .map(|tj| {
            outside
                .iter()
                .filter(|&v| tj.iter().filter(|&&y| nbrs[y].contains(v)).count() >= t)
                .collect()
        })
        .collect();
    if adj.iter().any(Vec::is_empty) {
        return None;
    }
    let partner = maximum_matching(n, &adj);
    partner
        .iter()
        .zip(fam.t_sets())
        .map(|(p, tj)| {
            p.map(|v| Link {
                vertex: v,
                linked: tj
                    .iter()
                    .copied()
                    .filter(|&y| nbrs[y].contains(v))
                    .collect(),
            })
        })
        .collect()
}

/// Rebuilds the member `F(P)` named by the certificate and checks its map.
pub fn verify_containment(
    host: &Hypergraph,
    base: &Hypergraph,
    s: usize,
    t: usize,
    cert: &ContainmentCertificate,
) -> Result<()> {
    let fam = ExtensionFamily::new(base, s, t)?;
    if cert.links.len() != fam.r() {
        return Err(Error::Certificate(format!(
            "{} links for r = {}",
            cert.links.len(),
            fam.r()
        )));
    }
    if cert.links.iter().any(|l| l.linked.len() < t) {
        return Err(Error::Certificate(
            "a vertex links to fewer than t sets".into(),
        ));
    }
    let spec = fam
        .spec(cert.p_vector(t))
        .map_err(|e| Error::Certificate(e.to_string()))?;
    let member = extension_member(&spec)?;
    verify_embedding(host, &member, &cert.member_map())
        .map_err(|d| Error::Certificate(d.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_gabn, GabnParams};

    #[test]
    fn complete_host_contains_member() {
        let host = Hypergraph::complete(3, 10).unwrap();
        let triple = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let out =
            contains_extension_member(&host, &triple, 2, 1, &SearchLimits::default()).unwrap();
        let SearchOutcome::Found(cert) = out else {
            panic!("expected certificate")
        };
        assert_eq!(cert.links.len(), 3);
        assert!(verify_containment(&host, &triple, 2, 1, &cert).is_ok());
    }

    #[test]
    fn gabn_blocks_k4_extension() {
        let host = gen_gabn(&GabnParams::new(2, 1, 12, 3).unwrap()).unwrap();
        let k4 = Hypergraph::complete(3, 4).unwrap();
        let out = contains_extension_member(&host, &k4, 2, 2, &SearchLimits::default()).unwrap();
        assert_eq!(out, SearchOutcome::None);
    }

    #[test]
    fn no_base_copy() {
        let host = Hypergraph::empty(3, 10).unwrap();
        let triple = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let out =
            contains_extension_member(&host, &triple, 2, 1, &SearchLimits::default()).unwrap();
        assert_eq!(out, SearchOutcome::None);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let host = Hypergraph::complete(3, 10).unwrap();
        let triple = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let SearchOutcome::Found(mut cert) =
            contains_extension_member(&host, &triple, 2, 1, &SearchLimits::default()).unwrap()
        else {
            panic!()
        };
        cert.links[1].vertex = cert.links[0].vertex;
        assert!(verify_containment(&host, &triple, 2, 1, &cert).is_err());
    }
}
