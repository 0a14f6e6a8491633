//! (s,t)-extensions of a base k-graph.
//!
//! `A` lists the (k−1)-subsets of `V(F)` in colex order, `T` the s-subsets
//! of `A` (as index sets into `A`) in colex order, `r = |T|`. A member is
//! picked by a vector `P` with `P_i` a t-subset of `T_i`; it adds a vertex
//! `v_i = |V(F)| + i` joined to every element of `P_i`.

use crate::combinat::{binomial, colex_subsets};
use crate::hypercore::is_isomorphic_with_limit;
use crate::{Error, Hypergraph, Result};

/// Cap on `r = |T|` before the family is materialised.
pub const EXTENSION_R_LIMIT: u128 = 1 << 16;
/// Cap on `C(s,t)^r` for whole-family iteration without override.
pub const FAMILY_SIZE_LIMIT: u128 = 1 << 16;

/// The `(A, T)` data of one base graph, shared by all its members.
#[derive(Clone, Debug)]
pub struct ExtensionFamily {
    base: Hypergraph,
    s: usize,
    t: usize,
    a_sets: Vec<Vec<usize>>,
    t_sets: Vec<Vec<usize>>,
    /// t-subsets of `0..s` in colex order: positions inside a `T_i`.
    choices: Vec<Vec<usize>>,
}

impl ExtensionFamily {
    pub fn new(base: &Hypergraph, s: usize, t: usize) -> Result<Self> {
        if t == 0 || s < t {
            return Err(Error::InvalidParameter(format!(
                "extension needs s >= t >= 1 (got s={s}, t={t})"
            )));
        }
        let k = base.k();
        let a_sets = colex_subsets(base.n(), k - 1);
        let r = binomial(a_sets.len(), s);
        if r == 0 {
            return Err(Error::InvalidParameter(format!(
                "no s-subsets: |A| = {} < s = {s}",
                a_sets.len()
            )));
        }
        if r > EXTENSION_R_LIMIT {
            return Err(Error::SizeGuard {
                what: "extension index set r",
                size: r,
                limit: EXTENSION_R_LIMIT,
            });
        }
        let t_sets = colex_subsets(a_sets.len(), s);
        let choices = colex_subsets(s, t);
        Ok(ExtensionFamily {
            base: base.clone(),
            s,
            t,
            a_sets,
            t_sets,
            choices,
        })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `A(F)`, colex order.
    pub fn a_sets(&self) -> &[Vec<usize>] {
        &self.a_sets
    }

    /// `T(F)` as index sets into [`Self::a_sets`].
    pub fn t_sets(&self) -> &[Vec<usize>] {
        &self.t_sets
    }

    pub fn r(&self) -> usize {
        self.t_sets.len()
    }

    /// `C(s,t)^r`, saturating.
    pub fn size(&self) -> u128 {
        let radix = self.choices.len() as u128;
        (0..self.r())
            .try_fold(1u128, |acc, _| acc.checked_mul(radix))
            .unwrap_or(u128::MAX)
    }

    /// The `P`-vector with mixed-radix index `index` (first coordinate most
    /// significant).
    pub fn spec_at(&self, index: u128) -> Result<ExtensionSpec> {
        if index >= self.size() {
            return Err(Error::InvalidParameter(format!(
                "member index {index} out of range (family size {})",
                self.size()
            )));
        }
        let radix = self.choices.len() as u128;
        let mut digits = vec![0usize; self.r()];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % radix) as usize;
            rest /= radix;
        }
        let p = digits
            .iter()
            .zip(&self.t_sets)
            .map(|(&d, ti)| self.choices[d].iter().map(|&pos| ti[pos]).collect())
            .collect();
        Ok(ExtensionSpec {
            family: self.clone(),
            p,
        })
    }

    /// Builds a spec from explicit `P_i` (index sets into `A`).
    pub fn spec(&self, p: Vec<Vec<usize>>) -> Result<ExtensionSpec> {
        if p.len() != self.r() {
            return Err(Error::InvalidParameter(format!(
                "P has {} entries, r = {}",
                p.len(),
                self.r()
            )));
        }
        let mut normalised = Vec::with_capacity(p.len());
        for (i, mut pi) in p.into_iter().enumerate() {
            pi.sort_unstable();
            pi.dedup();
            if pi.len() != self.t {
                return Err(Error::InvalidParameter(format!(
                    "|P_{}| = {}, expected t = {}",
                    i + 1,
                    pi.len(),
                    self.t
                )));
            }
            if !crate::combinat::is_subset(&pi, &self.t_sets[i]) {
                return Err(Error::InvalidParameter(format!(
                    "P_{} = {:?} is not inside T_{} = {:?}",
                    i + 1,
                    pi,
                    i + 1,
                    self.t_sets[i]
                )));
            }
            normalised.push(pi);
        }
        Ok(ExtensionSpec {
            family: self.clone(),
            p: normalised,
        })
    }

    /// Index of a (k−1)-subset within `A`.
    pub fn a_index(&self, set: &[usize]) -> Option<usize> {
        let mut s = set.to_vec();
        s.sort_unstable();
        (s.len() + 1 == self.base.k() && s.last().is_none_or(|&v| v < self.base.n()))
            .then(|| crate::combinat::colex_rank(&s))
    }

    /// Lazily yields members in P-order; with `dedup` only the first member
    /// of each isomorphism class.
    pub fn iter(&self, dedup: bool, allow_large: bool) -> Result<FamilyIter> {
        let size = self.size();
        if size > FAMILY_SIZE_LIMIT && !allow_large {
            return Err(Error::SizeGuard {
                what: "extension family C(s,t)^r",
                size,
                limit: FAMILY_SIZE_LIMIT,
            });
        }
        Ok(FamilyIter {
            family: self.clone(),
            next: 0,
            size,
            reps: dedup.then(Vec::new),
        })
    }
}

pub struct FamilyIter {
    family: ExtensionFamily,
    next: u128,
    size: u128,
    reps: Option<Vec<Hypergraph>>,
}

impl Iterator for FamilyIter {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        while self.next < self.size {
            let member = self
                .family
                .spec_at(self.next)
                .and_then(|s| extension_member(&s))
                .expect("index within family size");
            self.next += 1;
            match &mut self.reps {
                None => return Some(member),
                Some(reps) => {
                    let limit = member.n();
                    let seen = reps
                        .iter()
                        .any(|r| is_isomorphic_with_limit(r, &member, limit).unwrap_or(false));
                    if !seen {
                        reps.push(member.clone());
                        return Some(member);
                    }
                }
            }
        }
        None
    }
}

/// One member `F(P_1, ..., P_r)`: the family data plus a chosen `P`.
#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    family: ExtensionFamily,
    p: Vec<Vec<usize>>,
}

impl ExtensionSpec {
    pub fn family(&self) -> &ExtensionFamily {
        &self.family
    }

    /// `P_i` as index sets into `A`.
    pub fn p(&self) -> &[Vec<usize>] {
        &self.p
    }
}

/// `F(P)`: `F` plus `v_i = |V(F)|+i` joined to each `Y ∈ P_i`.
pub fn extension_member(spec: &ExtensionSpec) -> Result<Hypergraph> {
    let fam = &spec.family;
    let base = &fam.base;
    let n0 = base.n();
    let mut edges: Vec<Vec<usize>> = base.edges().to_vec();
    for (i, pi) in spec.p.iter().enumerate() {
        if pi.len() != fam.t || !crate::combinat::is_subset(pi, &fam.t_sets[i]) {
            return Err(Error::InvalidParameter(format!("P_{} is invalid", i + 1)));
        }
        for &y in pi {
            let mut e = fam.a_sets[y].clone();
            e.push(n0 + i);
            edges.push(e);
        }
    }
    edges.sort_unstable();
    Ok(Hypergraph::from_canonical(base.k(), n0 + fam.r(), edges))
}

/// Streams `F(s,t)`; see [`ExtensionFamily::iter`].
pub fn extension_family_iter(
    base: &Hypergraph,
    s: usize,
    t: usize,
    dedup: bool,
) -> Result<FamilyIter> {
    ExtensionFamily::new(base, s, t)?.iter(dedup, false)
}
