use khg_core::combinat::{binomial, lex_subsets};
use khg_core::constructions::{
    extension_member, gen_fr, gen_gabn, gen_ktt, gen_rpartite, ktt_edge_count, near_equal_parts,
    ExtensionFamily, FrParams, GabnParams, FR_VERTEX_LIMIT,
};
use khg_core::hypercore::{min_codegree, neighbourhood};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gabn_structure((a, b, n) in (2usize..=5).prop_flat_map(|a| (Just(a), 1..a, a..=13))) {
        let p = GabnParams::new(a, b, n, 3).unwrap();
        let g = gen_gabn(&p).unwrap();
        let parts = p.parts();
        for e in g.edges() {
            prop_assert!(!e.iter().all(|&v| parts[v] == parts[e[0]]));
        }
        // A pair inside part i sees every vertex of the forward parts.
        for pair in lex_subsets(n, 2) {
            if parts[pair[0]] != parts[pair[1]] {
                continue;
            }
            let nb = neighbourhood(&g, &pair).unwrap();
            for j in p.forward_parts(parts[pair[0]]) {
                for v in (0..n).filter(|&v| parts[v] == j) {
                    prop_assert!(nb.contains(&v));
                }
            }
        }
        let delta = min_codegree(&g).unwrap() as f64;
        prop_assert!(delta >= p.codegree_lower_bound());
    }

    #[test]
    fn rpartite_structure((n, r) in (3usize..=14).prop_flat_map(|n| (Just(n), 1..=n.min(5)))) {
        let g = gen_rpartite(n, r, 3).unwrap();
        let parts = near_equal_parts(n, r);
        let largest = (0..r).map(|p| parts.iter().filter(|&&q| q == p).count()).max().unwrap();
        for e in lex_subsets(n, 3) {
            let meets = {
                let mut ps: Vec<usize> = e.iter().map(|&v| parts[v]).collect();
                ps.dedup();
                ps.len()
            };
            prop_assert_eq!(g.has_edge(&e), meets >= 2);
        }
        let expected = if r == 1 { 0 } else { n - largest.max(2) };
        prop_assert_eq!(min_codegree(&g).unwrap(), expected);
    }
}

#[test]
fn fr_recurrences() {
    for k in 3..=5 {
        for r in 1..=3 {
            let p = FrParams::new(k, r).unwrap();
            if p.vertex_count() > FR_VERTEX_LIMIT / 10 {
                continue;
            }
            let g = gen_fr(k, r).unwrap();
            let (mut v, mut e) = (k as u128, 1u128);
            for level in 2..=r {
                let core = level * (k - 2) + 1;
                let m = binomial(core, k - 1);
                let nv = core as u128 + m * v;
                e = m * (v + e);
                v = nv;
            }
            assert_eq!(
                (g.n() as u128, g.edge_count() as u128),
                (v, e),
                "k={k} r={r}"
            );
        }
    }
}

#[test]
fn ktt_counts() {
    for k in 3..=5 {
        for t in 1..=8 {
            let g = gen_ktt(t, k).unwrap();
            let expected = 2 * t as u128 * binomial(t, k - 1);
            assert_eq!(g.edge_count() as u128, expected, "t={t} k={k}");
            assert_eq!(ktt_edge_count(t, k), expected);
            assert_eq!(g.n(), 2 * t);
        }
    }
}

#[test]
fn extension_member_sizes() {
    let bases = [
        khg_core::Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap(),
        khg_core::Hypergraph::complete(3, 4).unwrap(),
    ];
    for base in &bases {
        for (s, t) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let Ok(fam) = ExtensionFamily::new(base, s, t) else {
                continue;
            };
            let step = (fam.size() / 7).max(1);
            let mut i = 0;
            while i < fam.size() {
                let m = extension_member(&fam.spec_at(i).unwrap()).unwrap();
                assert_eq!(m.edge_count(), base.edge_count() + fam.r() * t);
                assert_eq!(m.n(), base.n() + fam.r());
                i += step;
            }
        }
    }
}
