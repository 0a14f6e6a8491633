mod common;

use common::{graph3, permutation};
use khg_core::checkers::{
    colour, contains_extension_member, find_embedding, verify_containment, ColourBackend,
    SearchLimits, SearchOutcome,
};
use khg_core::constructions::ExtensionFamily;
use khg_core::hypercore::{verify_colouring, verify_embedding};
use khg_core::satgate::Backend;
use khg_core::Hypergraph;
use proptest::prelude::*;

fn small_patterns() -> Vec<Hypergraph> {
    let k4 = Hypergraph::complete(3, 4).unwrap();
    vec![
        Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap(),
        Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap(),
        Hypergraph::new(3, 5, [[0, 1, 2], [2, 3, 4]]).unwrap(),
        k4.without_edge(&[1, 2, 3]),
        k4,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn embedding_invariant_under_relabelling(
        (h, perm) in graph3(5, 9, 0.5).prop_flat_map(|h| { let n = h.n(); (Just(h), permutation(n)) })
    ) {
        let g = h.relabel(&perm).unwrap();
        for f in small_patterns() {
            let a = find_embedding(&h, &f).unwrap();
            let b = find_embedding(&g, &f).unwrap();
            prop_assert_eq!(a.is_found(), b.is_found());
            if let SearchOutcome::Found(e) = b {
                prop_assert!(verify_embedding(&g, &f, e.map()).is_ok());
            }
        }
    }

    #[test]
    fn colouring_monotone_and_backends_agree(h in graph3(3, 10, 0.5)) {
        let sat = ColourBackend::Sat(Backend::internal());
        let mut prev = false;
        for r in 1..=4 {
            let brute = colour(&h, r, &ColourBackend::Brute).unwrap();
            let by_sat = colour(&h, r, &sat).unwrap();
            prop_assert_eq!(brute.is_colourable(), by_sat.is_colourable());
            prop_assert!(!prev || brute.is_colourable());
            prev = brute.is_colourable();
            for out in [brute, by_sat] {
                if let khg_core::checkers::ColourOutcome::Colourable(c) = out {
                    prop_assert!(verify_colouring(&h, &c).is_ok());
                }
            }
        }
    }

    #[test]
    fn extension_containment_matches_member_search(host in graph3(6, 9, 0.7)) {
        let triple = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        for (s, t) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
            let fam = ExtensionFamily::new(&triple, s, t).unwrap();
            prop_assert!(fam.size() <= 64);
            let by_members = fam
                .iter(false, false)
                .unwrap()
                .any(|m| find_embedding(&host, &m).unwrap().is_found());
            let got = contains_extension_member(&host, &triple, s, t, &SearchLimits::default()).unwrap();
            prop_assert_eq!(got.is_found(), by_members, "s={} t={}", s, t);
            if let SearchOutcome::Found(cert) = got {
                prop_assert!(verify_containment(&host, &triple, s, t, &cert).is_ok());
            }
        }
    }
}
