use khg_core::claims::oracle_families;
use khg_core::hypercore::min_codegree;
use khg_core::satgate::{
    brute_force_coex, coex_decision, coex_exact, verify_witness, Backend, SatStatus,
};
use khg_core::Hypergraph;

// co-ex(n, F) for n = 4, 5, 6, computed once by exhaustive enumeration.
const FROZEN: [(&str, [usize; 3]); 3] =
    [("triple", [0, 0, 0]), ("K4", [1, 1, 2]), ("K4-", [0, 1, 2])];

#[test]
fn brute_and_sat_agree_with_frozen_values() {
    let b = Backend::internal();
    for ((name, fam), (frozen_name, values)) in oracle_families().unwrap().into_iter().zip(FROZEN) {
        assert_eq!(name, frozen_name);
        for (n, &want) in (4..=6).zip(&values) {
            assert_eq!(
                brute_force_coex(n, 3, &fam).unwrap(),
                want,
                "{name} brute n={n}"
            );
            let r = coex_exact(n, 3, &fam, &b).unwrap();
            assert_eq!(r.value, want, "{name} sat n={n}");
            verify_witness(&r.witness, &fam, r.value).unwrap();
            assert!(min_codegree(&r.witness).unwrap() >= want);
        }
    }
}

#[test]
fn union_of_families_is_no_larger() {
    let fams = oracle_families().unwrap();
    let b = Backend::internal();
    for i in 0..fams.len() {
        for j in i + 1..fams.len() {
            let mut union = fams[i].1.clone();
            union.extend(fams[j].1.iter().cloned());
            for n in 4..=6 {
                let u = coex_exact(n, 3, &union, &b).unwrap().value;
                let a = coex_exact(n, 3, &fams[i].1, &b).unwrap().value;
                let c = coex_exact(n, 3, &fams[j].1, &b).unwrap().value;
                assert!(u <= a.min(c));
                assert_eq!(u, brute_force_coex(n, 3, &union).unwrap());
            }
        }
    }
}

#[test]
fn decisions_are_downward_closed_in_t() {
    let b = Backend::internal();
    let k4 = vec![Hypergraph::complete(3, 4).unwrap()];
    for n in 4..=7 {
        let statuses: Vec<SatStatus> = (0..=n - 1)
            .map(|t| coex_decision(n, 3, &k4, t, &b).unwrap().verdict.status)
            .collect();
        let first_unsat = statuses
            .iter()
            .position(|s| *s == SatStatus::Unsat)
            .unwrap();
        assert!(statuses[first_unsat..]
            .iter()
            .all(|s| *s == SatStatus::Unsat));
        assert!(statuses[..first_unsat].iter().all(|s| *s == SatStatus::Sat));
        assert_eq!(first_unsat - 1, coex_exact(n, 3, &k4, &b).unwrap().value);
    }
}

#[test]
fn witnesses_are_sound() {
    let b = Backend::internal();
    let k4_minus = Hypergraph::complete(3, 4).unwrap().without_edge(&[1, 2, 3]);
    for n in 5..=7 {
        for t in 0..=2 {
            let v = coex_decision(n, 3, std::slice::from_ref(&k4_minus), t, &b).unwrap();
            match v.verdict.status {
                SatStatus::Sat => {
                    let w = v.witness.expect("SAT carries a witness");
                    assert_eq!(w.n(), n);
                    verify_witness(&w, std::slice::from_ref(&k4_minus), t).unwrap();
                }
                _ => assert!(v.witness.is_none()),
            }
        }
    }
    // A witness that contains the pattern is rejected.
    assert!(verify_witness(&Hypergraph::complete(3, 5).unwrap(), &[k4_minus], 0).is_err());
}

#[test]
fn edgeless_pattern_admits_no_free_graph() {
    let b = Backend::internal();
    let empty = Hypergraph::empty(3, 3).unwrap();
    assert!(coex_exact(5, 3, &[empty], &b).is_err());
}
