//! Maximum bipartite matching by augmenting paths.

/// Maximum matching between `left` vertices and `0..right`.
///
/// `adj[l]` lists the right vertices adjacent to `l`; they are tried in the
/// given order, so the result is deterministic. Returns the partner of each
/// left vertex.
pub fn maximum_matching(right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut partner: Vec<Option<usize>> = vec![None; adj.len()];
    let mut stamp = vec![usize::MAX; right];
    for l in 0..adj.len() {
        augment(l, l, adj, &mut owner, &mut stamp);
    }
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = *o {
            partner[l] = Some(r);
        }
    }
    partner
}

fn augment(
    l: usize,
    round: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    stamp: &mut [usize],
) -> bool {
    for &r in &adj[l] {
        if stamp[r] == round {
            continue;
        }
        stamp[r] = round;
        if owner[r].is_none_or(|other| augment(other, round, adj, owner, stamp)) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

/// Whether `partner` is a matching saturating every left vertex of `adj`.
pub fn is_perfect_left_matching(
    right: usize,
    adj: &[Vec<usize>],
    partner: &[Option<usize>],
) -> bool {
    let mut used = vec![false; right];
    partner.len() == adj.len()
        && partner.iter().enumerate().all(|(l, p)| match *p {
            Some(r) if r < right && adj[l].contains(&r) && !used[r] => {
                used[r] = true;
                true
            }
            _ => false,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_max(right: usize, adj: &[Vec<usize>]) -> usize {
        fn go(l: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if l == adj.len() {
                return 0;
            }
            let mut best = go(l + 1, adj, used);
            for &r in &adj[l] {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + go(l + 1, adj, used));
                    used[r] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; right])
    }

    #[test]
    fn hall_violation() {
        let adj = vec![vec![0], vec![0], vec![0, 1]];
        let m = maximum_matching(2, &adj);
        assert_eq!(m.iter().flatten().count(), 2);
        assert!(!is_perfect_left_matching(2, &adj, &m));
    }

    #[test]
    fn needs_augmenting_path() {
        let adj = vec![vec![0, 1], vec![0]];
        let m = maximum_matching(2, &adj);
        assert_eq!(m, vec![Some(1), Some(0)]);
        assert!(is_perfect_left_matching(2, &adj, &m));
    }

    proptest! {
        #[test]
        fn matches_brute_force(bits in proptest::collection::vec(any::<u8>(), 1..7)) {
            let right = 6;
            let adj: Vec<Vec<usize>> = bits
                .iter()
                .map(|b| (0..right).filter(|r| b >> r & 1 == 1).collect())
                .collect();
            let m = maximum_matching(right, &adj);
            let size = m.iter().flatten().count();
            prop_assert_eq!(size, brute_max(right, &adj));
            let mut seen = vec![false; right];
            for (l, p) in m.iter().enumerate() {
                if let Some(r) = *p {
                    prop_assert!(adj[l].contains(&r));
                    prop_assert!(!seen[r]);
                    seen[r] = true;
                }
            }
        }
    }
}
