mod common;

use std::collections::BTreeSet;

use bitour::graph::{
    augmented_dicycles, augmented_signature_counts, dicycles_of_length, signature,
};
use bitour::{BipartiteTournament, Completion, Digraph, Signature, VertexId};
use proptest::prelude::*;

fn bipartite() -> impl Strategy<Value = BipartiteTournament> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(n1, n2)| {
            (
                Just(n1),
                Just(n2),
                proptest::collection::vec(any::<bool>(), n1 * n2),
            )
        })
        .prop_map(|(n1, n2, bits)| {
            BipartiteTournament::from_fn(n1, n2, |i, j| bits[i * n2 + j]).unwrap()
        })
}

fn completion() -> impl Strategy<Value = Completion> {
    // one bit per ordered slot of a 4x4 grid on each side
    (bipartite(), proptest::collection::vec(any::<bool>(), 32)).prop_map(|(d, bits)| {
        Completion::from_fn(d, move |a, b| {
            let grid = if a.side == bitour::Side::One { 0 } else { 16 };
            bits[grid + a.index * 4 + b.index]
        })
    })
}

/// Every cycle through vertex sets, found by trying all orderings of each subset.
fn recount_by_sets(out: &[u128], k: usize) -> usize {
    let n = out.len();
    let mut seen = BTreeSet::new();
    let mut path = Vec::with_capacity(k);
    fn extend(out: &[u128], k: usize, path: &mut Vec<usize>, seen: &mut BTreeSet<Vec<usize>>) {
        if path.len() == k {
            if out[path[k - 1]] >> path[0] & 1 == 1 {
                // rotate so the smallest vertex leads; direction is kept
                let m = (0..k).min_by_key(|&i| path[i]).unwrap();
                let mut c = path[m..].to_vec();
                c.extend_from_slice(&path[..m]);
                seen.insert(c);
            }
            return;
        }
        let last = *path.last().unwrap();
        for next in 0..out.len() {
            if out[last] >> next & 1 == 1 && !path.contains(&next) {
                path.push(next);
                extend(out, k, path, seen);
                path.pop();
            }
        }
    }
    for start in 0..n {
        path.push(start);
        extend(out, k, &mut path, &mut seen);
        path.pop();
    }
    seen.len()
}

proptest! {
    #[test]
    fn odd_dicycles_never_occur(d in bipartite()) {
        for k in (3..=d.order().min(7)).step_by(2) {
            prop_assert!(dicycles_of_length(&d, k).unwrap().is_empty());
        }
    }

    #[test]
    fn each_dicycle_listed_once(t in completion()) {
        for k in 3..=t.order().min(6) {
            let listed = dicycles_of_length(&t, k).unwrap();
            let distinct: BTreeSet<_> = listed.iter().collect();
            prop_assert_eq!(distinct.len(), listed.len());
            prop_assert_eq!(listed.len(), recount_by_sets(t.out_masks(), k));
        }
    }

    #[test]
    fn augmented_cycles_use_an_intra_arc(t in completion()) {
        for k in 3..=t.order().min(6) {
            let augmented = augmented_dicycles(&t, k, &Signature::all(k)).unwrap();
            for c in &augmented {
                prop_assert!(c.arcs().any(|(a, b)| a.side == b.side));
                prop_assert!(c.is_augmented());
                let s = signature(c, t.base()).unwrap();
                prop_assert_eq!(s.major + s.minor, k);
            }
            // cycles living entirely on cross arcs are the rest
            let all = dicycles_of_length(&t, k).unwrap();
            let cross = all.iter().filter(|c| c.arcs().all(|(a, b)| a.side != b.side)).count();
            prop_assert_eq!(augmented.len() + cross, all.len());
        }
    }

    #[test]
    fn signature_counts_add_up(t in completion()) {
        for k in 3..=t.order().min(6) {
            let counts = augmented_signature_counts(&t, k).unwrap();
            let total: usize = counts.values().sum();
            prop_assert_eq!(total, augmented_dicycles(&t, k, &Signature::all(k)).unwrap().len());
            prop_assert!(counts.keys().all(|s| s.is_valid_for(k)));
        }
    }
}

#[test]
fn alternating_four_cycles_are_not_augmented() {
    for d in common::exhaustive() {
        let t = Completion::from_rank(d.clone(), |v: VertexId| v.index);
        if t.order() < 4 {
            continue;
        }
        let augmented = augmented_dicycles(&t, 4, &Signature::all(4)).unwrap();
        for c in dicycles_of_length(&d, 4).unwrap() {
            assert!(!augmented.contains(&c), "{c} counted as augmented");
        }
    }
}
