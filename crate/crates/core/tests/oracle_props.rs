mod common;

use bitour::oracle::{brute_inconsistent, census, enumerate_completions};
use bitour::quad::{inconsistent_set, SpecMode};
use bitour::{BipartiteTournament, Side, VertexId};
use proptest::prelude::*;

fn relabelled(d: &BipartiteTournament, p1: &[usize], p2: &[usize]) -> BipartiteTournament {
    BipartiteTournament::from_fn(d.n1(), d.n2(), |i, j| {
        d.arc(VertexId::one(p1[i]), VertexId::two(p2[j]))
    })
    .unwrap()
}

/// Census rows sorted, so that completion order no longer matters.
fn census_profile(d: &BipartiteTournament) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = census(d, &[3, 4])
        .unwrap()
        .into_iter()
        .map(|e| e.counts.into_values().collect())
        .collect();
    rows.sort();
    rows
}

fn instance_with_permutations(
) -> impl Strategy<Value = (BipartiteTournament, Vec<usize>, Vec<usize>)> {
    (1usize..=3, 1usize..=4).prop_flat_map(|(n1, n2)| {
        (
            proptest::collection::vec(any::<bool>(), n1 * n2),
            Just((0..n1).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..n2).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, p1, p2)| {
                let d = BipartiteTournament::from_fn(n1, n2, |i, j| bits[i * n2 + j]).unwrap();
                (d, p1, p2)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn census_ignores_labels((d, p1, p2) in instance_with_permutations()) {
        let e = relabelled(&d, &p1, &p2);
        prop_assert_eq!(census_profile(&d), census_profile(&e));
    }
}

#[test]
fn brute_closure_matches_reachability() {
    for d in common::exhaustive() {
        for mode in SpecMode::ALL {
            assert_eq!(
                brute_inconsistent(&d, mode).unwrap(),
                inconsistent_set(&d, mode),
                "{d:?} {mode:?}"
            );
        }
    }
}

#[test]
fn completion_count_is_a_power_of_two() {
    for d in common::exhaustive() {
        let pairs = |n: usize| n * (n - 1) / 2;
        let expected = 1usize << (pairs(d.part_size(Side::One)) + pairs(d.part_size(Side::Two)));
        assert_eq!(enumerate_completions(&d).unwrap().len(), expected);
    }
}
