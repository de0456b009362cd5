mod common;

use bitour::acyclic::{dx_representation, is_acyclic};
use bitour::oracle::{brute_decide, brute_dicycle_count, enumerate_completions, recount};
use bitour::tri::{
    acyclic_completion, build_trn, has_unique_dicycle, is_special, one_aug_21, one_aug_3,
    outdegree_gap_pair, parity_pattern_indices, special_tournament, ParityPattern,
};
use bitour::{Digraph, Signature, Tournament};
use itertools::Itertools;

const S21: Signature = Signature::new(2, 1);

#[test]
fn zero_two_one_cycles_iff_acyclic() {
    for d in common::exhaustive() {
        let oracle = brute_decide(&d, 0, 3, &[S21]).unwrap();
        assert_eq!(oracle, is_acyclic(&d), "{d:?}");
        assert_eq!(acyclic_completion(&d).is_some(), oracle, "{d:?}");
    }
}

#[test]
fn cyclic_instances_force_two_cycles() {
    for d in common::exhaustive_up_to((2, 3)).filter(|d| !is_acyclic(d)) {
        for t in enumerate_completions(&d).unwrap() {
            assert!(recount(&t, &[3]).unwrap()[&(3, S21)] >= 2, "{d:?}");
        }
    }
}

#[test]
fn three_conditions_agree_on_acyclic_instances() {
    for d in common::exhaustive().filter(is_acyclic) {
        let gap = outdegree_gap_pair(&d).is_some();
        let form = dx_representation(&d).unwrap();
        let aba = !parity_pattern_indices(&ParityPattern::of_set(&form.set))
            .aba
            .is_empty();
        let oracle = brute_decide(&d, 1, 3, &[S21]).unwrap();
        assert_eq!(gap, aba, "{d:?}");
        assert_eq!(aba, oracle, "{d:?}");
        assert_eq!(one_aug_21(&d).is_some(), oracle, "{d:?}");
    }
}

#[test]
fn single_three_cycle_decisions() {
    for d in common::exhaustive() {
        let oracle = brute_decide(&d, 1, 3, &Signature::all(3)).unwrap();
        assert_eq!(one_aug_3(&d).is_some(), oracle, "{d:?}");
        // acyclic instances without a witness are exactly the special ones
        if is_acyclic(&d) && d.order() >= 3 {
            assert_eq!(is_special(&d).is_some(), !oracle, "{d:?}");
        }
    }
}

#[test]
fn witnesses_hit_their_targets() {
    for d in common::exhaustive().chain(common::random(3, 4, 300, common::SEED)) {
        if let Some(t) = one_aug_21(&d) {
            let c = recount(&t, &[3]).unwrap();
            assert_eq!(c[&(3, S21)], 1, "{d:?}");
            assert_eq!(c[&(3, Signature::new(3, 0))], 0, "{d:?}");
        }
        if let Some(t) = one_aug_3(&d) {
            let c = recount(&t, &[3]).unwrap();
            assert_eq!(c[&(3, S21)] + c[&(3, Signature::new(3, 0))], 1, "{d:?}");
        }
    }
}

/// Whether `t` is `build_trn(n, r)` for some `r` after relabelling.
fn is_some_trn(t: &Tournament) -> bool {
    let n = t.order();
    let models: Vec<Tournament> = (1..=n - 2).map(|r| build_trn(n, r).unwrap()).collect();
    (0..n).permutations(n).any(|p| {
        models
            .iter()
            .any(|m| (0..n).all(|i| (0..n).all(|j| i == j || m.arc(i, j) == t.arc(p[i], p[j]))))
    })
}

#[test]
fn unique_dicycle_means_trn() {
    for n in 3..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        for mask in 0u32..1 << pairs.len() {
            let t = Tournament::from_fn(n, |i, j| {
                let p = pairs.iter().position(|&q| q == (i, j)).unwrap();
                mask >> p & 1 == 0
            })
            .unwrap();
            let unique = has_unique_dicycle(&t).unwrap();
            assert_eq!(
                unique,
                brute_dicycle_count(&t).unwrap() == 1,
                "n={n} mask={mask:#x}"
            );
            if unique {
                assert!(is_some_trn(&t), "n={n} mask={mask:#x}");
            }
        }
    }
}

#[test]
fn special_triples_have_paths() {
    for family in [1, 2] {
        for n in 2..=10 {
            let Ok(d) = special_tournament(family, n) else {
                continue;
            };
            let form = dx_representation(&d).unwrap();
            let through = |x: usize, y: usize| {
                let (a, b) = (form.order[x], form.order[y]);
                d.vertices().any(|w| d.arc(a, w) && d.arc(w, b))
            };
            for (x, y, z) in (0..form.order.len()).tuple_combinations() {
                let side = form.order[x].side;
                if form.order[y].side != side || form.order[z].side != side {
                    continue;
                }
                assert!(through(x, z), "family {family}, n {n}, {x} {z}");
                assert!(
                    through(x, y) || through(y, z),
                    "family {family}, n {n}, {x} {y} {z}"
                );
            }
        }
    }
}
