//! Small named digraphs used throughout the tests, docs and CLI fixtures.

use crate::graph::{BipartiteTournament, Completion};

/// The single-arc bipartite tournament `u1 -> v1`.
pub fn single_arc() -> BipartiteTournament {
    BipartiteTournament::new(1, 1, &[vec![true]]).expect("valid")
}

/// The bipartite tournament `F`: `V1 = {u1, u2}`, `V2 = {v1, .., v4}`, with
/// `u1 -> {v1, v2} -> u2 -> {v3, v4} -> u1`.
pub fn graph_f() -> BipartiteTournament {
    BipartiteTournament::new(
        2,
        4,
        &[
            vec![true, true, false, false],
            vec![false, false, true, true],
        ],
    )
    .expect("valid")
}

/// A completion of [`graph_f`] with added arcs `u1 -> u2`, `v1 -> v2`,
/// `v2 -> v3`, `v4 -> v3`, `v1 -> v3`, `v2 -> v4` and `v4 -> v1`.
pub fn completion_of_f() -> Completion {
    Completion::new(
        graph_f(),
        &[(0, 1)],
        &[(0, 1), (1, 2), (3, 2), (0, 2), (1, 3), (3, 0)],
    )
    .expect("valid")
}

/// The orientation `Y3` of `K(2,2)` with parts `{u1, v1}` (side One, indices
/// 0 and 1) and `{u2, v2}` (side Two): `u2 -> u1`, `u1 -> v2`, `v1 -> u2`,
/// `v1 -> v2`.
pub fn y3() -> BipartiteTournament {
    BipartiteTournament::new(2, 2, &[vec![false, true], vec![true, true]]).expect("valid")
}

/// A bipartite tournament on `{a, b, c}` and `{w1, w2, w3}` in which `(a, b)`
/// is c-inconsistent through the chain `(a,b), (c,b), (c,a), (b,a)`. Arcs:
/// `w1 -> a`, `w2 -> a`, `b -> w2`, `b -> w3`, `w3 -> c`, `c -> w1`, and the
/// free pairs oriented `a -> w3`, `b -> w1`, `c -> w2`.
pub fn c_inconsistent() -> BipartiteTournament {
    BipartiteTournament::new(
        3,
        3,
        &[
            vec![false, false, true],
            vec![true, true, true],
            vec![true, true, false],
        ],
    )
    .expect("valid")
}
