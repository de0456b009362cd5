#![allow(dead_code)]

use bitour::oracle::{all_bipartite, random_bipartite, seeded_rng};
use bitour::BipartiteTournament;

/// Shapes swept exhaustively.
pub const SHAPES: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)];

/// Seed for the random instance samples.
pub const SEED: u64 = 0x5eed_b170;

pub fn exhaustive() -> impl Iterator<Item = BipartiteTournament> {
    SHAPES
        .into_iter()
        .flat_map(|(n1, n2)| all_bipartite(n1, n2))
}

pub fn exhaustive_up_to(limit: (usize, usize)) -> impl Iterator<Item = BipartiteTournament> {
    SHAPES
        .into_iter()
        .filter(move |&(n1, n2)| n1 <= limit.0 && n2 <= limit.1)
        .flat_map(|(n1, n2)| all_bipartite(n1, n2))
}

pub fn random(n1: usize, n2: usize, count: usize, seed: u64) -> Vec<BipartiteTournament> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| random_bipartite(n1, n2, &mut rng).expect("nonempty shape"))
        .collect()
}
