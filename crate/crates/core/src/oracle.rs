//! Brute-force ground truth for small instances.
//!
//! Everything here works straight from the definitions: it enumerates every
//! completion and counts cycles, or searches specifies chains step by step.
//! Nothing from [`crate::tri`] or [`crate::quad`] is used.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg32;

use crate::error::{Error, Result};
use crate::graph::{
    augmented_signature_counts, check_cycle_len, check_signatures, BipartiteTournament, Completion,
    Digraph, Side, Signature, Tournament, VertexId, MAX_CYCLE_LEN,
};
use crate::quad::{OrderedPair, SpecMode};

/// Largest number of intra pairs [`enumerate_completions`] accepts.
pub const MAX_INTRA_PAIRS: usize = 24;

/// Largest pair count [`brute_inconsistent`] accepts.
pub const MAX_CHAIN_NODES: usize = 200;

/// Largest tournament order [`brute_dicycle_count`] accepts.
pub const MAX_BRUTE_ORDER: usize = 8;

/// Every completion of a bipartite tournament.
///
/// Intra pairs are listed side One first, each side in lexicographic index
/// order; bit `i` of the completion index reverses pair `i` (higher index to
/// lower).
#[derive(Clone, Debug)]
pub struct Completions {
    base: BipartiteTournament,
    pairs: Vec<(VertexId, VertexId)>,
    slots: BTreeMap<(VertexId, VertexId), usize>,
    next: u64,
    end: u64,
}

impl Completions {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// The completion with the given index.
    pub fn get(&self, index: u64) -> Completion {
        Completion::from_fn(self.base.clone(), |a, b| {
            index >> self.slots[&(a, b)] & 1 == 0
        })
    }
}

impl Iterator for Completions {
    type Item = Completion;

    fn next(&mut self) -> Option<Completion> {
        if self.next == self.end {
            return None;
        }
        let c = self.get(self.next);
        self.next += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Completions {}

pub fn enumerate_completions(d: &BipartiteTournament) -> Result<Completions> {
    let mut pairs = Vec::new();
    for side in [Side::One, Side::Two] {
        for a in d.side_vertices(side) {
            for b in d.side_vertices(side).filter(|b| b.index > a.index) {
                pairs.push((a, b));
            }
        }
    }
    if pairs.len() > MAX_INTRA_PAIRS {
        return Err(Error::EnumerationCap {
            pairs: pairs.len(),
            max: MAX_INTRA_PAIRS,
        });
    }
    Ok(Completions {
        base: d.clone(),
        end: 1 << pairs.len(),
        slots: pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect(),
        pairs,
        next: 0,
    })
}

/// Augmented-dicycle counts of one completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub index: u64,
    /// One entry per requested length and legal signature, zeros included.
    pub counts: BTreeMap<(usize, Signature), usize>,
}

impl CensusEntry {
    pub fn count(&self, k: usize, sig: Signature) -> usize {
        self.counts.get(&(k, sig)).copied().unwrap_or(0)
    }

    /// Total over the given signatures at length `k`.
    pub fn total(&self, k: usize, sigs: &[Signature]) -> usize {
        sigs.iter().map(|&s| self.count(k, s)).sum()
    }
}

/// Census entries in completion-index order, computed lazily.
pub fn census_iter<'a>(
    d: &BipartiteTournament,
    ks: &'a [usize],
) -> Result<impl Iterator<Item = (Completion, CensusEntry)> + 'a> {
    for &k in ks {
        check_cycle_len(k, MAX_CYCLE_LEN)?;
    }
    let completions = enumerate_completions(d)?;
    Ok(completions.enumerate().map(move |(index, t)| {
        let counts = recount(&t, ks).expect("lengths checked");
        let entry = CensusEntry {
            index: index as u64,
            counts,
        };
        (t, entry)
    }))
}

pub fn census(d: &BipartiteTournament, ks: &[usize]) -> Result<Vec<CensusEntry>> {
    Ok(census_iter(d, ks)?.map(|(_, e)| e).collect())
}

/// Counts for one given completion, keyed as in [`CensusEntry`].
pub fn recount(t: &Completion, ks: &[usize]) -> Result<BTreeMap<(usize, Signature), usize>> {
    let mut counts = BTreeMap::new();
    for &k in ks {
        let found = augmented_signature_counts(t, k)?;
        for sig in Signature::all(k) {
            counts.insert((k, sig), found.get(&sig).copied().unwrap_or(0));
        }
    }
    Ok(counts)
}

/// "Some completion has exactly `t` augmented `k`-dicycles with signature in `sigs`."
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Target {
    pub t: usize,
    pub k: usize,
    pub sigs: Vec<Signature>,
}

impl Target {
    pub fn new(t: usize, k: usize, sigs: &[Signature]) -> Self {
        Target {
            t,
            k,
            sigs: sigs.to_vec(),
        }
    }
}

/// Decides several targets in one pass over the completions. Each answer comes
/// with the index of the first completion meeting it.
pub fn brute_decide_many(d: &BipartiteTournament, targets: &[Target]) -> Result<Vec<Option<u64>>> {
    for target in targets {
        check_signatures(target.k, &target.sigs)?;
    }
    let ks: BTreeSet<usize> = targets.iter().map(|t| t.k).collect();
    let ks: Vec<usize> = ks.into_iter().collect();
    let mut answers = vec![None; targets.len()];
    for (_, entry) in census_iter(d, &ks)? {
        for (answer, target) in answers.iter_mut().zip(targets) {
            if answer.is_none() && entry.total(target.k, &target.sigs) == target.t {
                *answer = Some(entry.index);
            }
        }
        if answers.iter().all(Option::is_some) {
            break;
        }
    }
    Ok(answers)
}

pub fn brute_decide(
    d: &BipartiteTournament,
    t: usize,
    k: usize,
    sigs: &[Signature],
) -> Result<bool> {
    Ok(brute_decide_many(d, &[Target::new(t, k, sigs)])?[0].is_some())
}

/// Vertices at distance exactly 2 from `a`, by breadth-first search.
fn distance_two(d: &BipartiteTournament, a: VertexId) -> BTreeSet<VertexId> {
    let mut dist = BTreeMap::from([(a, 0usize)]);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[&x];
        if dx == 2 {
            continue;
        }
        for y in d.out_neighbours(x) {
            dist.entry(y).or_insert_with(|| {
                queue.push_back(y);
                dx + 1
            });
        }
    }
    dist.into_iter()
        .filter(|&(_, k)| k == 2)
        .map(|(v, _)| v)
        .collect()
}

/// `(u1, v1)` specifies `(u2, v2)` under `mode`, read off the definitions.
fn literal_specifies(
    d: &BipartiteTournament,
    dist2: &BTreeMap<VertexId, BTreeSet<VertexId>>,
    mode: SpecMode,
    (u1, v1): (VertexId, VertexId),
    (u2, v2): (VertexId, VertexId),
) -> bool {
    let d_rel = d.arc(u2, u1) && d.arc(v1, v2);
    let c_rel = u1.side == u2.side
        && ((v1 == v2 && dist2[&u2].contains(&u1)) || (u1 == u2 && dist2[&v1].contains(&v2)));
    match mode {
        SpecMode::DOnly => d_rel,
        SpecMode::COnly => c_rel,
        SpecMode::Both => d_rel || c_rel,
    }
}

/// Pairs `p1` admitting a chain `p1, p2, ..., p(k+1)` with `k >= 2`, each pair
/// specifying the next and `p(k+1)` the reverse of some `pl` with `l <= k - 1`.
/// Pairs may repeat along the chain; chains are searched up to `2N` steps for
/// `N` pairs.
pub fn brute_inconsistent(
    d: &BipartiteTournament,
    mode: SpecMode,
) -> Result<BTreeSet<OrderedPair>> {
    let mut nodes = Vec::new();
    for a in d.vertices() {
        for b in d.side_vertices(a.side).filter(|&b| b != a) {
            nodes.push((a, b));
        }
    }
    let n = nodes.len();
    if n > MAX_CHAIN_NODES {
        return Err(Error::NodeCap {
            nodes: n,
            max: MAX_CHAIN_NODES,
        });
    }
    let dist2: BTreeMap<_, _> = d.vertices().map(|v| (v, distance_two(d, v))).collect();
    let succ: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&p| {
            (0..n)
                .filter(|&q| literal_specifies(d, &dist2, mode, p, nodes[q]))
                .collect()
        })
        .collect();
    let index: BTreeMap<_, _> = nodes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let reverse: Vec<usize> = nodes.iter().map(|&(a, b)| index[&(b, a)]).collect();

    // state: (current pair, marked pair + 1 or 0 before marking, steps since mark capped at 2)
    let bound = 2 * n;
    let mut found = BTreeSet::new();
    for (start, &(a, b)) in nodes.iter().enumerate() {
        let mut seen = BTreeSet::new();
        let mut layer = vec![(start, 0usize, 0u8)];
        seen.insert(layer[0]);
        let mut hit = false;
        'search: for _ in 0..=bound {
            let mut next = Vec::new();
            for &(cur, mark, steps) in &layer {
                if mark == 0 {
                    let marked = (cur, cur + 1, 0);
                    if seen.insert(marked) {
                        next_expand(&succ, marked, &mut next, &mut seen);
                    }
                } else if steps == 2 && cur == reverse[mark - 1] {
                    hit = true;
                    break 'search;
                }
                next_expand(&succ, (cur, mark, steps), &mut next, &mut seen);
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        if hit {
            found.insert(OrderedPair::new(a, b).expect("same-side distinct pair"));
        }
    }
    Ok(found)
}

fn next_expand(
    succ: &[Vec<usize>],
    (cur, mark, steps): (usize, usize, u8),
    next: &mut Vec<(usize, usize, u8)>,
    seen: &mut BTreeSet<(usize, usize, u8)>,
) {
    let steps = if mark == 0 { 0 } else { (steps + 1).min(2) };
    for &y in &succ[cur] {
        let state = (y, mark, steps);
        if seen.insert(state) {
            next.push(state);
        }
    }
}

/// Number of dicycles of every length in `t`, by depth-first search over
/// simple paths that start at their smallest vertex.
pub fn brute_dicycle_count(t: &Tournament) -> Result<usize> {
    let n = t.order();
    if n > MAX_BRUTE_ORDER {
        return Err(Error::TournamentOrder {
            n,
            min: 0,
            max: MAX_BRUTE_ORDER,
        });
    }
    fn walk(
        t: &Tournament,
        start: usize,
        cur: usize,
        len: usize,
        on_path: &mut Vec<bool>,
    ) -> usize {
        let mut count = 0;
        if len >= 3 && t.arc(cur, start) {
            count += 1;
        }
        for next in start + 1..on_path.len() {
            if !on_path[next] && t.arc(cur, next) {
                on_path[next] = true;
                count += walk(t, start, next, len + 1, on_path);
                on_path[next] = false;
            }
        }
        count
    }
    let mut total = 0;
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        total += walk(t, start, start, 1, &mut on_path);
    }
    Ok(total)
}

/// Every bipartite tournament of the given shape; bit `i * n2 + j` of the
/// counter orients `u_i -> v_j`.
pub fn all_bipartite(n1: usize, n2: usize) -> impl Iterator<Item = BipartiteTournament> {
    let cells = n1 * n2;
    assert!(cells < 64, "{n1}x{n2} is too large to sweep");
    (0u64..1 << cells).map(move |m| {
        BipartiteTournament::from_fn(n1, n2, |i, j| m >> (i * n2 + j) & 1 == 1)
            .expect("sweep shapes are nonempty")
    })
}

/// Orients each cross pair with probability 1/2.
pub fn random_bipartite(n1: usize, n2: usize, rng: &mut Pcg32) -> Result<BipartiteTournament> {
    let cells: Vec<bool> = (0..n1 * n2).map(|_| rng.random::<bool>()).collect();
    BipartiteTournament::from_fn(n1, n2, |i, j| cells[i * n2 + j])
}

pub fn seeded_rng(seed: u64) -> Pcg32 {
    Pcg32::seed_from_u64(seed)
}
