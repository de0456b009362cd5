//! Completions with exactly one augmented 3-dicycle, and the tournament
//! families around them.
//!
//! Indices into a [`ParityPattern`] are 0-based: index `l` names the triple
//! `x[l], x[l+1], x[l+2]` of the sorted integer set.

use std::collections::BTreeSet;

use crate::acyclic::{build_dx, dx_representation, DxForm, IntegerSet};
use crate::error::{Error, Result};
use crate::graph::{BipartiteTournament, Completion, Side, Tournament, VertexId};

/// Parities of a sorted integer set, flipped if needed so that the first one
/// is odd. `true` means odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityPattern(Vec<bool>);

impl ParityPattern {
    pub fn new(mut bits: Vec<bool>) -> Self {
        if bits.first() == Some(&false) {
            bits.iter_mut().for_each(|b| *b = !*b);
        }
        ParityPattern(bits)
    }

    pub fn of_set(x: &IntegerSet) -> Self {
        Self::new(x.parities())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Starting indices of the `(a, b, a)` and `(a, a, a)` triples of a pattern.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PatternIndices {
    pub aba: BTreeSet<usize>,
    pub aaa: BTreeSet<usize>,
}

impl PatternIndices {
    pub fn is_empty(&self) -> bool {
        self.aba.is_empty() && self.aaa.is_empty()
    }

    /// Smallest index of either kind.
    pub fn first(&self) -> Option<usize> {
        self.aba.iter().chain(&self.aaa).copied().min()
    }
}

pub fn parity_pattern_indices(p: &ParityPattern) -> PatternIndices {
    let mut out = PatternIndices::default();
    for (l, w) in p.bits().windows(3).enumerate() {
        if w[0] == w[2] {
            if w[0] == w[1] {
                out.aaa.insert(l);
            } else {
                out.aba.insert(l);
            }
        }
    }
    out
}

/// The tournament on `1..=n` with every arc pointing upward except `r+2 -> r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UniCycleTournament {
    n: usize,
    r: usize,
}

impl UniCycleTournament {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if !(3..=Tournament::MAX_ORDER).contains(&n) {
            return Err(Error::TournamentOrder {
                n,
                min: 3,
                max: Tournament::MAX_ORDER,
            });
        }
        if r == 0 || r > n - 2 {
            return Err(Error::PivotOutOfRange { n, r });
        }
        Ok(UniCycleTournament { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Vertex `i` of the labelling `1..=n` is vertex `i - 1` of the result.
    pub fn build(&self) -> Tournament {
        let low = self.r - 1;
        Tournament::from_fn(self.n, |i, j| !(i == low && j == low + 2))
            .expect("order checked on construction")
    }
}

pub fn build_trn(n: usize, r: usize) -> Result<Tournament> {
    Ok(UniCycleTournament::new(n, r)?.build())
}

/// Whether `t` has exactly one dicycle.
///
/// Checks for one 3-dicycle and no 4-dicycle: a longer dicycle lies in a
/// strong component of order at least 4, and that component has a 4-dicycle.
pub fn has_unique_dicycle(t: &Tournament) -> Result<bool> {
    use crate::graph::Digraph;
    let n = t.order();
    if n < 3 {
        return Err(Error::TournamentOrder {
            n,
            min: 3,
            max: Tournament::MAX_ORDER,
        });
    }
    if t.count_dicycles(3)? != 1 {
        return Ok(false);
    }
    Ok(n < 4 || t.count_dicycles(4)? == 0)
}

/// Some same-side pair `(a, b)` with `outdeg(a) = outdeg(b) + 1`, smallest first.
pub fn outdegree_gap_pair(d: &BipartiteTournament) -> Option<(VertexId, VertexId)> {
    for side in [Side::One, Side::Two] {
        for a in d.side_vertices(side) {
            for b in d.side_vertices(side) {
                if d.out_degree(a) == d.out_degree(b) + 1 {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

/// The first `n` members of the family-`i` generating sequence:
/// `6m-5, 6m-3, 6m-2, 6m` for `i = 1` and `6m-5, 6m-4, 6m-2, 6m-1` for `i = 2`.
pub fn build_special_x(family: u8, n: usize) -> Result<IntegerSet> {
    let offsets: [u64; 4] = match family {
        1 => [5, 3, 2, 0],
        2 => [5, 4, 2, 1],
        _ => return Err(Error::UnknownFamily(family)),
    };
    let xs: Vec<u64> = (1u64..)
        .flat_map(|m| offsets.map(|o| 6 * m - o))
        .take(n)
        .collect();
    if !(xs.iter().any(|x| x % 2 == 1) && xs.iter().any(|x| x % 2 == 0)) {
        return Err(Error::SingleParity(xs));
    }
    IntegerSet::new(xs)
}

/// The family `i` with `d ≅ D_{X^i_n}`, if any. A family member whose set has a
/// single parity has no bipartite tournament and never matches.
pub fn is_special(d: &BipartiteTournament) -> Option<u8> {
    let form = dx_representation(d)?;
    let pattern = ParityPattern::of_set(&form.set);
    if !parity_pattern_indices(&pattern).is_empty() {
        return None;
    }
    [1, 2].into_iter().find(|&i| {
        build_special_x(i, pattern.len()).is_ok_and(|x| ParityPattern::of_set(&x) == pattern)
    })
}

/// A completion with exactly one augmented 3-dicycle, which has signature (2,1),
/// or `None` if no completion has exactly one augmented (2,1)-dicycle.
pub fn one_aug_21(d: &BipartiteTournament) -> Option<Completion> {
    let form = dx_representation(d)?;
    let l = *parity_pattern_indices(&ParityPattern::of_set(&form.set))
        .aba
        .first()?;
    Some(reversed_triple_completion(d, &form, l))
}

/// A completion with exactly one augmented 3-dicycle, or `None` if none exists.
pub fn one_aug_3(d: &BipartiteTournament) -> Option<Completion> {
    let form = dx_representation(d)?;
    let l = parity_pattern_indices(&ParityPattern::of_set(&form.set)).first()?;
    Some(reversed_triple_completion(d, &form, l))
}

/// Orients each intra pair along the dx ordering, except the pair at
/// positions `l` and `l + 2`. The whole tournament is then `T^{l+1}_n`.
fn reversed_triple_completion(d: &BipartiteTournament, form: &DxForm, l: usize) -> Completion {
    let pos = form.positions(d);
    Completion::from_fn(d.clone(), |a, b| {
        let (pa, pb) = (pos[d.index(a)], pos[d.index(b)]);
        let pair = (pa.min(pb), pa.max(pb));
        (pa < pb) != (pair == (l, l + 2))
    })
}

/// Orients each side transitively: `order1[p]` beats `order1[q]` whenever `p < q`.
/// Orders list side indices.
pub fn transitive_completion(
    d: &BipartiteTournament,
    order1: &[usize],
    order2: &[usize],
) -> Result<Completion> {
    let rank1 =
        inverse_permutation(order1, d.n1()).ok_or(Error::MalformedPermutation(Side::One))?;
    let rank2 =
        inverse_permutation(order2, d.n2()).ok_or(Error::MalformedPermutation(Side::Two))?;
    Ok(Completion::from_rank(d.clone(), |v| match v.side {
        Side::One => rank1[v.index],
        Side::Two => rank2[v.index],
    }))
}

/// For acyclic `d`, the completion following the dx ordering on both sides;
/// it has no dicycle at all.
pub fn acyclic_completion(d: &BipartiteTournament) -> Option<Completion> {
    let form = dx_representation(d)?;
    let pos = form.positions(d);
    Some(Completion::from_rank(d.clone(), |v| pos[d.index(v)]))
}

fn inverse_permutation(order: &[usize], n: usize) -> Option<Vec<usize>> {
    if order.len() != n {
        return None;
    }
    let mut rank = vec![usize::MAX; n];
    for (p, &i) in order.iter().enumerate() {
        if i >= n || rank[i] != usize::MAX {
            return None;
        }
        rank[i] = p;
    }
    Some(rank)
}

/// `D^i_n`, the bipartite tournament of the family-`i` set of size `n`.
pub fn special_tournament(family: u8, n: usize) -> Result<BipartiteTournament> {
    build_dx(&build_special_x(family, n)?)
}
