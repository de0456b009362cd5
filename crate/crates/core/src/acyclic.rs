//! Acyclic bipartite tournaments and their integer-set normal form.
//!
//! For a set `X` of positive integers, `D_X` has the odd elements as side One,
//! the even elements as side Two, and an arc `a -> b` whenever `a < b` and
//! `a`, `b` differ in parity. A bipartite tournament is acyclic exactly when it
//! has no 4-dicycle, exactly when it is bitransitive, and exactly when it is
//! isomorphic to some `D_X`.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bits, visit_cycles, BipartiteTournament, Dicycle, Digraph, Side, VertexId};

/// A strictly increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        if elements.first() == Some(&0) || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedIntegerSet);
        }
        Ok(IntegerSet(elements))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parity of each element in increasing order; `true` is odd.
    pub fn parities(&self) -> Vec<bool> {
        self.0.iter().map(|x| x % 2 == 1).collect()
    }

    /// The vertex of `D_X` carrying each element, in increasing order of elements.
    pub fn dx_order(&self) -> Vec<VertexId> {
        let (mut odd, mut even) = (0, 0);
        self.0
            .iter()
            .map(|x| {
                if x % 2 == 1 {
                    odd += 1;
                    VertexId::one(odd - 1)
                } else {
                    even += 1;
                    VertexId::two(even - 1)
                }
            })
            .collect()
    }
}

/// An isomorphism `D ≅ D_X`: `order[i]` is the vertex of `D` carrying `set[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DxForm {
    pub set: IntegerSet,
    pub order: Vec<VertexId>,
}

impl DxForm {
    /// Position of each vertex in `order`, indexed by the global vertex number of `d`.
    pub fn positions(&self, d: &BipartiteTournament) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[d.index(v)] = p;
        }
        pos
    }
}

/// Builds `D_X`. Odd elements become side One and even elements side Two,
/// each in increasing order.
pub fn build_dx(x: &IntegerSet) -> Result<BipartiteTournament> {
    let odd: Vec<u64> = x.0.iter().copied().filter(|v| v % 2 == 1).collect();
    let even: Vec<u64> = x.0.iter().copied().filter(|v| v % 2 == 0).collect();
    if odd.is_empty() || even.is_empty() {
        return Err(Error::SingleParity(x.0.clone()));
    }
    BipartiteTournament::from_fn(odd.len(), even.len(), |i, j| odd[i] < even[j])
}

/// Some 4-dicycle of `d`, if there is one.
pub fn has_4_dicycle(d: &BipartiteTournament) -> Option<Dicycle> {
    let mut found = None;
    visit_cycles(d.out_masks(), 4, |c| {
        found = Some(Dicycle::new(c.iter().map(|&i| d.vertex(i)).collect()));
        ControlFlow::Break(())
    });
    found
}

/// A directed 3-path `a b c e` of `d` without the arc `a -> e`, if there is one.
pub fn is_bitransitive(d: &BipartiteTournament) -> Option<[VertexId; 4]> {
    let out = d.out_masks();
    for a in 0..d.order() {
        for b in bits(out[a]) {
            for c in bits(out[b]) {
                let missing = out[c] & !out[a];
                // a and e lie on opposite sides, so e == a is impossible
                if let Some(e) = bits(missing).next() {
                    return Some([a, b, c, e].map(|i| d.vertex(i)));
                }
            }
        }
    }
    None
}

/// Whether `d` has no dicycle, decided by the absence of a 4-dicycle.
pub fn is_acyclic(d: &BipartiteTournament) -> bool {
    has_4_dicycle(d).is_none()
}

/// An integer set `X` with `d ≅ D_X`, or `None` when `d` has a dicycle.
///
/// Vertices are peeled off greedily: each step takes a vertex that dominates
/// every remaining vertex of the other side, preferring the side of the
/// previous pick and then the lowest index, and gives it the least integer
/// above the previous one whose parity matches its side (odd for side One).
pub fn dx_representation(d: &BipartiteTournament) -> Option<DxForm> {
    let out = d.out_masks();
    let sides = [d.side_mask(Side::One), d.side_mask(Side::Two)];
    let mut remaining = sides[0] | sides[1];
    let mut order = Vec::with_capacity(d.order());
    let mut values = Vec::with_capacity(d.order());
    let mut previous: Option<Side> = None;

    while remaining != 0 {
        let dominates = |i: usize| {
            let opposite = sides[usize::from(d.vertex(i).side == Side::One)] & remaining;
            out[i] & opposite == opposite
        };
        let mut candidates = bits(remaining).filter(|&i| dominates(i));
        let first = candidates.next()?;
        let pick = match previous {
            Some(side) if d.vertex(first).side != side => candidates
                .find(|&i| d.vertex(i).side == side)
                .unwrap_or(first),
            _ => first,
        };
        let v = d.vertex(pick);
        let parity = u64::from(v.side == Side::One);
        let floor = values.last().map_or(1, |&last: &u64| last + 1);
        let value = if floor % 2 == parity {
            floor
        } else {
            floor + 1
        };
        order.push(v);
        values.push(value);
        previous = Some(v.side);
        remaining &= !(1 << pick);
    }

    let form = DxForm {
        set: IntegerSet(values),
        order,
    };
    verify_dx(d, &form).then_some(form)
}

/// Re-derives every arc of `d` from `form` and compares.
fn verify_dx(d: &BipartiteTournament, form: &DxForm) -> bool {
    let xs = form.set.as_slice();
    let parity_ok = form
        .order
        .iter()
        .zip(xs)
        .all(|(v, x)| (x % 2 == 1) == (v.side == Side::One));
    parity_ok
        && form.order.iter().enumerate().all(|(p, &a)| {
            form.order
                .iter()
                .enumerate()
                .all(|(q, &b)| a.side == b.side || d.arc(a, b) == (xs[p] < xs[q]))
        })
}
