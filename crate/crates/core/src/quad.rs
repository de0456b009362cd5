//! Completions with no augmented 4-dicycles of given signatures.
//!
//! Intra pairs are linked by "specifies" relations: `d` links pairs on
//! opposite sides (an augmented (2,2)-dicycle would close through them), `c`
//! links pairs on a common side ((3,1)-dicycles). A pair is inconsistent when
//! following the relation from it reaches a pair that later reaches its own
//! reverse. A completion avoiding the target cycles exists exactly when no
//! pair is inconsistent in both orientations, and [`repair`] builds one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::acyclic::dx_representation;
use crate::error::{Error, Result};
use crate::graph::{
    bits, Arc, BipartiteTournament, Completion, Digraph, Side, Signature, VertexId,
};

/// An ordered pair of distinct vertices of one partite set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPair {
    pub first: VertexId,
    pub second: VertexId,
}

impl OrderedPair {
    pub fn new(first: VertexId, second: VertexId) -> Result<Self> {
        if first.side != second.side {
            return Err(Error::NotSameSide(first, second));
        }
        if first == second {
            return Err(Error::SelfArc(first));
        }
        Ok(OrderedPair { first, second })
    }

    pub fn side(&self) -> Side {
        self.first.side
    }

    pub fn reversed(self) -> Self {
        OrderedPair {
            first: self.second,
            second: self.first,
        }
    }

    /// The arc `first -> second`.
    pub fn arc(self) -> Arc {
        (self.first, self.second)
    }

    pub fn of_arc((a, b): Arc) -> Result<Self> {
        Self::new(a, b)
    }
}

impl fmt::Display for OrderedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Which specifies relation to use, and so which augmented 4-dicycles to avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecMode {
    /// `d`-specifies; avoids (2,2)-dicycles.
    DOnly,
    /// `c`-specifies; avoids (3,1)-dicycles.
    COnly,
    /// Either relation; avoids both.
    Both,
}

impl SpecMode {
    pub const ALL: [SpecMode; 3] = [SpecMode::DOnly, SpecMode::COnly, SpecMode::Both];

    /// Signatures of the augmented 4-dicycles this mode rules out.
    pub fn signatures(self) -> Vec<Signature> {
        match self {
            SpecMode::DOnly => vec![Signature::new(2, 2)],
            SpecMode::COnly => vec![Signature::new(3, 1)],
            SpecMode::Both => vec![Signature::new(3, 1), Signature::new(2, 2)],
        }
    }

    fn uses_d(self) -> bool {
        self != SpecMode::COnly
    }

    fn uses_c(self) -> bool {
        self != SpecMode::DOnly
    }
}

/// `p` d-specifies `q`: opposite sides, `q.first -> p.first` and `p.second -> q.second`.
pub fn d_specifies(d: &BipartiteTournament, p: OrderedPair, q: OrderedPair) -> bool {
    p.side() != q.side() && d.arc(q.first, p.first) && d.arc(p.second, q.second)
}

/// `p` c-specifies `q`: one side, and either they share the second vertex and
/// `q.first` reaches `p.first` in two steps, or they share the first vertex and
/// `p.second` reaches `q.second` in two steps.
pub fn c_specifies(d: &BipartiteTournament, p: OrderedPair, q: OrderedPair) -> bool {
    if p.side() != q.side() {
        return false;
    }
    let out = d.out_masks();
    let two_step =
        |a: VertexId, b: VertexId| bits(out[d.index(a)]).any(|w| d.has_arc_index(w, d.index(b)));
    (p.second == q.second && two_step(q.first, p.first))
        || (p.first == q.first && two_step(p.second, q.second))
}

/// The specifies relation of one mode over all ordered intra pairs, with its
/// reflexive-transitive closure.
#[derive(Clone, Debug)]
pub struct PairDigraph {
    mode: SpecMode,
    nodes: Vec<OrderedPair>,
    // slot of the pair (a, b) at grid[index(a) * order + index(b)]
    grid: Vec<Option<usize>>,
    n1: usize,
    order: usize,
    succ: Vec<Vec<usize>>,
    reach: Vec<FixedBitSet>,
}

impl PairDigraph {
    pub fn mode(&self) -> SpecMode {
        self.mode
    }

    pub fn nodes(&self) -> &[OrderedPair] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    fn slot(&self, p: OrderedPair) -> Option<usize> {
        let index = |v: VertexId| match v.side {
            Side::One => (v.index < self.n1).then_some(v.index),
            Side::Two => (self.n1 + v.index < self.order).then_some(self.n1 + v.index),
        };
        self.grid[index(p.first)? * self.order + index(p.second)?]
    }

    pub fn has_edge(&self, p: OrderedPair, q: OrderedPair) -> bool {
        match (self.slot(p), self.slot(q)) {
            (Some(p), Some(q)) => self.succ[p].binary_search(&q).is_ok(),
            _ => false,
        }
    }

    /// Reachability in zero or more steps.
    pub fn reaches(&self, p: OrderedPair, q: OrderedPair) -> bool {
        match (self.slot(p), self.slot(q)) {
            (Some(p), Some(q)) => self.reach[p].contains(q),
            _ => false,
        }
    }

    pub fn successors(&self, p: usize) -> impl Iterator<Item = OrderedPair> + '_ {
        self.succ[p].iter().map(|&q| self.nodes[q])
    }

    /// Edges as `(from, to)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (OrderedPair, OrderedPair)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(move |(p, qs)| qs.iter().map(move |&q| (self.nodes[p], self.nodes[q])))
    }

    /// Slots reachable from `p` in one or more steps.
    fn strict_reach(&self, p: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.nodes.len());
        for &m in &self.succ[p] {
            out.union_with(&self.reach[m]);
        }
        out
    }
}

pub fn specifies_digraph(d: &BipartiteTournament, mode: SpecMode) -> PairDigraph {
    let order = d.order();
    let nodes: Vec<OrderedPair> = [Side::One, Side::Two]
        .into_iter()
        .flat_map(|side| {
            d.side_vertices(side).flat_map(move |a| {
                d.side_vertices(side)
                    .filter(move |&b| b != a)
                    .map(move |b| OrderedPair {
                        first: a,
                        second: b,
                    })
            })
        })
        .collect();
    let mut grid = vec![None; order * order];
    for (slot, p) in nodes.iter().enumerate() {
        grid[d.index(p.first) * order + d.index(p.second)] = Some(slot);
    }
    let out = d.out_masks();
    let ins: Vec<u128> = (0..order)
        .map(|v| {
            (0..order)
                .filter(|&w| out[w] >> v & 1 == 1)
                .fold(0, |m, w| m | 1 << w)
        })
        .collect();
    let slot = |a: usize, b: usize| grid[a * order + b].expect("same-side distinct pair");

    let mut succ = Vec::with_capacity(nodes.len());
    for p in &nodes {
        let (p1, p2) = (d.index(p.first), d.index(p.second));
        let mut qs = Vec::new();
        if mode.uses_d() {
            // q.first in N-(p.first), q.second in N+(p.second), both on the other side
            for q1 in bits(ins[p1]) {
                for q2 in bits(out[p2] & !(1 << q1)) {
                    qs.push(slot(q1, q2));
                }
            }
        }
        if mode.uses_c() {
            let side = d.side_mask(p.side());
            for w in bits(side) {
                // (w, p.second) with w -> x -> p.first
                if w != p1 && w != p2 && out[w] & ins[p1] != 0 {
                    qs.push(slot(w, p2));
                }
                // (p.first, w) with p.second -> x -> w
                if w != p1 && w != p2 && out[p2] & ins[w] != 0 {
                    qs.push(slot(p1, w));
                }
            }
        }
        qs.sort_unstable();
        qs.dedup();
        succ.push(qs);
    }

    let reach = closure(&succ);
    PairDigraph {
        mode,
        nodes,
        grid,
        n1: d.n1(),
        order,
        succ,
        reach,
    }
}

/// Reflexive-transitive closure by one search per source.
fn closure(succ: &[Vec<usize>]) -> Vec<FixedBitSet> {
    let n = succ.len();
    let mut reach = Vec::with_capacity(n);
    let mut stack = Vec::new();
    for s in 0..n {
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(s);
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &y in &succ[x] {
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        reach.push(seen);
    }
    reach
}

/// Slots of the pairs reachable from themselves-reversed in two or more steps.
fn self_reversing(g: &PairDigraph) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.len());
    for (a, &pair) in g.nodes.iter().enumerate() {
        let back = g
            .slot(pair.reversed())
            .expect("reverse of a node is a node");
        if g.succ[a].iter().any(|&m| g.reach[m].contains(back)) {
            out.insert(a);
        }
    }
    out
}

fn inconsistent_slots(g: &PairDigraph) -> FixedBitSet {
    let closing = self_reversing(g);
    let mut out = FixedBitSet::with_capacity(g.len());
    for p in 0..g.len() {
        if !g.reach[p].is_disjoint(&closing) {
            out.insert(p);
        }
    }
    out
}

/// Pairs `p` from which some pair `a` is reachable whose reverse is reachable
/// from `a` in at least two steps.
pub fn inconsistent_set(d: &BipartiteTournament, mode: SpecMode) -> BTreeSet<OrderedPair> {
    let g = specifies_digraph(d, mode);
    inconsistent_slots(&g).ones().map(|p| g.nodes[p]).collect()
}

/// A same-side pair inconsistent in both orientations, if any.
pub fn doubly_inconsistent(d: &BipartiteTournament, mode: SpecMode) -> Option<OrderedPair> {
    let set = inconsistent_set(d, mode);
    set.iter()
        .copied()
        .find(|p| p.first < p.second && set.contains(&p.reversed()))
}

/// Unordered pairs of added arcs `{xy, vu}` of `t` with `(x, y)` specifying
/// `(u, v)`, each written with the smaller arc first.
pub fn violating_pairs(t: &Completion, mode: SpecMode) -> BTreeSet<(Arc, Arc)> {
    let g = specifies_digraph(t.base(), mode);
    violations(&g, t)
}

fn violations(g: &PairDigraph, t: &Completion) -> BTreeSet<(Arc, Arc)> {
    let mut found = BTreeSet::new();
    for (p, &pair) in g.nodes.iter().enumerate() {
        if !t.arc(pair.first, pair.second) {
            continue;
        }
        for q in g.successors(p) {
            if t.arc(q.second, q.first) {
                let (a, b) = (pair.arc(), q.reversed().arc());
                found.insert((a.min(b), a.max(b)));
            }
        }
    }
    found
}

/// A violation-free completion and the violation counts seen before each pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Repaired {
    pub completion: Completion,
    pub violation_trace: Vec<usize>,
}

/// Reverses arcs of `t0` until no violating pair remains.
///
/// Each pass takes the smallest violation `{xy, vu}`, picks the pivot `(u, v)`
/// or, if that pair is inconsistent, `(y, x)`, and reverses every added arc
/// `b -> a` whose pair `(a, b)` is reachable from the pivot, together with the
/// pivot's own arc.
pub fn repair(mode: SpecMode, t0: &Completion) -> Result<Repaired> {
    let d = t0.base();
    let g = specifies_digraph(d, mode);
    let bad = inconsistent_slots(&g);
    if let Some(p) = bad.ones().find(|&p| {
        let rev = g.slot(g.nodes[p].reversed()).expect("node");
        bad.contains(rev)
    }) {
        let pair = g.nodes[p];
        let (a, b) = (pair.first.min(pair.second), pair.first.max(pair.second));
        return Err(Error::BothInconsistent(a, b));
    }

    let mut t = t0.clone();
    let mut trace = Vec::new();
    let mut current = violations(&g, &t);
    while let Some(&(alpha, beta)) = current.first() {
        trace.push(current.len());
        // edge ((x, y), (u, v)) with xy = alpha and vu = beta
        let pivot_uv = OrderedPair::of_arc(beta)?.reversed();
        let pivot_yx = OrderedPair::of_arc(alpha)?.reversed();
        let uv = g.slot(pivot_uv).expect("node");
        let pivot = if bad.contains(uv) {
            g.slot(pivot_yx).expect("node")
        } else {
            uv
        };
        let target = g.nodes[pivot];
        let mut flips: BTreeSet<Arc> = g
            .strict_reach(pivot)
            .ones()
            .map(|q| g.nodes[q])
            .filter(|q| t.arc(q.second, q.first))
            .map(|q| q.reversed().arc())
            .collect();
        flips.insert(target.reversed().arc());
        let flips: Vec<Arc> = flips.into_iter().collect();
        let next = t.with_reversed(&flips);
        let after = violations(&g, &next);
        if after.len() >= current.len() {
            return Err(Error::RepairStalled {
                before: current.len(),
                after: after.len(),
            });
        }
        t = next;
        current = after;
    }
    trace.push(0);
    Ok(Repaired {
        completion: t,
        violation_trace: trace,
    })
}

/// The starting completion for [`no_aug`]: each pair is oriented away from an
/// inconsistent orientation when it has one, and by index otherwise.
pub fn initial_completion(d: &BipartiteTournament, mode: SpecMode) -> Completion {
    let bad = inconsistent_set(d, mode);
    Completion::from_fn(d.clone(), |a, b| {
        !bad.contains(&OrderedPair {
            first: a,
            second: b,
        })
    })
}

/// A completion with no augmented 4-dicycle of the mode's signatures, or `None`
/// if every completion has one.
pub fn no_aug(d: &BipartiteTournament, mode: SpecMode) -> Result<Option<Repaired>> {
    if doubly_inconsistent(d, mode).is_some() {
        return Ok(None);
    }
    repair(mode, &initial_completion(d, mode)).map(Some)
}

/// The four orientations of `K(2,2)` up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum K22Class {
    /// The 4-dicycle.
    Y1,
    /// Acyclic with sorted parities `o o e e`.
    Y2,
    /// Acyclic with sorted parities `o e o e`.
    Y3,
    /// Acyclic with sorted parities `o e e o`.
    Y4,
}

pub fn classify_k22(d: &BipartiteTournament) -> Result<K22Class> {
    if (d.n1(), d.n2()) != (2, 2) {
        return Err(Error::NotK22 {
            n1: d.n1(),
            n2: d.n2(),
        });
    }
    let Some(form) = dx_representation(d) else {
        return Ok(K22Class::Y1);
    };
    let p = crate::tri::ParityPattern::of_set(&form.set);
    Ok(match p.bits() {
        [true, true, false, false] => K22Class::Y2,
        [true, false, true, false] => K22Class::Y3,
        _ => K22Class::Y4,
    })
}

/// The class of the 2+2 subdigraph induced by `vertices`.
pub fn classify_induced(d: &BipartiteTournament, vertices: &[VertexId]) -> Result<K22Class> {
    classify_k22(&d.induced(vertices)?)
}

/// Whether some two vertices `a`, `b` of one side and four of the other induce a
/// copy of the digraph with two out-neighbours of `a` that point to `b` and two
/// out-neighbours of `b` that point to `a`.
pub fn contains_f(d: &BipartiteTournament) -> bool {
    let out = d.out_masks();
    for side in [Side::One, Side::Two] {
        let vs: Vec<usize> = d.side_vertices(side).map(|v| d.index(v)).collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                let a_to_b = out[a] & !out[b];
                let b_to_a = out[b] & !out[a];
                if a_to_b.count_ones() >= 2 && b_to_a.count_ones() >= 2 {
                    return true;
                }
            }
        }
    }
    false
}

/// Number of d-specifies edges per induced class, for diagnostics.
pub fn d_edge_classes(d: &BipartiteTournament) -> BTreeMap<K22Class, usize> {
    let g = specifies_digraph(d, SpecMode::DOnly);
    let mut counts = BTreeMap::new();
    for (p, q) in g.edges() {
        let class = classify_induced(d, &[p.first, p.second, q.first, q.second])
            .expect("d edges span two vertices per side");
        *counts.entry(class).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acyclic::{build_dx, IntegerSet};
    use crate::fixtures;
    use crate::graph::augmented_dicycles;

    const U1: VertexId = VertexId::one(0);
    const U2: VertexId = VertexId::one(1);
    const V1: VertexId = VertexId::two(0);
    const V2: VertexId = VertexId::two(1);
    const V3: VertexId = VertexId::two(2);
    const V4: VertexId = VertexId::two(3);

    fn pair(a: VertexId, b: VertexId) -> OrderedPair {
        OrderedPair::new(a, b).unwrap()
    }

    fn dx(xs: &[u64]) -> BipartiteTournament {
        build_dx(&IntegerSet::new(xs.to_vec()).unwrap()).unwrap()
    }

    // Y3 is stored with side One = {u1, v1} and side Two = {u2, v2}.
    const Y_U1: VertexId = VertexId::one(0);
    const Y_V1: VertexId = VertexId::one(1);
    const Y_U2: VertexId = VertexId::two(0);
    const Y_V2: VertexId = VertexId::two(1);

    #[test]
    fn ordered_pair_validation() {
        assert_eq!(OrderedPair::new(U1, V1), Err(Error::NotSameSide(U1, V1)));
        assert_eq!(OrderedPair::new(U1, U1), Err(Error::SelfArc(U1)));
    }

    #[test]
    fn d_specifies_examples() {
        let f = fixtures::graph_f();
        assert!(d_specifies(&f, pair(U1, U2), pair(V3, V4)));
        assert!(d_specifies(&f, pair(V3, V4), pair(U2, U1)));
        assert!(!d_specifies(&f, pair(V1, V2), pair(V3, V4)));
    }

    #[test]
    fn c_specifies_examples() {
        let d = fixtures::c_inconsistent();
        let (a, b, c) = (VertexId::one(0), VertexId::one(1), VertexId::one(2));
        // c -> w1 -> a
        assert!(c_specifies(&d, pair(a, b), pair(c, b)));
        assert!(!c_specifies(&d, pair(a, b), pair(a, b)));
        assert!(!c_specifies(
            &d,
            pair(a, b),
            pair(VertexId::two(0), VertexId::two(1))
        ));
    }

    #[test]
    fn specifies_digraph_examples() {
        let f = fixtures::graph_f();
        let g = specifies_digraph(&f, SpecMode::DOnly);
        assert!(g.has_edge(pair(U1, U2), pair(V3, V4)));
        assert!(g.has_edge(pair(V3, V4), pair(U2, U1)));
        for mode in SpecMode::ALL {
            assert!(specifies_digraph(&fixtures::single_arc(), mode).is_empty());
        }
    }

    #[test]
    fn edges_agree_with_predicates() {
        for d in [
            fixtures::graph_f(),
            fixtures::c_inconsistent(),
            fixtures::y3(),
        ] {
            for mode in SpecMode::ALL {
                let g = specifies_digraph(&d, mode);
                for &p in g.nodes() {
                    for &r in g.nodes() {
                        let want = (mode.uses_d() && d_specifies(&d, p, r))
                            || (mode.uses_c() && c_specifies(&d, p, r));
                        assert_eq!(g.has_edge(p, r), want, "{mode:?} {p} {r}");
                        assert_eq!(g.has_edge(p, r), g.has_edge(r.reversed(), p.reversed()));
                    }
                }
            }
        }
    }

    #[test]
    fn inconsistent_set_examples() {
        let f = fixtures::graph_f();
        let d_bad = inconsistent_set(&f, SpecMode::DOnly);
        let want: BTreeSet<_> = [
            pair(U1, U2),
            pair(U2, U1),
            pair(V1, V2),
            pair(V2, V1),
            pair(V3, V4),
            pair(V4, V3),
        ]
        .into();
        assert_eq!(d_bad, want);
        assert_eq!(inconsistent_set(&f, SpecMode::COnly).len(), 12);
        assert_eq!(inconsistent_set(&f, SpecMode::Both).len(), 14);

        let c = fixtures::c_inconsistent();
        let (a, b, cc) = (VertexId::one(0), VertexId::one(1), VertexId::one(2));
        assert_eq!(
            inconsistent_set(&c, SpecMode::COnly),
            BTreeSet::from([pair(a, b), pair(cc, b)])
        );
        assert!(inconsistent_set(&dx(&[1, 2, 3]), SpecMode::DOnly).is_empty());
        assert!(inconsistent_set(&fixtures::y3(), SpecMode::DOnly).is_empty());
    }

    #[test]
    fn violating_pairs_on_y3() {
        let y3 = fixtures::y3();
        // added arcs u1 -> v1 and v2 -> u2
        let bad = Completion::from_fn(y3.clone(), |a, _| a.side == Side::One);
        assert!(bad.arc(Y_U1, Y_V1) && bad.arc(Y_V2, Y_U2));
        let found = violating_pairs(&bad, SpecMode::DOnly);
        assert_eq!(found, BTreeSet::from([((Y_U1, Y_V1), (Y_V2, Y_U2))]));
        // added arcs v1 -> u1 and u2 -> v2
        let good = Completion::from_fn(y3, |a, _| a.side == Side::Two);
        assert!(violating_pairs(&good, SpecMode::DOnly).is_empty());
        let single = Completion::new(fixtures::single_arc(), &[], &[]).unwrap();
        for mode in SpecMode::ALL {
            assert!(violating_pairs(&single, mode).is_empty());
        }
    }

    #[test]
    fn no_aug_examples() {
        assert!(no_aug(&fixtures::graph_f(), SpecMode::DOnly)
            .unwrap()
            .is_none());
        let y3 = fixtures::y3();
        let r = no_aug(&y3, SpecMode::DOnly).unwrap().unwrap();
        assert!(
            augmented_dicycles(&r.completion, 4, &[Signature::new(2, 2)])
                .unwrap()
                .is_empty()
        );
        let single = fixtures::single_arc();
        let r = no_aug(&single, SpecMode::Both).unwrap().unwrap();
        assert!(r.completion.added_arcs().is_empty());
        assert_eq!(r.violation_trace, vec![0]);
    }

    #[test]
    fn repair_examples() {
        let y3 = fixtures::y3();
        let t0 = Completion::from_fn(y3.clone(), |a, _| a.side == Side::One);
        let r = repair(SpecMode::DOnly, &t0).unwrap();
        assert!(violating_pairs(&r.completion, SpecMode::DOnly).is_empty());
        assert_eq!(r.violation_trace, vec![1, 0]);

        let d = dx(&[1, 2, 3, 4]);
        let t0 = Completion::from_rank(d.clone(), |v| d.index(v));
        let r = repair(SpecMode::Both, &t0).unwrap();
        assert_eq!(r.completion, t0);

        let f = fixtures::graph_f();
        let t0 = Completion::from_rank(f.clone(), |v| f.index(v));
        assert_eq!(
            repair(SpecMode::DOnly, &t0),
            Err(Error::BothInconsistent(U1, U2))
        );
    }

    #[test]
    fn k22_classes() {
        let c4 = BipartiteTournament::new(2, 2, &[vec![true, false], vec![false, true]]).unwrap();
        // u1 -> v1 -> u2 -> v2 -> u1
        assert_eq!(classify_k22(&c4).unwrap(), K22Class::Y1);
        assert_eq!(classify_k22(&fixtures::y3()).unwrap(), K22Class::Y3);
        // u2 -> u1, v2 -> u1, v1 -> u2, v1 -> v2
        let y4 = BipartiteTournament::new(2, 2, &[vec![false, false], vec![true, true]]).unwrap();
        assert_eq!(classify_k22(&y4).unwrap(), K22Class::Y4);
        assert_eq!(classify_k22(&dx(&[1, 3, 4, 6])).unwrap(), K22Class::Y2);
        assert_eq!(
            classify_k22(&fixtures::graph_f()),
            Err(Error::NotK22 { n1: 2, n2: 4 })
        );
    }

    #[test]
    fn contains_f_examples() {
        assert!(contains_f(&fixtures::graph_f()));
        assert!(!contains_f(&dx(&[1, 2, 3, 4, 5, 6, 7, 8])));
        // F plus a fifth side-Two vertex dominated by both u1 and u2
        let f5 = BipartiteTournament::new(
            2,
            5,
            &[
                vec![true, true, false, false, true],
                vec![false, false, true, true, true],
            ],
        )
        .unwrap();
        assert!(contains_f(&f5));
    }

    #[test]
    fn d_edges_induce_y3_or_y4() {
        let f = fixtures::graph_f();
        let classes = d_edge_classes(&f);
        assert!(classes
            .keys()
            .all(|c| matches!(c, K22Class::Y3 | K22Class::Y4)));
        assert!(!classes.is_empty());
    }
}
