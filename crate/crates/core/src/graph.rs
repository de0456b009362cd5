//! Bipartite tournaments, their tournament completions, and dicycle enumeration.
//!
//! Every digraph here is stored as dense bit rows. Vertices carry a
//! [`VertexId`] (partite set plus index); internally they are also numbered
//! globally, side [`Side::One`] first, so that an out-neighbourhood fits in a
//! single `u128`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};

/// Largest supported partite set.
pub const MAX_PART: usize = 64;

/// Largest cycle length accepted by the general enumerator.
pub const MAX_CYCLE_LEN: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

/// A vertex of a bipartite tournament. Orders side One before side Two, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub const fn one(index: usize) -> Self {
        VertexId {
            side: Side::One,
            index,
        }
    }

    pub const fn two(index: usize) -> Self {
        VertexId {
            side: Side::Two,
            index,
        }
    }
}

/// `u1, u2, ...` for side One and `v1, v2, ...` for side Two.
impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.side {
            Side::One => 'u',
            Side::Two => 'v',
        };
        write!(f, "{}{}", prefix, self.index + 1)
    }
}

/// An arc `(tail, head)`.
pub type Arc = (VertexId, VertexId);

/// Split of a cycle's vertices between the two partite sets, larger share first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub major: usize,
    pub minor: usize,
}

impl Signature {
    pub const fn new(major: usize, minor: usize) -> Self {
        Signature { major, minor }
    }

    pub fn from_counts(a: usize, b: usize) -> Self {
        Signature {
            major: a.max(b),
            minor: a.min(b),
        }
    }

    pub fn len(&self) -> usize {
        self.major + self.minor
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether this is a legal signature for cycles of length `k`.
    pub fn is_valid_for(&self, k: usize) -> bool {
        self.len() == k && self.major >= self.minor
    }

    /// Every legal signature for length `k`, `(k, 0)` first.
    pub fn all(k: usize) -> Vec<Signature> {
        (k.div_ceil(2)..=k)
            .rev()
            .map(|major| Signature::new(major, k - major))
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.major, self.minor)
    }
}

/// Read access shared by every digraph type in this crate.
pub trait Digraph {
    /// Out-neighbourhood bit rows indexed by global vertex number.
    fn out_masks(&self) -> &[u128];

    fn order(&self) -> usize {
        self.out_masks().len()
    }

    fn has_arc_index(&self, a: usize, b: usize) -> bool {
        self.out_masks()[a] >> b & 1 == 1
    }
}

/// A digraph whose vertex set is that of a bipartite tournament.
pub trait PartiteDigraph: Digraph {
    fn base(&self) -> &BipartiteTournament;
}

/// An orientation of a complete bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteTournament {
    n1: usize,
    n2: usize,
    // bit j of row i is set iff u_i -> v_j
    cross: Vec<u64>,
    out: Vec<u128>,
}

impl BipartiteTournament {
    /// Builds from a boolean `n1 x n2` matrix; `cross[i][j]` true means `u_i -> v_j`.
    pub fn new(n1: usize, n2: usize, cross: &[Vec<bool>]) -> Result<Self> {
        if cross.len() != n1 {
            return Err(Error::RowCountMismatch {
                found: cross.len(),
                expected: n1,
            });
        }
        for (row, entries) in cross.iter().enumerate() {
            if entries.len() != n2 {
                return Err(Error::DimensionMismatch {
                    row,
                    found: entries.len(),
                    expected: n2,
                });
            }
        }
        Self::from_fn(n1, n2, |i, j| cross[i][j])
    }

    /// Builds from a predicate; `forward(i, j)` true means `u_i -> v_j`.
    pub fn from_fn(n1: usize, n2: usize, forward: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_part(Side::One, n1)?;
        check_part(Side::Two, n2)?;
        let cross = (0..n1)
            .map(|i| {
                (0..n2)
                    .filter(|&j| forward(i, j))
                    .fold(0u64, |row, j| row | 1 << j)
            })
            .collect();
        Ok(Self::from_rows(n1, n2, cross))
    }

    pub(crate) fn from_rows(n1: usize, n2: usize, cross: Vec<u64>) -> Self {
        let mut out = vec![0u128; n1 + n2];
        for (i, &row) in cross.iter().enumerate() {
            for j in 0..n2 {
                if row >> j & 1 == 1 {
                    out[i] |= 1 << (n1 + j);
                } else {
                    out[n1 + j] |= 1 << i;
                }
            }
        }
        BipartiteTournament { n1, n2, cross, out }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn part_size(&self, side: Side) -> usize {
        match side {
            Side::One => self.n1,
            Side::Two => self.n2,
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index < self.part_size(v.side)
    }

    /// All vertices in global order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n1)
            .map(VertexId::one)
            .chain((0..self.n2).map(VertexId::two))
    }

    pub fn side_vertices(&self, side: Side) -> impl Iterator<Item = VertexId> {
        (0..self.part_size(side)).map(move |index| VertexId { side, index })
    }

    pub fn index(&self, v: VertexId) -> usize {
        match v.side {
            Side::One => v.index,
            Side::Two => self.n1 + v.index,
        }
    }

    pub fn vertex(&self, index: usize) -> VertexId {
        if index < self.n1 {
            VertexId::one(index)
        } else {
            VertexId::two(index - self.n1)
        }
    }

    /// Bit mask of the global indices of `side`.
    pub(crate) fn side_mask(&self, side: Side) -> u128 {
        let ones = low_bits(self.n1);
        match side {
            Side::One => ones,
            Side::Two => low_bits(self.n1 + self.n2) & !ones,
        }
    }

    /// Whether `a -> b` is an arc. Same-side pairs are never arcs.
    pub fn arc(&self, a: VertexId, b: VertexId) -> bool {
        debug_assert!(self.contains(a) && self.contains(b));
        match (a.side, b.side) {
            (Side::One, Side::Two) => self.cross[a.index] >> b.index & 1 == 1,
            (Side::Two, Side::One) => self.cross[b.index] >> a.index & 1 == 0,
            _ => false,
        }
    }

    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::with_capacity(self.n1 * self.n2);
        for a in self.vertices() {
            for b in self.side_vertices(a.side.other()) {
                if self.arc(a, b) {
                    arcs.push((a, b));
                }
            }
        }
        arcs
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[self.index(v)].count_ones() as usize
    }

    pub fn out_neighbours(&self, v: VertexId) -> Vec<VertexId> {
        bits(self.out[self.index(v)])
            .map(|i| self.vertex(i))
            .collect()
    }

    /// The sub-bipartite tournament induced by `keep`, renumbered in the order
    /// the vertices of each side appear in `keep`.
    pub fn induced(&self, keep: &[VertexId]) -> Result<BipartiteTournament> {
        for &v in keep {
            if !self.contains(v) {
                return Err(Error::ForeignVertex(v));
            }
        }
        let ones: Vec<_> = keep.iter().filter(|v| v.side == Side::One).collect();
        let twos: Vec<_> = keep.iter().filter(|v| v.side == Side::Two).collect();
        BipartiteTournament::from_fn(ones.len(), twos.len(), |i, j| self.arc(*ones[i], *twos[j]))
    }

    /// The same digraph with the roles of the two partite sets exchanged.
    pub fn swap_sides(&self) -> BipartiteTournament {
        BipartiteTournament::from_fn(self.n2, self.n1, |i, j| {
            self.arc(VertexId::two(i), VertexId::one(j))
        })
        .expect("sizes already validated")
    }
}

impl Digraph for BipartiteTournament {
    fn out_masks(&self) -> &[u128] {
        &self.out
    }
}

impl PartiteDigraph for BipartiteTournament {
    fn base(&self) -> &BipartiteTournament {
        self
    }
}

/// A bipartite tournament together with a tournament on each partite set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Completion {
    base: BipartiteTournament,
    // bit j of intra[s][i] is set iff vertex i -> vertex j within side s
    intra: [Vec<u64>; 2],
    out: Vec<u128>,
}

impl Completion {
    /// Builds a completion from explicit intra-set arc lists given as
    /// `(tail index, head index)` within each side.
    pub fn new(
        base: BipartiteTournament,
        intra1: &[(usize, usize)],
        intra2: &[(usize, usize)],
    ) -> Result<Self> {
        let rows1 = intra_rows(base.n1, Side::One, intra1)?;
        let rows2 = intra_rows(base.n2, Side::Two, intra2)?;
        Ok(Self::from_rows(base, [rows1, rows2]))
    }

    /// Builds a completion from a predicate called once per unordered same-side
    /// pair `(a, b)` with `a.index < b.index`; true orients it `a -> b`.
    pub fn from_fn(
        base: BipartiteTournament,
        forward: impl Fn(VertexId, VertexId) -> bool,
    ) -> Self {
        let mut rows = [vec![0u64; base.n1], vec![0u64; base.n2]];
        for (s, side) in [Side::One, Side::Two].into_iter().enumerate() {
            let n = base.part_size(side);
            for i in 0..n {
                for j in i + 1..n {
                    if forward(VertexId { side, index: i }, VertexId { side, index: j }) {
                        rows[s][i] |= 1 << j;
                    } else {
                        rows[s][j] |= 1 << i;
                    }
                }
            }
        }
        Self::from_rows(base, rows)
    }

    /// Orients every intra pair so that lower-ranked vertices point to higher-ranked ones.
    pub fn from_rank(base: BipartiteTournament, rank: impl Fn(VertexId) -> usize) -> Self {
        Self::from_fn(base, |a, b| rank(a) < rank(b))
    }

    fn from_rows(base: BipartiteTournament, intra: [Vec<u64>; 2]) -> Self {
        let mut out = base.out.clone();
        let n1 = base.n1;
        for (i, &row) in intra[0].iter().enumerate() {
            out[i] |= row as u128;
        }
        for (j, &row) in intra[1].iter().enumerate() {
            out[n1 + j] |= (row as u128) << n1;
        }
        Completion { base, intra, out }
    }

    pub fn base(&self) -> &BipartiteTournament {
        &self.base
    }

    pub fn arc(&self, a: VertexId, b: VertexId) -> bool {
        if a.side == b.side {
            self.intra[side_slot(a.side)][a.index] >> b.index & 1 == 1
        } else {
            self.base.arc(a, b)
        }
    }

    /// The intra-set arcs, in global order of their tails.
    pub fn added_arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::new();
        for a in self.base.vertices() {
            for b in self.base.side_vertices(a.side) {
                if a != b && self.arc(a, b) {
                    arcs.push((a, b));
                }
            }
        }
        arcs
    }

    /// Intra arcs of one side as `(tail index, head index)`.
    pub fn intra_arcs(&self, side: Side) -> Vec<(usize, usize)> {
        self.added_arcs()
            .into_iter()
            .filter(|(a, _)| a.side == side)
            .map(|(a, b)| (a.index, b.index))
            .collect()
    }

    /// A copy with each of the given intra arcs reversed.
    ///
    /// Panics if some listed arc is not an intra arc of `self`.
    pub fn with_reversed(&self, arcs: &[Arc]) -> Completion {
        let mut intra = self.intra.clone();
        for &(a, b) in arcs {
            assert!(
                a.side == b.side && self.arc(a, b),
                "{a} -> {b} is not an intra arc of this completion"
            );
            let rows = &mut intra[side_slot(a.side)];
            rows[a.index] &= !(1 << b.index);
            rows[b.index] |= 1 << a.index;
        }
        Completion::from_rows(self.base.clone(), intra)
    }
}

impl Digraph for Completion {
    fn out_masks(&self) -> &[u128] {
        &self.out
    }
}

impl PartiteDigraph for Completion {
    fn base(&self) -> &BipartiteTournament {
        &self.base
    }
}

/// A tournament on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament {
    out: Vec<u128>,
}

impl Tournament {
    pub const MAX_ORDER: usize = 128;

    /// `forward(i, j)` is called for `i < j` and orients the pair `i -> j` when true.
    pub fn from_fn(n: usize, forward: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::TournamentOrder {
                n,
                min: 0,
                max: Self::MAX_ORDER,
            });
        }
        let mut out = vec![0u128; n];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Ok(Tournament { out })
    }

    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    pub fn arc(&self, a: usize, b: usize) -> bool {
        self.has_arc_index(a, b)
    }

    /// All `k`-dicycles as vertex sequences starting at their smallest vertex.
    pub fn dicycles(&self, k: usize) -> Result<Vec<Vec<usize>>> {
        check_cycle_len(k, self.order())?;
        let mut found = Vec::new();
        visit_cycles(&self.out, k, |c| {
            found.push(c.to_vec());
            ControlFlow::Continue(())
        });
        Ok(found)
    }

    pub fn count_dicycles(&self, k: usize) -> Result<usize> {
        check_cycle_len(k, self.order())?;
        let mut count = 0;
        visit_cycles(&self.out, k, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        Ok(count)
    }
}

impl Digraph for Tournament {
    fn out_masks(&self) -> &[u128] {
        &self.out
    }
}

/// A directed cycle, rotated so that its smallest vertex comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dicycle {
    vertices: Vec<VertexId>,
}

impl Dicycle {
    /// Canonicalizes the rotation. Arc membership is not checked here.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        if let Some(pos) = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
        {
            vertices.rotate_left(pos);
        }
        Dicycle { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Whether the cycle uses at least one intra-set arc.
    pub fn is_augmented(&self) -> bool {
        self.arcs().any(|(a, b)| a.side == b.side)
    }
}

/// Written as a closed walk, e.g. `u1 u2 v3 u1`.
impl fmt::Display for Dicycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            write!(f, "{v} ")?;
        }
        match self.vertices.first() {
            Some(v) => write!(f, "{v}"),
            None => Ok(()),
        }
    }
}

/// All dicycles of length `k`, each once, in canonical rotation.
pub fn dicycles_of_length<G: PartiteDigraph>(g: &G, k: usize) -> Result<Vec<Dicycle>> {
    check_cycle_len(k, g.order())?;
    let base = g.base();
    let mut found = Vec::new();
    visit_cycles(g.out_masks(), k, |c| {
        found.push(Dicycle {
            vertices: c.iter().map(|&i| base.vertex(i)).collect(),
        });
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// Augmented `k`-dicycles of `t` whose signature lies in `allowed`. Lengths
/// above the order of `t` give an empty list.
pub fn augmented_dicycles(t: &Completion, k: usize, allowed: &[Signature]) -> Result<Vec<Dicycle>> {
    check_signatures(k, allowed)?;
    check_cycle_len(k, MAX_CYCLE_LEN)?;
    let side_one = t.base.side_mask(Side::One);
    let mut found = Vec::new();
    visit_cycles(&t.out, k, |c| {
        if is_augmented_path(c, side_one) && allowed.contains(&path_signature(c, side_one)) {
            found.push(Dicycle {
                vertices: c.iter().map(|&i| t.base.vertex(i)).collect(),
            });
        }
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// Number of augmented `k`-dicycles of `t` per signature. Signatures with no
/// cycles are omitted.
pub fn augmented_signature_counts(t: &Completion, k: usize) -> Result<BTreeMap<Signature, usize>> {
    check_cycle_len(k, MAX_CYCLE_LEN)?;
    let side_one = t.base.side_mask(Side::One);
    let mut counts = BTreeMap::new();
    visit_cycles(&t.out, k, |c| {
        if is_augmented_path(c, side_one) {
            *counts.entry(path_signature(c, side_one)).or_insert(0) += 1;
        }
        ControlFlow::Continue(())
    });
    Ok(counts)
}

/// Signature of `cycle` with respect to the partite sets of `d`.
pub fn signature(cycle: &Dicycle, d: &BipartiteTournament) -> Result<Signature> {
    let mut ones = 0;
    for &v in cycle.vertices() {
        if !d.contains(v) {
            return Err(Error::ForeignVertex(v));
        }
        if v.side == Side::One {
            ones += 1;
        }
    }
    Ok(Signature::from_counts(ones, cycle.len() - ones))
}

pub(crate) fn check_signatures(k: usize, allowed: &[Signature]) -> Result<()> {
    match allowed.iter().find(|s| !s.is_valid_for(k)) {
        Some(&sig) => Err(Error::MalformedSignature { sig, k }),
        None => Ok(()),
    }
}

pub(crate) fn check_cycle_len(k: usize, order: usize) -> Result<()> {
    let max = order.min(MAX_CYCLE_LEN);
    if k < 3 || k > max {
        return Err(Error::CycleLength { k, max });
    }
    Ok(())
}

fn check_part(side: Side, size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::EmptyPart(side));
    }
    if size > MAX_PART {
        return Err(Error::PartTooLarge {
            side,
            size,
            max: MAX_PART,
        });
    }
    Ok(())
}

fn intra_rows(n: usize, side: Side, arcs: &[(usize, usize)]) -> Result<Vec<u64>> {
    let mut rows = vec![0u64; n];
    let v = |index| VertexId { side, index };
    for &(a, b) in arcs {
        for x in [a, b] {
            if x >= n {
                return Err(Error::ForeignVertex(v(x)));
            }
        }
        if a == b {
            return Err(Error::SelfArc(v(a)));
        }
        if (rows[a] | rows[b]) & (1 << a | 1 << b) != 0 {
            return Err(Error::DoubleOrientation(v(a.min(b)), v(a.max(b))));
        }
        rows[a] |= 1 << b;
    }
    for a in 0..n {
        for b in a + 1..n {
            if rows[a] >> b & 1 == 0 && rows[b] >> a & 1 == 0 {
                return Err(Error::MissingPair(v(a), v(b)));
            }
        }
    }
    Ok(rows)
}

fn side_slot(side: Side) -> usize {
    match side {
        Side::One => 0,
        Side::Two => 1,
    }
}

fn is_augmented_path(cycle: &[usize], side_one: u128) -> bool {
    let in_one = |i: usize| side_one >> i & 1 == 1;
    let k = cycle.len();
    (0..k).any(|i| in_one(cycle[i]) == in_one(cycle[(i + 1) % k]))
}

fn path_signature(cycle: &[usize], side_one: u128) -> Signature {
    let ones = cycle.iter().filter(|&&i| side_one >> i & 1 == 1).count();
    Signature::from_counts(ones, cycle.len() - ones)
}

pub(crate) fn low_bits(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

/// Calls `f` once for every `k`-cycle, given as a vertex sequence that starts
/// at the cycle's smallest vertex. Stops early on `ControlFlow::Break`.
pub(crate) fn visit_cycles(out: &[u128], k: usize, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
    let mut path = Vec::with_capacity(k);
    for start in 0..out.len() {
        let above = !low_bits(start + 1);
        path.push(start);
        if extend(out, k, above, 1 << start, &mut path, &mut f).is_break() {
            return;
        }
        path.pop();
    }
}

fn extend(
    out: &[u128],
    k: usize,
    above: u128,
    used: u128,
    path: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let start = path[0];
    let last = *path.last().expect("path starts non-empty");
    if path.len() == k {
        if out[last] >> start & 1 == 1 {
            f(path)?;
        }
        return ControlFlow::Continue(());
    }
    let mut candidates = out[last] & above & !used;
    if path.len() + 1 == k {
        candidates = bits(candidates)
            .filter(|&w| out[w] >> start & 1 == 1)
            .fold(0, |m, w| m | 1 << w);
    }
    for w in bits(candidates) {
        path.push(w);
        extend(out, k, above, used | 1 << w, path, f)?;
        path.pop();
    }
    ControlFlow::Continue(())
}
