use thiserror::Error;

use crate::graph::{Side, Signature, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partite set {0:?} is empty")]
    EmptyPart(Side),
    #[error("partite set {side:?} has {size} vertices, at most {max} are supported")]
    PartTooLarge { side: Side, size: usize, max: usize },
    #[error("orientation matrix row {row} has {found} entries, expected {expected}")]
    DimensionMismatch {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("orientation matrix has {found} rows, expected {expected}")]
    RowCountMismatch { found: usize, expected: usize },
    #[error("vertex {0} does not belong to this digraph")]
    ForeignVertex(VertexId),
    #[error("self-arc at {0}")]
    SelfArc(VertexId),
    #[error("pair {{{0}, {1}}} is oriented more than once")]
    DoubleOrientation(VertexId, VertexId),
    #[error("pair {{{0}, {1}}} is not oriented")]
    MissingPair(VertexId, VertexId),
    #[error("{0} and {1} are not in a common partite set")]
    NotSameSide(VertexId, VertexId),
    #[error("cycle length {k} outside the supported range 3..={max}")]
    CycleLength { k: usize, max: usize },
    #[error("signature {sig} is not valid for cycle length {k}")]
    MalformedSignature { sig: Signature, k: usize },
    #[error("integer set must consist of strictly increasing positive integers")]
    MalformedIntegerSet,
    #[error("integer set {0:?} has a single parity, so one partite set would be empty")]
    SingleParity(Vec<u64>),
    #[error("pivot {r} outside 1..={max} for order {n}", max = n.saturating_sub(2))]
    PivotOutOfRange { n: usize, r: usize },
    #[error("tournament order {n} outside the supported range {min}..={max}")]
    TournamentOrder { n: usize, min: usize, max: usize },
    #[error("special family must be 1 or 2, got {0}")]
    UnknownFamily(u8),
    #[error("order for partite set {0:?} is not a permutation of its vertices")]
    MalformedPermutation(Side),
    #[error("expected two vertices in each partite set, found {n1} and {n2}")]
    NotK22 { n1: usize, n2: usize },
    #[error("{pairs} intra pairs exceed the enumeration cap of {max}")]
    EnumerationCap { pairs: usize, max: usize },
    #[error("pair digraph has {nodes} nodes, the chain search cap is {max}")]
    NodeCap { nodes: usize, max: usize },
    #[error("both ({0}, {1}) and ({1}, {0}) are inconsistent")]
    BothInconsistent(VertexId, VertexId),
    #[error("repair pass did not reduce the violation count ({before} -> {after})")]
    RepairStalled { before: usize, after: usize },
}
