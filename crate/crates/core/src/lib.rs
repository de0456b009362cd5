//! Tournament completions of bipartite tournaments.
//!
//! Given a bipartite tournament `D`, a *completion* adds a tournament on each
//! partite set. A dicycle of the completion that uses at least one added arc is
//! *augmented*. This crate decides, and constructs witnesses for, the
//! following questions about a given `D`:
//!
//! | question | module |
//! |---|---|
//! | some completion has exactly one augmented (2,1)-dicycle | [`tri::one_aug_21`] |
//! | some completion has exactly one augmented 3-dicycle | [`tri::one_aug_3`] |
//! | some completion has no augmented (2,2)-, (3,1)-, or 4-dicycles of either kind | [`quad::no_aug`] |
//!
//! [`acyclic`] recognizes acyclic bipartite tournaments and their integer-set
//! normal form, and [`oracle`] is an exhaustive brute-force referee for all of
//! the above on small instances.

pub mod acyclic;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod quad;
pub mod tri;

pub use error::{Error, Result};
pub use graph::{
    augmented_dicycles, dicycles_of_length, signature, Arc, BipartiteTournament, Completion,
    Dicycle, Digraph, PartiteDigraph, Side, Signature, Tournament, VertexId,
};
