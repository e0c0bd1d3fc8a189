//! Solvers for language-constrained reachability.
//!
//! * [`regular_reach`]: breadth-first search on the product of the graph
//!   and a DFA; returns a shortest accepted path.
//! * [`cfl_reach_table`] / [`cfl_reach`]: least fixpoint of `(u, A, v)`
//!   facts over a grammar in binary normal form, with provenance so that a
//!   witness path can be rebuilt on demand ([`expand_witness`]).
//! * [`dag_enum_reach`], [`bounded_enum_reach`]: exhaustive path
//!   enumeration against an arbitrary [`Membership`] predicate.
//! * [`tree_reach`]: the unique path in a tree, checked once.
//!
//! Undirected edges are traversable both ways and read the same label.
//!
//! [`Membership`]: crate::languages::Membership

mod cfl;
mod enumerate;
mod regular;
mod tree;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Symbol;

pub use cfl::{
    cfl_reach, cfl_reach_normal, cfl_reach_table, cfl_reach_table_with, expand_witness, ExpandError, Fact, FactId,
    Justification, ReachTable, Witness, Worklist,
};
pub use enumerate::{bounded_enum_reach, bounded_enum_reach_with_stats, dag_enum_reach, dag_enum_reach_with_stats};
pub use regular::{regular_reach, regular_reach_with_stats};
pub use tree::tree_reach;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReachError {
    #[error("edge label {0:?} is not a symbol of the language")]
    AlphabetMismatch(Symbol),
    #[error("graph is not a DAG")]
    NotADag,
    #[error("underlying undirected graph is not a tree")]
    NotATree,
    #[error("the unique tree path from source to target goes against an edge's orientation")]
    NoRespectingPath,
}

/// Work counters reported alongside a solver's answer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Facts derived (fixpoint), product states reached (regular search) or
    /// candidate paths tested (enumeration).
    pub facts: usize,
    /// Worklist pops, or search-tree nodes visited during enumeration.
    pub pops: usize,
}

pub(crate) fn check_alphabet(graph: &BTreeSet<Symbol>, language: impl Fn(Symbol) -> bool) -> Result<(), ReachError> {
    match graph.iter().find(|c| !language(**c)) {
        Some(&c) => Err(ReachError::AlphabetMismatch(c)),
        None => Ok(()),
    }
}
