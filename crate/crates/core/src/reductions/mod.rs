//! Instance transformations from the hardness arguments, each paired with
//! the oracle used to check it end to end.
//!
//! | function | from | to |
//! |---|---|---|
//! | [`reach_to_abstar_ureach`] | directed reachability | `(ab)*` on an undirected graph |
//! | [`nbc_to_d2_dagreach`] | block-choice Dyck string | `d2` on a series-parallel DAG |
//! | [`mcvp_to_d2_reach`] | monotone circuit | `d2` on a directed graph |
//! | [`d2reach_to_dd2_ureach`] | `d2` on a directed graph | `dd2` on an undirected graph |
//! | [`vc_to_a_dagreach`] | vertex cover | `lang-a` on a DAG |

mod circuit;
mod nbc;
mod undirected;
mod vc;

use thiserror::Error;

use crate::graph::Symbol;
use crate::languages::BlockSyntaxError;

pub use circuit::{eval_circuit, mcvp_to_d2_reach, parse_circuit, render_circuit, Circuit, Gate, Port, Wire};
pub use nbc::nbc_to_d2_dagreach;
pub use undirected::{d2reach_to_dd2_ureach, reach_to_abstar_ureach};
pub use vc::{
    decode_vc_witness, is_vertex_cover, parse_vc, render_vc, vc_brute, vc_brute_cover, vc_dag_edge_count, vc_to_a_dagreach, VcInstance,
    VC_BRUTE_LIMIT,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("input graph must be directed")]
    NotDirected,
    #[error("label {0:?} is not one of ( ) [ ]")]
    ForeignSymbol(Symbol),
    #[error(transparent)]
    BlockSyntax(#[from] BlockSyntaxError),
    #[error("gate {gate}: input refers to gate {target}, which is not earlier in the circuit")]
    BadGateRef { gate: usize, target: usize },
    #[error("gate {gate}: port {port} of gate {target} is already consumed")]
    PortConflict { gate: usize, target: usize, port: u8 },
    #[error("output gate {0} does not exist")]
    BadOutput(usize),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("path does not match the instance: {0}")]
    PathMismatch(String),
    #[error("instance has {n} vertices; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}
