//! Construction, certification and exhaustive search for `(k, d)`-hooked
//! Skolem graceful labelings and the Skolem-type sequences behind them.
//!
//! A `(k, d)`-hooked Skolem graceful labeling of a graph with `p` vertices
//! and `q` edges is a bijection from the vertices onto `{1, ..., p-1, p+1}`
//! whose absolute edge differences are exactly `{k, k+d, ..., k+(q-1)d}`.
//!
//! The crate is organised as:
//!
//! - [`model`]: graphs, labelings, pair systems, sequence forms and their
//!   text encodings.
//! - [`verify`]: certificates for labelings and sequences.
//! - [`conditions`]: closed-form necessary conditions.
//! - [`construct`]: the closed-form `(2, 1)` labelings of `nK2`.
//! - [`search`]: the exhaustive backtracking oracle, optionally parallel.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod conditions;
pub mod construct;
mod error;
pub mod model;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use model::{
    edge_target_set, induced_edge_labels, target_label_set, Graph, Label, PairSystem, SequenceForm,
    SequenceKind, Slot, TargetParams, VertexLabeling,
};
