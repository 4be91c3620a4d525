//! Exact signless Laplacian minors of simple graphs, the TU-subgraph
//! expansions of those minors, and checks of the bounds that follow.
//!
//! A TU-subgraph is a spanning subgraph whose components are trees or
//! unicyclic graphs with an odd cycle.

pub mod catalog;
pub mod cli;
pub mod combin;
pub mod cycles;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod spectral;
pub mod subgraph;
pub mod verify;

pub use graph::{Graph, GraphError};
pub use matrix::{IntMatrix, MatrixError};
pub use subgraph::{EnumError, TuCensus};
pub use verify::{verify_all, verify_selected, TheoremId, VerificationReport};
