//! Exact tools for Seidel switching on small graphs.
//!
//! The crate computes switches, decides switching-minimality and
//! switchability to few edges by exhaustive search, builds the reductions
//! from Max-Cut and minimum bisection to switching, and checks each of them
//! against brute-force oracles.

pub mod certificate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod minimality;
pub mod oracles;
pub mod reductions;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{ge_k_via_complement, Cut, Graph, VertexSet};
