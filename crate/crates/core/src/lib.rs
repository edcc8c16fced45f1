//! Hypergraph transversal toolkit.
//!
//! Enumerates the minimal hitting sets of a hypergraph with a look-ahead
//! tree search, decides transversal rank and conformal degree, lists maximal
//! hypercliques and independent sets, and verifies `G = Tr(H)` identities.
//! Every algorithm has a brute-force counterpart in [`oracle`] for testing.

pub mod cliques;
pub mod combinations;
pub mod conformal;
pub mod enumeration;
mod error;
pub mod extension;
pub mod format;
pub mod generate;
pub mod hitting;
pub mod hypergraph;
pub mod oracle;
pub mod rank;
pub mod verify;
mod vertex_set;

pub use error::{Error, Result};
pub use hypergraph::{DegreeProfile, EdgeIndex, Hypergraph};
pub use vertex_set::{VertexId, VertexSet};
