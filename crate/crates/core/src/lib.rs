//! Matching covered graphs: perfect matchings, removable edges, tight cuts,
//! bricks and braces, barriers, wheels and splicing, and exhaustive
//! verification campaigns over small graphs.

pub mod bipartite;
pub mod canon;
pub mod cuts;
pub mod decomposition;
pub mod error;
pub mod family;
pub mod format;
pub mod generate;
pub mod graph;
pub mod limits;
pub mod matching;
pub mod mc;
pub mod verify;
pub mod wheels;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{EdgeId, Multigraph, VertexId, VertexSet};
