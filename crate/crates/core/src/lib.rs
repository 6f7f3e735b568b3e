//! Exact cutwidth, circular cutwidth, degeneracy and uniform sparsity for
//! small graphs, together with exact-rational evaluation of the lower bounds
//! on cutwidth in terms of degeneracy and sparsity.

pub mod bounds;
pub mod circular;
pub mod cutwidth;
pub mod degeneracy;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod rational;
pub mod report;
pub mod sparsity;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
