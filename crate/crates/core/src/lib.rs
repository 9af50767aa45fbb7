//! Exact computation and certificate construction for the 1-robust
//! chromatic number χ₁, robust independence number α₁ and robust clique
//! number ω₁ of simple graphs.
//!
//! A 1-selection lets every vertex delete at most one incident edge; the
//! robust parameters optimize the ordinary ones over the resulting graphs.

pub mod chordal;
pub mod closed_form;
pub mod constructions;
pub mod crosscheck;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod selection;

pub use error::{Error, Result};
pub use exact::Limits;
pub use graph::{Edge, EdgeSubset, Graph};
pub use selection::Selection;
