//! Toolkit for b-chromatic analysis of graphs: exact solvers for the
//! chromatic, b-chromatic, and dominant-vertex numbers, constructive
//! coloring procedures for regular graphs with girth constraints, graph
//! generators, and DIMACS-style I/O.

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;

pub use coloring::{Color, Coloring, DominanceProfile};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
