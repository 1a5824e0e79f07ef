//! Certified induced cycle packings, ball hitting sets and related
//! decompositions for finite undirected graphs.

pub mod certfile;
pub mod distpack;
pub mod eardecomp;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod packing;
pub mod planar;
pub mod treedecomp;

pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Path, Vertex, VertexSet};
