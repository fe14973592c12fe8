//! Two-layer drawings of bipartite graphs and their relation to pathwidth.
//!
//! * [`graph`]: bipartite graphs and drawings (two layer orders)
//! * [`analysis`]: crossing sets, chain covers, `(s,t)`-crossings
//! * [`decompose`]: drawing to path-decomposition with a width certificate
//! * [`layout`]: path-decomposition to drawing with bounded crossing patterns
//! * [`pathwidth`]: exact pathwidth for small graphs

pub mod analysis;
pub mod caterpillar;
pub mod decompose;
pub mod error;
pub mod fuzz;
pub mod generators;
pub mod graph;
pub mod json;
pub mod layout;
pub mod pathdecomp;
pub mod pathwidth;
pub mod svg;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, EdgeIndex, Side, TwoLayerDrawing, VertexIndex};
pub use pathdecomp::PathDecomposition;
