//! Palette-minimizing proper edge colorings of Cartesian product graphs.
//!
//! The crate provides graph generators and products, edge colorings and their
//! palettes, an exact chromatic-index solver, explicit product constructions
//! with few palettes, the even cycle decomposition of odd tori, Θ-classes of
//! partial cubes, and an exhaustive palette-index oracle that certifies the
//! constructions on small instances.

pub mod budget;
pub mod chromatic;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod theta;
pub mod torus;
pub mod verify;

pub use budget::Budget;
pub use coloring::{Color, EdgeColoring, Palette, PaletteSummary};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use matching::Matching;
