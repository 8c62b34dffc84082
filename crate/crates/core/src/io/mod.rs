//! Graph text format, named fixtures, random and planted instance generators.

pub mod catalog;
pub mod fixtures;
mod format;
mod planted;

pub use format::{parse_charges, parse_graph, serialize_graph};
pub use planted::{generate_planted, PlantedInstance, PlantedSpec};
