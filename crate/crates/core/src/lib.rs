//! Mixing times of the interchange process on graphs: exact small-deck
//! evolution, spectral and electrical gap bounds, canonical-path upper
//! bounds, and random graph generators for scaling sweeps.

pub mod bounds;
pub mod electrical;
pub mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod interchange;
pub mod linalg;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DistanceTable, Graph, MultiGraph};
pub use rng::RngSeed;
