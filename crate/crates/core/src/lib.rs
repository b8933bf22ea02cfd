pub mod error;
pub mod exact;
pub mod geometry;
pub mod geproci;
pub mod group;
pub mod interpolation;
pub mod klein;
pub mod report;
pub mod sampling;
pub mod subconfigs;

pub use error::{Error, Result};
