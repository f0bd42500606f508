//! Rigidity, persistence and merging of directed formations.

mod dim;
mod error;
pub mod gen;
pub mod graph;
pub mod merge;
pub mod meta;
pub mod persistence;
pub mod rigidity;

pub use dim::Dim;
pub use error::{Error, Result};
