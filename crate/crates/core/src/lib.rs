//! Depth and Stanley depth of edge ideals of strong products of paths and
//! cycles.

pub mod error;
pub mod graph;
pub mod homological;
pub mod ideal;
pub mod replay;
pub mod serial;
pub mod stanley;
pub mod support;

pub use error::{Error, Result};
pub use support::{Support, MAX_VARS};
