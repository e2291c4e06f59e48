//! Triangle geometry engine for the Yff points: barycentric geometry,
//! shape families, the center catalog, numeric property scanning with
//! deduplication, and exact certification by resultant elimination.

pub mod centers;
pub mod detect;
pub mod discover;
pub mod error;
pub mod exact;
pub mod geom;
pub mod points;
pub mod real;
pub mod verify;

pub use error::{CoreError, GeomError, Result};
