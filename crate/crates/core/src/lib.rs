//! Pyramitoids, their small covers, and integral homology of the resulting
//! 3-manifolds.

pub mod error;
pub mod polytope;
pub mod pyramitoid;
pub mod enumeration;
pub mod coxeter;
pub mod homology;
pub mod small_cover;
pub mod surgery;
pub mod quadrics;
pub mod fixtures;
pub mod verify;

pub use error::{Error, Result};
