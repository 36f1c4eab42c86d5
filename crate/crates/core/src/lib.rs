//! Schur rings over finite abelian groups and finite commutative rings.

pub mod arith;
pub mod duality;
pub mod error;
pub mod group;
pub mod harness;
pub mod json;
pub mod limits;
pub mod report;
pub mod ring;
pub mod separating;
pub mod sring;

pub use error::{Error, Result};
