//! Hyperbolic motions of the upper half-plane and their phase colorings on
//! the standard models of the hyperbolic plane.

pub mod colorings;
pub mod cplx;
mod error;
pub mod figures;
pub mod models;
pub mod motions;
pub mod mesh;
pub mod raster;
pub mod verify;

pub use error::{Error, Result};
