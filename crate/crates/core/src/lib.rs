//! Generating vectors, braid orbits, equivariant tilings and partial
//! isometries for finite groups acting on a surface with quotient a sphere
//! branched over four points.

pub mod braid;
pub mod cayley;
pub mod cli;
pub mod error;
pub mod genvec;
pub mod group;
pub mod patch;
pub mod pipeline;
pub mod tiling;

pub use error::{Error, Result};
pub use group::{Elem, GroupTable};
