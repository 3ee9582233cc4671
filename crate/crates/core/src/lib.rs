//! Exact linear algebra over finite-dimensional algebras: bound quiver
//! algebras, their modules, Krull-Schmidt decompositions, injective
//! resolutions, dominant dimension, and cover / Morita-algebra checks.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod fuzz;
pub mod homological;
pub mod krullschmidt;
pub mod modules;
pub mod morita;

pub use error::{Error, Result};
