//! Multidimensional periodic arrays over finite fields: constructions by the
//! composition method and computation of their multidimensional linear
//! complexity through three independent engines.

pub mod cli;
pub mod complexity;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod ff;
pub mod mdarray;

pub use error::{Error, Result};
pub use ff::{Field, FieldElement};
pub use mdarray::{MonomialOrder, PeriodicArray, Polynomial};
