//! Roots and multiplicities of polynomials over hyperfields.
//!
//! The sign hyperfield turns root multiplicity at `1` into a sign-change
//! count, and the tropical hyperfield turns it into Newton polygon lengths.
//! Everything is computed with exact rationals.

pub mod cli;
pub mod corpus;
pub mod descartes;
pub mod error;
pub mod hyperfield;
pub mod instances;
pub mod parse;
pub mod polynomial;
pub mod rational;
pub mod ratpoly;
pub mod tropical;
pub mod verify;

pub use error::{Error, Result};
pub use hyperfield::{check_axioms, Element, HyperSet, Hyperfield, InstanceId, Trop, Value};
pub use polynomial::{multiplicity, Method, MultReport, Poly};
pub use ratpoly::RatPoly;
