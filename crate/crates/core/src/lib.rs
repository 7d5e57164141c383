//! Exact computations in rings of integers of global fields.

pub mod admissible;
pub mod arith;
pub mod class_group;
pub mod cli;
pub mod domain;
pub mod error;
pub mod fractional;
pub mod function_field;
pub mod ideals;
pub mod lattice;
pub mod number_field;
pub mod order;
pub mod poly;
pub mod qmat;

pub use error::{Error, Result};
