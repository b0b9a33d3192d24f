//! Exact symbolic integration of rational functions with correct definite
//! evaluation across discontinuities of the antiderivative.

pub mod algebra;
pub mod cli;
pub mod constants;
pub mod definite;
pub mod error;
pub mod expr;
pub mod parser;
pub mod numeric;
pub mod ratint;
pub mod symmetry;

pub use error::{Error, Result};
