pub mod cli;
pub mod error;
pub mod index;
pub mod matrix;
pub mod parametric;
pub mod ring;
pub mod solvers;
pub mod subres;
pub mod upoly;

pub use error::{Error, Result};
