pub mod coeff;
pub mod error;

pub use error::{Error, Result};
pub mod cellcheck;
pub mod cli;
pub mod hecke;
pub mod heckeclifford;
pub mod linalg;
pub mod symgroup;
pub mod tableau;
