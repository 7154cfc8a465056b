pub mod bincode;
pub mod cli;
pub mod error;
pub mod extend;
pub mod lifts;
pub mod matrix;
pub mod qdc;
pub mod rings;
pub mod tables;

pub use error::{Error, Result};
