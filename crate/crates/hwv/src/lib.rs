//! JSON formats, the command-line interface and the acceptance suite for
//! [`hwv_core`].

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod json;

pub use error::{Error, Result};
