//! Std companion to [`binmatch_core`]: raw binary file loading, the
//! random-text benchmark harness, table rendering and the `binmatch`
//! command-line front end.

pub mod bench;
pub mod cli;
mod error;
pub mod io;
pub mod render;

pub use error::{Error, Result};
