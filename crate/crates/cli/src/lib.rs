//! Command-line front end for duality triads.
//!
//! The binary is a thin wrapper around [`run`], which takes the argument list
//! and returns captured output plus the exit status, so tests can drive every
//! verb without spawning a process.

pub mod app;
pub mod expr;
pub mod format;

pub use app::{run, Outcome};
