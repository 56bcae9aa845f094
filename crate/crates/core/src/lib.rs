//! Exact engines for duality triads.
//!
//! A duality triad is fixed by three index-only weight sequences `i_k`, `q_k`
//! and `d_k`. From them this crate builds
//!
//! - the connection-constant triangle `c[n][k]` of the forward recurrence
//!   `c[n+1][k] = i[k-1] c[n][k-1] + q[k] c[n][k] + d[k+1] c[n][k+1]`
//!   ([`triangle`]), together with the tridiagonal transition matrix whose
//!   powers drive the same row dynamics ([`matrix`]);
//! - the triad polynomial sequence solving the dual recurrence
//!   `x P[n] = d[n] P[n-1] + q[n] P[n] + i[n] P[n+1]` ([`polynomials`]);
//! - an independent check that `x^n = sum_k c[n][k] P[k]` ([`duality`]).
//!
//! [`catalog`] carries the classical triads (Pascal, Stirling, Hermite,
//! Laguerre, Lah, Tchebychev, Newton-Gregory) with closed-form oracles, and
//! [`path_oracle`] recounts every triangle by brute-force path enumeration.
//!
//! All arithmetic is exact ([`ExactScalar`]); the crate is `no_std` and only
//! needs `alloc`.
//!
//! ```
//! use triads_core::{catalog, triangle::triangle};
//!
//! let stirling = catalog::builtin("stirling2").unwrap();
//! let tri = triangle(&stirling.triad, 5).unwrap();
//! let row: Vec<String> = tri.rows[5].iter().map(|c| c.to_string()).collect();
//! assert_eq!(row, ["0", "1", "15", "25", "10", "1"]);
//! ```
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod duality;
mod error;
pub mod matrix;
pub mod path_oracle;
pub mod polynomials;
mod scalar;
pub mod sequence;
pub mod triangle;

pub use error::{Result, TriadError};
pub use polynomials::Polynomial;
pub use scalar::{ExactScalar, ParseScalarError};
pub use sequence::{SequenceSpec, TriadSpec};
pub use triangle::ConnectionTriangle;

/// One row of a ragged lower-triangular array; row `n` holds entries `0..=n`.
pub type Row = alloc::vec::Vec<ExactScalar>;
