//! Exact degree statistics of horizontal visibility graphs built from
//! restricted growth sequences (equivalently, set partitions in standard
//! form).
//!
//! - [`exactnum`]: Stirling, Bell and Bernoulli numbers, power sums and
//!   shifted Dobinski sums, all arbitrary precision.
//! - [`rgs`]: restricted growth sequences, partitions, enumeration and
//!   Stam's uniform sampler.
//! - [`hvg`]: strong and weak visibility graphs.
//! - [`moments`]: closed-form edge probabilities and expectations, with an
//!   exhaustive enumeration oracle.
//! - [`series`]: truncated power series for the edge-count generating
//!   functions.
//! - [`cli`]: the command-line front end used by the `hvgrgs` binary.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod hvg;
pub mod moments;
pub mod reference_values;
pub mod rgs;
pub mod series;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
