//! Quaternary cyclic codes of length `4^m - 1` whose defining sets are cut out
//! by the parity of the base-4 digit sum, together with the machinery needed to
//! check their parameters: GF(4^m) arithmetic, cyclotomic defining sets,
//! generator polynomials, duals and duadic/LCD predicates, weight enumeration,
//! the MacWilliams transform, BCH-with-multiplier bounds, and the derived
//! binary codes (subfield subcode, trace code, Gray image).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports,
//! threading and the command line live in the `qcodes` companion crate.

#![no_std]
// XOR is field addition; `% 2` reads as digit parity
#![allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod codes;
pub mod derived;
pub mod distance;
pub mod error;
pub mod galois;
pub mod linear;
pub mod poly;
pub mod weights;

pub use codes::CyclicCode;
pub use distance::{DistanceReport, Method, WeightDistribution};
pub use error::{Error, Result};
pub use galois::{Ext, FieldContext, Gf4};
pub use linear::{LinearCode, QVec};
pub use poly::{BaseField, Poly};
pub use weights::DefiningSet;

/// Default enumeration budget: at most `2^22` codewords per exhaustive pass.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Default seed for the sampling paths.
pub const DEFAULT_SEED: u64 = 0xC0DE;

/// Default number of random codewords drawn by sampling paths.
pub const DEFAULT_SAMPLES: usize = 10_000;
