//! Command-line front end for `qcodes-core`: code descriptors, modulus
//! files, threaded enumeration, deterministic reports and the verification
//! targets behind `qcodes verify`.

#![allow(clippy::manual_is_multiple_of)]

pub mod commands;
pub mod descriptor;
pub mod error;
pub mod modulus_file;
pub mod parallel;
pub mod report;
pub mod session;
pub mod verify;

pub use error::CliError;
pub use report::{Report, Status};
pub use session::Session;
