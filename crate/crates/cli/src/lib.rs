//! Command-line surface for `fockcanon`: argument parsing, file formats and
//! the acceptance battery behind `fockcanon verify`.

// `!(x > y)` is used deliberately so that NaN fails
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod formats;
pub mod verify;

pub use error::CliError;
