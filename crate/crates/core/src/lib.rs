//! Exact base 3/2 arithmetic and the integer sequences it produces.
//!
//! Numerals are computed with the exploding-dots machine: a box holding
//! three dots clears them and puts two dots in the box to its left. Every
//! value is an exact rational, so there is no floating point anywhere.
//!
//! ```
//! use threehalves::numeral::{encode, Numeral};
//!
//! let n = encode(32);
//! assert_eq!(n.to_string(), "212022");
//! let back: Numeral = "212022".parse().unwrap();
//! assert_eq!(back.decode_integer().unwrap(), 32u32.into());
//! ```
//!
//! Modules:
//!
//! - [`numeral`]: encoding, decoding, digitwise addition, the carry machine.
//! - [`even_tree`]: the tree of even integers and its level counts.
//! - [`extremes`]: smallest and largest `k`-digit integers, evenberry and evenmelon.
//! - [`ap3`]: the greedy partition into 3-AP-free classes.
//! - [`divisibility`]: the trailing-zero and mod 5 digit tests.
//! - [`sequences`]: powers of 2 and 3, look-and-say.
//! - [`fibs`]: sorted and reverse-sorted Fibonacci-like orbits and their classification.
//! - [`oeis`]: the sequence registry and b-file checking.
//! - [`config`]: defaults for the command line.

pub mod ap3;
pub mod config;
pub mod divisibility;
pub mod even_tree;
pub mod extremes;
pub mod fibs;
pub mod numeral;
pub mod oeis;
pub mod sequences;

pub use numeral::{decode_digits, encode, encode_integer, BaseSpec, ExactValue, Numeral};

use thiserror::Error;

/// Any error the library reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numeral(#[from] numeral::NumeralError),
    #[error(transparent)]
    Tree(#[from] even_tree::TreeError),
    #[error(transparent)]
    Extremes(#[from] extremes::ExtremesError),
    #[error(transparent)]
    Divisibility(#[from] divisibility::DivisibilityError),
    #[error(transparent)]
    Sequence(#[from] sequences::SequenceError),
    #[error(transparent)]
    Fibs(#[from] fibs::FibsError),
    #[error(transparent)]
    Oeis(#[from] oeis::OeisError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
}
