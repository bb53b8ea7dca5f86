//! Cochain-level Steenrod squares over F2 and certificates for Adem relations.
//!
//! The crate builds cup-i products from interval diagrams, the
//! Barratt–Eccles and surjection operads with the table reduction between
//! them, and from these the chain-level data whose coboundary realises an
//! Adem relation on an explicit cocycle.

pub mod adem;
pub mod binom;
pub mod chain_maps;
pub mod cli;
pub mod error;
pub mod f2;
pub mod io;
pub mod operads;
pub mod perm;
pub mod selftest;
pub mod simplicial;
pub mod steenrod;

pub use error::{Error, Result};
