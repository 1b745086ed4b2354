//! Exact highest-weight-vector machinery for plethysms `Sym^d Sym^n V`.
//!
//! Tableaux with content `d × n` label spanning highest weight vectors
//! `v_T`. This crate evaluates them combinatorially at power-sum points,
//! lifts them across inner and outer degrees, checks them against
//! brute-force oracles, and assembles occurrence certificates for the
//! coordinate ring of the determinant orbit closure.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.

#![no_std]

extern crate alloc;

mod error;

pub mod arith;

pub mod budget;
pub mod constructions;
pub mod contraction;
pub mod lifting;
pub mod linalg;
pub mod occurrence;
pub mod oracle;
pub mod partition;
pub mod symtensor;
pub mod tableau;

pub use budget::Budget;
pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use partition::Partition;
pub use symtensor::{Exponent, PowerSumPoint, SymPoly};
pub use tableau::{Tableau, TableauClass};

