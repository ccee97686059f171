//! Finite Rees matrix semigroups and polynomial-time decision procedures for
//! their term and polynomial equivalence problems.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of immutable values; file formats, IO and the command-line front
//! end live in the `rees-cli` crate.
//!
//! Indices are 0-based in every Rust API. Text forms (`Display`, the
//! polynomial parser) are 1-based.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod decide;
pub mod error;
pub mod field;
pub mod graphs;
pub mod group;
pub mod matrix;
pub mod poly;
pub mod reductions;
pub mod semigroup;
pub mod text;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use matrix::StructureMatrix;
pub use poly::{Evaluation, Polynomial, Symbol, Variable};
pub use semigroup::{CayleyTable, Element, ReesSemigroup};
