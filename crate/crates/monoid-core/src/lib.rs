//! Arithmetic of numerical monoids, specialized for generator intervals in
//! arithmetic progression and for the question of which generators can be
//! dropped without changing the monoid's factorization-length behavior.
//!
//! The crate is built around three independent computation routes that the
//! test suite plays against each other:
//!
//! * a dynamic-programming [`LengthTable`] that computes length sets for any
//!   generator list without materializing factorizations,
//! * closed forms on [`ArithmeticalMonoid`] for membership, length sets,
//!   and Frobenius numbers of progressions `a, a+d, ..., a+wd`,
//! * an exhaustive, budgeted factorization search usable as a brute-force
//!   oracle.
//!
//! On top of those sit the omission analyses: whether dropping a set of
//! interior generators preserves the collection of length sets or the
//! Frobenius number ([`omission`]), and the simplicial complex formed by all
//! length-preserving omission sets ([`complex`]).
//!
//! `no_std` + `alloc`; anything involving files, threads, or clocks lives in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod arithmetical;
pub mod complex;
pub mod length;
pub mod monoid;
pub mod omission;

pub use arithmetical::{ArithmeticalMonoid, CanonicalCoords};
pub use complex::{ComplexOptions, OmissionComplex, SurveyRow, Violation};
pub use error::{Error, Result};
pub use length::{LengthSet, LengthTable};
pub use monoid::{Factorization, NumericalMonoid, DEFAULT_ORACLE_BUDGET};
pub use omission::{
    BoundaryMismatch, BoundaryReport, LengthDecider, OmissionVerdict, Shortcut, TightnessRow,
};
