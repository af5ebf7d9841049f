//! An exact computational laboratory for finite noncommutative rings.
//!
//! Rings are finite unital algebras over a small finite field, given by
//! structure constants. Everything downstream is exact linear algebra over
//! that field: right ideals are echelon bases, the right-ideal lattice is
//! enumerated outright, and the one-sided prime predicates, ideal families
//! and filters defined on top of it are checked by exhaustive verification,
//! usually along two independent routes that are asserted to agree.

pub mod bits;
pub mod cache;
pub mod catalog;
pub mod error;
pub mod family;
pub mod field;
pub mod ideal;
pub mod lab;
pub mod module;
pub mod prime;
pub mod linalg;
pub mod ring;
pub mod search;
pub mod specfile;
pub mod report;
pub mod subring;
pub mod suite;

pub use error::{Error, Result};
