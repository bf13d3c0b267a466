//! Exact computation with finitely generated Sullivan algebras over ℚ.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is immutable once
//! built, so values can be shared freely across threads.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod cdga;
pub mod emap;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod morphism;

pub use cdga::{CdgaReport, Cohomology, Derivation, FreeCdga};
pub use error::{AlgebraError, Result};
pub use graded::{q, q_frac, Context, Homogeneity, Monomial, Polynomial, Scalar, Variable};
pub use morphism::{exact_difference_homotopy, CdgaMorphism, HomotopyVerdict, HomotopyWitness};
