//! Text format, command line and reproduction report on top of
//! `sullivan-core`.

pub mod cli;
pub mod dsl;
pub mod report;
pub mod reproduce;

pub use sullivan_core;
