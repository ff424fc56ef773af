//! Exact structure constants for Hopf algebras, Doi-Koppinen data and
//! quantum Yetter-Drinfel'd modules, with integral solvers and identity
//! checkers.

pub mod actions;
pub mod cli;
pub mod dk;
pub mod error;
pub mod format;
pub mod gallery;
pub mod kernel;
pub mod report;
pub mod structures;
pub mod yd;

pub use error::{Error, Result};
