//! Exact symbolic engine for the rings of infinitesimal simplices, scalar and
//! group-valued combinatorial differential forms, and the non-abelian de Rham
//! differentials built from them.

pub mod error;
pub mod exactalg;
pub mod forms;
pub mod gforms;
pub mod hopf;
pub mod random;
pub mod rng;
pub mod simplex;
pub mod verify;

pub use error::{Error, Result};
