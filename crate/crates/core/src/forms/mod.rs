//! Scalar combinatorial forms `Ψ`, classical forms `Ω`, and the maps between them.

mod classical;
mod comb;

pub use classical::{ClassicalForm, MultiDerivation};
pub use comb::{degeneracy_witness, ScalarCombForm};
