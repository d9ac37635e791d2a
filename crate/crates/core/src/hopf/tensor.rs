//! Tensor products of presented algebras as algebras on suffixed generators.

use crate::error::Result;
use crate::exactalg::{AlgebraPresentation, AlgebraRef, Poly, PolyRing};

/// `A_1 ⊗ … ⊗ A_r` on generators `g_{suffix}`, with every relation copied.
pub fn tensor_algebra(parts: &[(&AlgebraRef, &str)]) -> Result<AlgebraRef> {
    let mut names = Vec::new();
    for (alg, suffix) in parts {
        for g in alg.generators() {
            names.push(format!("{g}_{suffix}"));
        }
    }
    let ring = PolyRing::new(parts[0].0.base(), names);
    let mut extra = Vec::new();
    let mut pairs = Vec::new();
    let mut offset = 0;
    for (alg, _) in parts {
        let map: Vec<usize> = (offset..offset + alg.ngens()).collect();
        for r in alg.extra_relations() {
            extra.push(r.substitute_vars(&ring, &map));
        }
        for &(g, h) in alg.inverse_pairs() {
            pairs.push((offset + g, offset + h));
        }
        offset += alg.ngens();
    }
    AlgebraPresentation::from_parts(ring, extra, pairs)
}

/// An element of factor `A` placed into the tensor algebra at `offset`.
pub(crate) fn embed(p: &Poly, tensor: &AlgebraRef, offset: usize) -> Poly {
    let map: Vec<usize> = (offset..offset + p.ring().nvars()).collect();
    p.substitute_vars(tensor.ring(), &map)
}
