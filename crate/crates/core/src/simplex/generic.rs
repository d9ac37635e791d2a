//! The Gröbner engine: `B^{⊗(n+1)}` presented on variables `x_v^{(i)}`,
//! modulo the lifted relations of B and the defining ideal of the flavor.

use super::Flavor;
use crate::error::{Error, Result};
use crate::exactalg::{AlgebraPresentation, Caps, Ideal, Monomial, Poly, PolyRing, RingRef};

/// Polynomial ring on `g_i` for every generator `g` of B and slot `0 ≤ i ≤ n`.
pub fn ambient_ring(algebra: &AlgebraPresentation, n: usize) -> RingRef {
    let mut names = Vec::new();
    for i in 0..=n {
        for g in algebra.generators() {
            names.push(format!("{g}_{i}"));
        }
    }
    PolyRing::new(algebra.base(), names)
}

pub(crate) fn slot_var(algebra: &AlgebraPresentation, ambient: &RingRef, g: usize, slot: usize) -> Poly {
    Poly::var(ambient, slot * algebra.ngens() + g)
}

/// An element of B placed in slot `slot`.
pub(crate) fn lift(algebra: &AlgebraPresentation, ambient: &RingRef, p: &Poly, slot: usize) -> Poly {
    let k = algebra.ngens();
    let map: Vec<usize> = (0..k).map(|g| slot * k + g).collect();
    p.substitute_vars(ambient, &map)
}

fn d(algebra: &AlgebraPresentation, ambient: &RingRef, r: usize, s: usize, p: &Poly) -> Poly {
    &lift(algebra, ambient, p, s) - &lift(algebra, ambient, p, r)
}

/// Generators of the ideal `J_rs`: `d^{r,s}g` over the generators `g` of B.
pub fn j_generators(algebra: &AlgebraPresentation, ambient: &RingRef, r: usize, s: usize) -> Vec<Poly> {
    (0..algebra.ngens())
        .map(|g| d(algebra, ambient, r, s, &algebra.var(g)))
        .collect()
}

/// Lifted relations of B in every slot.
pub fn relation_generators(algebra: &AlgebraPresentation, ambient: &RingRef, n: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..=n {
        for rel in algebra.relations() {
            out.push(lift(algebra, ambient, rel, i));
        }
    }
    out
}

/// `J^(2) = Σ_{r<s} J_rs²` on generator pairs, plus for the strong flavor the
/// variable-level generators of `J_n`: `ε_{r,v}ε_{s,v}` and the
/// polarizations `ε_{r,v}ε_{s,w} + ε_{r,w}ε_{s,v}`.
pub fn flavor_generators(algebra: &AlgebraPresentation, ambient: &RingRef, n: usize, flavor: Flavor) -> Vec<Poly> {
    let k = algebra.ngens();
    let mut out = Vec::new();
    for s in 1..=n {
        for r in 0..s {
            let js = j_generators(algebra, ambient, r, s);
            for v in 0..k {
                for w in v..k {
                    out.push(&js[v] * &js[w]);
                }
            }
        }
    }
    if flavor == Flavor::Strong {
        for s in 2..=n {
            for r in 1..s {
                let jr = j_generators(algebra, ambient, 0, r);
                let js = j_generators(algebra, ambient, 0, s);
                for v in 0..k {
                    out.push(&jr[v] * &js[v]);
                    for w in v + 1..k {
                        out.push(&(&jr[v] * &js[w]) + &(&jr[w] * &js[v]));
                    }
                }
            }
        }
    }
    out
}

/// All monomials of total degree `deg` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(0, deg, &mut vec![0; nvars], &mut out);
    }
    out
}

pub(crate) const STABILIZATION_CAP: u32 = 4;

/// Defining ideal of the ring. For presented B the strong flavor adjoins
/// `d^{0,r}m · d^{0,s}m` for monomials `m` of growing degree until nothing new
/// appears; returns the ideal and the degree at which it stabilized.
pub(crate) fn defining_ideal(
    algebra: &AlgebraPresentation,
    ambient: &RingRef,
    n: usize,
    flavor: Flavor,
    caps: Caps,
) -> Result<(Ideal, Option<u32>)> {
    let mut gens = relation_generators(algebra, ambient, n);
    gens.extend(flavor_generators(algebra, ambient, n, flavor));
    let ideal = Ideal::with_caps(ambient, gens.clone(), caps);
    ideal.basis()?;
    if flavor == Flavor::Weak || algebra.is_free() || n < 2 {
        return Ok((ideal, None));
    }
    let mut ideal = ideal;
    for deg in 2..=STABILIZATION_CAP {
        let mut fresh = Vec::new();
        for m in monomials_of_degree(algebra.ngens(), deg) {
            let b = Poly::monomial(algebra.ring(), m, algebra.base().one());
            for s in 2..=n {
                for r in 1..s {
                    let g = &d(algebra, ambient, 0, r, &b) * &d(algebra, ambient, 0, s, &b);
                    if !ideal.contains(&g)? {
                        fresh.push(g);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Ok((ideal, Some(deg)));
        }
        gens.extend(fresh);
        ideal = Ideal::with_caps(ambient, gens.clone(), caps);
        ideal.basis()?;
    }
    Err(Error::Resource(format!(
        "strong defining ideal did not stabilize by monomial degree {STABILIZATION_CAP}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 3).len(), 1);
    }
}
