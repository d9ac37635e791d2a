//! Random instances drawn from [`Lcg64`]: polynomials, classical forms,
//! classical representations and group points.

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, Monomial, Poly, RingRef};
use crate::forms::ClassicalForm;
use crate::gforms::ClassicalRep;
use crate::hopf::{GroupPoint, HopfRef};
use crate::rng::Lcg64;
use crate::simplex::Flavor;

/// Bounds for random polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolyBounds {
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff: i64,
}

impl Default for PolyBounds {
    fn default() -> Self {
        PolyBounds { max_degree: 2, max_terms: 3, coeff: 3 }
    }
}

/// A random element of B in the coordinate generators (normalized).
pub fn poly(rng: &mut Lcg64, alg: &AlgebraRef, b: PolyBounds) -> Poly {
    let coords = alg.coordinates();
    let n = alg.ngens();
    let base = alg.base();
    let mut acc = Poly::zero(alg.ring());
    let terms = 1 + rng.below(b.max_terms as u64) as usize;
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let deg = rng.below(b.max_degree as u64 + 1) as u32;
        for _ in 0..deg {
            if coords.is_empty() {
                break;
            }
            e[coords[rng.below(coords.len() as u64) as usize]] += 1;
        }
        let c = rng.range(-b.coeff, b.coeff);
        acc = &acc + &Poly::monomial(alg.ring(), Monomial::from_exponents(e), base.from_int(c));
    }
    alg.normalize(&acc)
}

/// A random polynomial in all variables of a ring.
pub fn ring_poly(rng: &mut Lcg64, ring: &RingRef, b: PolyBounds) -> Poly {
    let n = ring.nvars();
    let base = ring.base();
    let mut acc = Poly::zero(ring);
    let terms = 1 + rng.below(b.max_terms as u64) as usize;
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let deg = rng.below(b.max_degree as u64 + 1) as u32;
        for _ in 0..deg {
            if n > 0 {
                e[rng.below(n as u64) as usize] += 1;
            }
        }
        let c = rng.range(-b.coeff, b.coeff);
        acc = &acc + &Poly::monomial(ring, Monomial::from_exponents(e), base.from_int(c));
    }
    acc
}

/// A random permutation of `{0..n}`.
pub fn permutation(rng: &mut Lcg64, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    rng.shuffle(&mut p);
    p
}

/// A random classical `n`-form with a few terms.
pub fn classical(rng: &mut Lcg64, alg: &AlgebraRef, flavor: Flavor, degree: usize, b: PolyBounds) -> Result<ClassicalForm> {
    let k = alg.coordinates().len();
    let mut acc = ClassicalForm::zero(alg, flavor, degree);
    if degree == 0 {
        return Ok(ClassicalForm::function(alg, flavor, &poly(rng, alg, b)));
    }
    for _ in 0..2 {
        let pattern: Vec<usize> = (0..degree).map(|_| rng.below(k.max(1) as u64) as usize).collect();
        acc = acc.add(&ClassicalForm::term(alg, flavor, &poly(rng, alg, b), &pattern)?)?;
    }
    Ok(acc)
}

pub fn rep(rng: &mut Lcg64, group: &HopfRef, alg: &AlgebraRef, degree: usize, b: PolyBounds) -> Result<ClassicalRep> {
    (0..group.colie().dim()).map(|_| classical(rng, alg, Flavor::Strong, degree, b)).collect()
}

/// A random B-point of a group without extra relations. Invertible
/// generators get `±c·m` with `c` a small unit of the base ring and `m` a
/// monomial in the inverted generators of B.
pub fn point(rng: &mut Lcg64, group: &HopfRef, alg: &AlgebraRef, b: PolyBounds) -> Result<GroupPoint<AlgebraRef>> {
    let galg = group.algebra();
    if !galg.extra_relations().is_empty() {
        return Err(Error::Unsupported(format!("random points of `{}` with extra relations", group.name())));
    }
    let base = alg.base();
    let units: Vec<i64> = (1..=3).filter(|&c| base.is_unit(&base.from_int(c))).collect();
    let mut images: Vec<Option<Poly>> = vec![None; galg.ngens()];
    for g in 0..galg.ngens() {
        if images[g].is_some() {
            continue;
        }
        match galg.inverse_partner(g) {
            Some(h) => {
                let c = units[rng.below(units.len() as u64) as usize] * if rng.coin() { 1 } else { -1 };
                let mut u = Poly::constant(alg.ring(), base.from_int(c));
                for &(x, _) in alg.inverse_pairs() {
                    if rng.coin() {
                        u = &u * &alg.var(x);
                    }
                }
                let u = alg.normalize(&u);
                let inv = alg.unit_inverse(&u)?;
                images[g] = Some(u);
                images[h] = Some(inv);
            }
            None => images[g] = Some(poly(rng, alg, b)),
        }
    }
    GroupPoint::new(group, alg, images.into_iter().map(|p| p.expect("filled")).collect())
}
