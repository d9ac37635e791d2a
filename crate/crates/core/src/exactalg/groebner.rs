//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// Resource caps for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    pub max_degree: u32,
    pub max_basis: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_degree: 12, max_basis: 5000 }
    }
}

/// Full normal form of `p` modulo `basis`. Leading coefficients of the
/// basis must be units.
pub fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let refs: Vec<&Poly> = basis.iter().collect();
    reduce_refs(p, &refs)
}

fn reduce_refs(p: &Poly, basis: &[&Poly]) -> Poly {
    let ring = p.ring().clone();
    let base = ring.base();
    let mut rem: Vec<(Monomial, crate::exactalg::Scalar)> = Vec::new();
    let mut cur = p.clone();
    'outer: while let Some((m, c)) = cur.leading().cloned() {
        for g in basis {
            let (lm, lc) = g.leading().expect("zero polynomial in a basis");
            if lm.divides(&m) {
                let q = lm.quotient_of(&m);
                let f = if base.is_one(lc) {
                    c.clone()
                } else {
                    base.mul(&c, &base.inv(lc).expect("non-unit leading coefficient"))
                };
                cur = cur.sub_scaled(&f, &q, g);
                continue 'outer;
            }
        }
        rem.push((m, c));
        let mut t = cur.into_terms();
        t.remove(0);
        cur = Poly::from_sorted(&ring, t);
    }
    Poly::from_sorted(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    alive: bool,
}

struct Builder {
    polys: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    heap: BinaryHeap<Reverse<(u32, usize)>>,
    caps: Caps,
}

impl Builder {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i].leading().expect("nonzero").0
    }

    fn active_refs(&self) -> Vec<&Poly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    fn push_pair(&mut self, i: usize, j: usize, lcm: Monomial) {
        let idx = self.pairs.len();
        self.heap.push(Reverse((lcm.degree(), idx)));
        self.pairs.push(Pair { i, j, lcm, alive: true });
    }

    /// Gebauer–Möller update with a new basis element.
    fn insert(&mut self, h: Poly) -> Result<()> {
        if let Some(d) = h.total_degree() {
            if d > self.caps.max_degree {
                return Err(Error::Resource(format!(
                    "basis element of degree {d} exceeds the degree cap {}",
                    self.caps.max_degree
                )));
            }
        }
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let lh = self.lm(hi).clone();

        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lm(g);
                (g, lh.lcm(lg), lh.coprime(lg))
            })
            .collect();
        let mut keep = vec![false; cands.len()];
        for (k, (_, l, coprime)) in cands.iter().enumerate() {
            if *coprime {
                keep[k] = true;
                continue;
            }
            let dominated_later = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(l));
            let dominated_kept = cands[..k]
                .iter()
                .zip(&keep)
                .any(|((_, l2, _), kept)| *kept && l2.divides(l));
            keep[k] = !dominated_later && !dominated_kept;
        }

        for p in self.pairs.iter_mut().filter(|p| p.alive) {
            if lh.divides(&p.lcm) {
                let li = self.polys[p.i].leading().unwrap().0.lcm(&lh);
                let lj = self.polys[p.j].leading().unwrap().0.lcm(&lh);
                if li != p.lcm && lj != p.lcm {
                    p.alive = false;
                }
            }
        }

        for (k, (g, l, coprime)) in cands.into_iter().enumerate() {
            if keep[k] && !coprime {
                self.push_pair(g, hi, l);
            }
        }

        for g in 0..hi {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
        let size = self.active.iter().filter(|a| **a).count();
        if size > self.caps.max_basis {
            return Err(Error::Resource(format!(
                "basis size {size} exceeds the cap {}",
                self.caps.max_basis
            )));
        }
        Ok(())
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> Poly {
        let f = &self.polys[i];
        let g = &self.polys[j];
        let base = f.base();
        let a = f.leading().unwrap().0.quotient_of(lcm);
        let b = g.leading().unwrap().0.quotient_of(lcm);
        f.mul_term(&a, &base.one()).sub_scaled(&base.one(), &b, g)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by increasing leading monomial. Requires a field base ring.
pub fn groebner_basis(gens: &[Poly], caps: &Caps) -> Result<Vec<Poly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if !ring.base().is_field() {
        return Err(Error::Unsupported(format!(
            "Gröbner bases over {} (not a field)",
            ring.base()
        )));
    }
    let mut input: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        let (la, lb) = (&a.leading().unwrap().0, &b.leading().unwrap().0);
        ring.cmp(la, lb)
    });
    let mut b = Builder {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        heap: BinaryHeap::new(),
        caps: *caps,
    };
    for g in input {
        let h = reduce_refs(&g, &b.active_refs());
        if !h.is_zero() {
            b.insert(h.monic().expect("field"))?;
        }
    }
    while let Some(Reverse((_, idx))) = b.heap.pop() {
        if !b.pairs[idx].alive {
            continue;
        }
        b.pairs[idx].alive = false;
        let (i, j, lcm) = (b.pairs[idx].i, b.pairs[idx].j, b.pairs[idx].lcm.clone());
        let s = b.s_poly(i, j, &lcm);
        let h = reduce_refs(&s, &b.active_refs());
        if !h.is_zero() {
            b.insert(h.monic().expect("field"))?;
        }
    }

    let mut basis: Vec<Poly> = b.active_refs().into_iter().cloned().collect();
    for k in 0..basis.len() {
        let (lm, lc) = basis[k].leading().unwrap().clone();
        let tail = Poly::from_sorted(&ring, basis[k].terms()[1..].to_vec());
        let others: Vec<&Poly> = basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p).collect();
        let tail = reduce_refs(&tail, &others);
        let mut t = vec![(lm, lc)];
        t.extend(tail.into_terms());
        basis[k] = Poly::from_sorted(&ring, t);
    }
    basis.sort_by(|a, b| ring.cmp(&a.leading().unwrap().0, &b.leading().unwrap().0));
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{BaseRing, PolyRing};

    fn parse_all(r: &crate::exactalg::RingRef, xs: &[&str]) -> Vec<Poly> {
        xs.iter().map(|s| Poly::parse(r, s).unwrap()).collect()
    }

    #[test]
    fn two_generator_example() {
        let r = PolyRing::new(BaseRing::Rationals, ["x", "y"]);
        let gb = groebner_basis(&parse_all(&r, &["x^2 - y", "y"]), &Caps::default()).unwrap();
        assert_eq!(gb, parse_all(&r, &["y", "x^2"]));
    }

    #[test]
    fn zero_ideal_and_redundancy() {
        let r = PolyRing::new(BaseRing::Rationals, ["x"]);
        assert!(groebner_basis(&[Poly::zero(&r)], &Caps::default()).unwrap().is_empty());
        let gb = groebner_basis(&parse_all(&r, &["x", "x^2"]), &Caps::default()).unwrap();
        assert_eq!(gb, parse_all(&r, &["x"]));
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(BaseRing::Rationals, ["x", "y", "z", "w"]);
        let gens = parse_all(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let gb = groebner_basis(&gens, &Caps::default()).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(reduce(g, &gb).is_zero());
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let r = PolyRing::new(BaseRing::Rationals, ["x", "y"]);
        let gens = parse_all(&r, &["x^3 - y^2", "x*y^2 - 1"]);
        let caps = Caps { max_degree: 3, max_basis: 5000 };
        assert!(matches!(groebner_basis(&gens, &caps), Err(Error::Resource(_))));
    }

    #[test]
    fn non_field_rejected() {
        let r = PolyRing::new(BaseRing::integers_mod(6).unwrap(), ["x"]);
        assert!(matches!(
            groebner_basis(&parse_all(&r, &["x"]), &Caps::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
