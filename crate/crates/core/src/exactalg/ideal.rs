//! Ideals with a lazily computed, cached Gröbner basis.

use std::fmt;
use std::sync::OnceLock;

use super::groebner::{groebner_basis, reduce, Caps};
use super::poly::{same_ring, MonomialOrder, Poly, PolyRing, RingRef};
use crate::error::{Error, Result};

pub struct Ideal {
    ring: RingRef,
    gens: Vec<Poly>,
    caps: Caps,
    basis: OnceLock<Result<Vec<Poly>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), caps: self.caps, basis }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Poly>) -> Self {
        Self::with_caps(ring, gens, Caps::default())
    }

    pub fn with_caps(ring: &RingRef, gens: impl IntoIterator<Item = Poly>, caps: Caps) -> Self {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(same_ring(g.ring(), ring), "generator from a different ring");
        }
        Ideal { ring: ring.clone(), gens, caps, basis: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn basis(&self) -> Result<&[Poly]> {
        self.basis
            .get_or_init(|| groebner_basis(&self.gens, &self.caps))
            .as_ref()
            .map(|b| b.as_slice())
            .map_err(Clone::clone)
    }

    fn check(&self, p: &Poly) -> Result<()> {
        if same_ring(p.ring(), &self.ring) {
            Ok(())
        } else {
            Err(Error::Context("element and ideal live in different rings".into()))
        }
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        self.check(p)?;
        Ok(reduce(p, self.basis()?))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::Context("ideals live in different rings".into()));
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::Context("ideals live in different rings".into()));
        }
        let gens = self.gens.iter().chain(&other.gens).cloned();
        Ok(Ideal::with_caps(&self.ring, gens, self.caps))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::Context("ideals live in different rings".into()));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(Ideal::with_caps(&self.ring, gens, self.caps))
    }

    /// `I ∩ J = (t·I + (1 − t)·J) ∩ R`, eliminating an auxiliary `t`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::Context("ideals live in different rings".into()));
        }
        let n = self.ring.nvars();
        let mut names = vec!["_t".to_string()];
        names.extend(self.ring.vars().iter().cloned());
        let big = PolyRing::with_order(self.ring.base(), names, MonomialOrder::Eliminate(1));
        let lift: Vec<usize> = (1..=n).collect();
        let t = Poly::var(&big, 0);
        let one_minus_t = &Poly::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.substitute_vars(&big, &lift));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.substitute_vars(&big, &lift));
        }
        let basis = groebner_basis(&gens, &self.caps)?;
        let mut keep = vec![true; n + 1];
        keep[0] = false;
        let down: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let out = basis
            .iter()
            .filter(|g| g.only_vars(&keep))
            .map(|g| g.substitute_vars(&self.ring, &down));
        Ok(Ideal::with_caps(&self.ring, out, self.caps))
    }

    /// Power `I^k` by repeated products of generator lists.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::with_caps(&self.ring, [Poly::one(&self.ring)], self.caps);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::BaseRing;

    fn ring() -> RingRef {
        PolyRing::new(BaseRing::Rationals, ["x", "y"])
    }

    fn ideal(r: &RingRef, xs: &[&str]) -> Ideal {
        Ideal::new(r, xs.iter().map(|s| Poly::parse(r, s).unwrap()))
    }

    #[test]
    fn membership() {
        let r = ring();
        assert!(ideal(&r, &["x"]).contains(&Poly::parse(&r, "x^2 + x*y").unwrap()).unwrap());
        assert!(!ideal(&r, &["x"]).contains(&Poly::parse(&r, "y").unwrap()).unwrap());
    }

    #[test]
    fn product_and_intersection() {
        let r = ring();
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        let xy = ideal(&r, &["x*y"]);
        assert!(x.product(&y).unwrap().equals(&xy).unwrap());
        assert!(x.intersection(&y).unwrap().equals(&xy).unwrap());
        let x2 = ideal(&r, &["x^2", "y"]);
        let meet = x2.intersection(&ideal(&r, &["x", "y^2"])).unwrap();
        assert!(meet.equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn normal_form_idempotent() {
        let r = ring();
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        let p = Poly::parse(&r, "x^5 + 3*y^4 - x*y").unwrap();
        let n = i.normal_form(&p).unwrap();
        assert_eq!(i.normal_form(&n).unwrap(), n);
    }
}
