//! Finitely presented commutative algebras with declared inverse pairs.

use std::fmt;
use std::sync::Arc;

use super::groebner::Caps;
use super::ideal::Ideal;
use super::poly::{Monomial, Poly, PolyRing, RingRef};
use super::scalar::{BaseRing, Scalar};
use super::CommAlgebra;
use crate::error::{Error, Result};

/// `B = R[g_1..g_k] / (relations)`. Each inverse pair `(g, ḡ)` contributes
/// the relation `g·ḡ − 1`.
pub struct AlgebraPresentation {
    ring: RingRef,
    relations: Vec<Poly>,
    inverse_pairs: Vec<(usize, usize)>,
    extra: Vec<Poly>,
    ideal: Ideal,
}

pub type AlgebraRef = Arc<AlgebraPresentation>;

impl fmt::Debug for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({} [{}]", self.ring.base(), self.ring.vars().join(","))?;
        for r in &self.relations {
            write!(f, "; {r}")?;
        }
        write!(f, ")")
    }
}

impl AlgebraPresentation {
    pub fn free<S: Into<String>>(base: BaseRing, names: impl IntoIterator<Item = S>) -> AlgebraRef {
        Self::new(base, names, &[], &[]).expect("free algebra")
    }

    /// Builds a presentation; relations are parsed in the generator names,
    /// inverse pairs are given by name.
    pub fn new<S: Into<String>>(
        base: BaseRing,
        names: impl IntoIterator<Item = S>,
        relations: &[&str],
        inverse_pairs: &[(&str, &str)],
    ) -> Result<AlgebraRef> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let ring = PolyRing::new(base, names);
        let extra = relations
            .iter()
            .map(|r| Poly::parse(&ring, r))
            .collect::<Result<Vec<_>>>()?;
        let mut pairs = Vec::new();
        for (g, h) in inverse_pairs {
            let gi = ring
                .var_index(g)
                .ok_or_else(|| Error::Presentation(format!("unknown generator `{g}`")))?;
            let hi = ring
                .var_index(h)
                .ok_or_else(|| Error::Presentation(format!("unknown generator `{h}`")))?;
            pairs.push((gi, hi));
        }
        Self::from_parts(ring, extra, pairs)
    }

    pub fn from_parts(ring: RingRef, extra: Vec<Poly>, inverse_pairs: Vec<(usize, usize)>) -> Result<AlgebraRef> {
        let mut seen = vec![false; ring.nvars()];
        for &(g, h) in &inverse_pairs {
            if g == h || seen[g] || seen[h] {
                return Err(Error::Presentation("a generator appears in two inverse pairs".into()));
            }
            seen[g] = true;
            seen[h] = true;
        }
        let extra: Vec<Poly> = extra.into_iter().filter(|p| !p.is_zero()).collect();
        let mut relations: Vec<Poly> = inverse_pairs
            .iter()
            .map(|&(g, h)| &(&Poly::var(&ring, g) * &Poly::var(&ring, h)) - &Poly::one(&ring))
            .collect();
        relations.extend(extra.iter().cloned());
        let ideal = Ideal::with_caps(&ring, relations.clone(), Caps::default());
        if !extra.is_empty() {
            ideal.basis()?;
        }
        Ok(Arc::new(AlgebraPresentation { ring, relations, inverse_pairs, extra, ideal }))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn base(&self) -> BaseRing {
        self.ring.base()
    }

    pub fn generators(&self) -> &[String] {
        self.ring.vars()
    }

    pub fn ngens(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    /// Relations other than the inverse-pair relations.
    pub fn extra_relations(&self) -> &[Poly] {
        &self.extra
    }

    pub fn inverse_pairs(&self) -> &[(usize, usize)] {
        &self.inverse_pairs
    }

    pub fn relation_ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// A polynomial ring with some generators inverted and nothing else.
    pub fn is_localized_free(&self) -> bool {
        self.extra.is_empty()
    }

    /// Generators whose differentials form a basis of Ω¹ when the algebra is
    /// localized-free: everything except the second member of inverse pairs.
    pub fn coordinates(&self) -> Vec<usize> {
        (0..self.ngens())
            .filter(|g| !self.inverse_pairs.iter().any(|&(_, h)| h == *g))
            .collect()
    }

    pub fn inverse_partner(&self, g: usize) -> Option<usize> {
        self.inverse_pairs.iter().find_map(|&(a, b)| {
            if a == g {
                Some(b)
            } else if b == g {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn var(&self, g: usize) -> Poly {
        Poly::var(&self.ring, g)
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Ok(self.normalize(&Poly::parse(&self.ring, text)?))
    }

    /// Canonical representative modulo the relations.
    pub fn normalize(&self, p: &Poly) -> Poly {
        if self.relations.is_empty() {
            return p.clone();
        }
        if self.extra.is_empty() {
            let terms = p.terms().iter().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                for &(g, h) in &self.inverse_pairs {
                    let k = e[g].min(e[h]);
                    e[g] -= k;
                    e[h] -= k;
                }
                (Monomial::from_exponents(e), c.clone())
            });
            return Poly::from_terms(&self.ring, terms);
        }
        self.ideal.normal_form(p).expect("relation basis computed at construction")
    }

    pub fn is_zero_elem(&self, p: &Poly) -> bool {
        self.normalize(p).is_zero()
    }

    /// Derivation `∂/∂c` for a coordinate `c`, honouring `c·c̄ = 1`.
    /// Only meaningful for localized-free algebras.
    pub fn derivation(&self, p: &Poly, coord: usize) -> Poly {
        let mut d = p.partial_derivative(coord).expect("coordinate in range");
        if let Some(h) = self.inverse_partner(coord) {
            let dh = p.partial_derivative(h).expect("generator in range");
            let hb = self.var(h);
            d = &d - &(&(&hb * &hb) * &dh);
        }
        self.normalize(&d)
    }

    /// Inverse of a unit of the form `c·∏ g^e` with every `g` invertible.
    pub fn unit_inverse(&self, p: &Poly) -> Result<Poly> {
        let p = self.normalize(p);
        let base = self.base();
        if p.len() != 1 {
            return Err(Error::Unit(format!("`{p}` is not a recognised unit")));
        }
        let (m, c) = &p.terms()[0];
        let cinv = base
            .inv(c)
            .ok_or_else(|| Error::Unit(format!("coefficient {c} is not invertible")))?;
        let mut e = vec![0u32; self.ngens()];
        for (g, &k) in m.exponents().iter().enumerate() {
            if k == 0 {
                continue;
            }
            let h = self
                .inverse_partner(g)
                .ok_or_else(|| Error::Unit(format!("`{p}` is not a recognised unit")))?;
            e[h] += k;
        }
        Ok(self.normalize(&Poly::monomial(&self.ring, Monomial::from_exponents(e), cinv)))
    }
}

impl CommAlgebra for AlgebraRef {
    type Elem = Poly;

    fn base(&self) -> BaseRing {
        self.ring.base()
    }
    fn zero(&self) -> Poly {
        Poly::zero(&self.ring)
    }
    fn one(&self) -> Poly {
        Poly::one(&self.ring)
    }
    fn from_scalar(&self, c: &Scalar) -> Poly {
        Poly::constant(&self.ring, c.clone())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.normalize(&(a * b))
    }
    fn scale(&self, c: &Scalar, a: &Poly) -> Poly {
        a.scale(c)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        self.is_zero_elem(a)
    }
    fn render(&self, a: &Poly) -> String {
        self.normalize(a).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_normal_form() {
        let b = AlgebraPresentation::new(BaseRing::Rationals, ["s", "sb"], &[], &[("s", "sb")]).unwrap();
        let p = b.parse("s^3*sb^2 + s*sb").unwrap();
        assert_eq!(p, b.parse("s + 1").unwrap());
        assert_eq!(b.coordinates(), vec![0]);
        let d = b.derivation(&b.parse("sb").unwrap(), 0);
        assert_eq!(d, b.parse("-sb^2").unwrap());
        assert_eq!(b.unit_inverse(&b.parse("2*s^2").unwrap()).unwrap(), b.parse("1/2*sb^2").unwrap());
        assert!(b.unit_inverse(&b.parse("s+1").unwrap()).is_err());
    }

    #[test]
    fn general_relations() {
        let b = AlgebraPresentation::new(BaseRing::Rationals, ["x", "y"], &["y^2 - x^3"], &[]).unwrap();
        assert!(b.is_zero_elem(&Poly::parse(b.ring(), "y^4 - x^6").unwrap()));
        assert!(!b.is_localized_free());
    }
}
