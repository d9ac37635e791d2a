use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::generic::{lift, slot_var};
use super::structured::{Ctx, Key, Table};
use super::{Engine, IndexMap, SimplexRing};
use crate::error::{Error, Result};
use crate::exactalg::{render_terms, Poly, Scalar};

#[derive(Clone, PartialEq)]
pub(crate) enum Repr {
    S(Table),
    G(Poly),
}

/// An element of a [`SimplexRing`] in normal form.
#[derive(Clone)]
pub struct SimplexElement {
    ring: SimplexRing,
    repr: Repr,
}

impl PartialEq for SimplexElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.repr == other.repr
    }
}

impl fmt::Debug for SimplexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplexElement({self})")
    }
}

fn ctx(ring: &SimplexRing) -> Ctx<'_> {
    Ctx { algebra: ring.algebra(), flavor: ring.flavor() }
}

impl SimplexElement {
    pub(crate) fn zero(ring: &SimplexRing) -> Self {
        let repr = match ring.engine() {
            Engine::Structured => Repr::S(Table::new()),
            Engine::Generic => Repr::G(Poly::zero(&ring.ambient())),
        };
        SimplexElement { ring: ring.clone(), repr }
    }

    pub(crate) fn from_table(ring: &SimplexRing, t: Table) -> Self {
        SimplexElement { ring: ring.clone(), repr: Repr::S(t) }
    }

    fn generic_nf(ring: &SimplexRing, p: Poly) -> Self {
        let g = ring.generic_data().expect("generic engine");
        let nf = g.ideal.normal_form(&p).expect("defining ideal basis is computed at construction");
        SimplexElement { ring: ring.clone(), repr: Repr::G(nf) }
    }

    pub(crate) fn universal_point(ring: &SimplexRing, i: usize, b: &Poly) -> Result<Self> {
        let alg = ring.algebra();
        if !crate::exactalg::same_ring(b.ring(), alg.ring()) {
            return Err(Error::Context("element is not in the base algebra".into()));
        }
        match ring.engine() {
            Engine::Structured => {
                let c = ctx(ring);
                let mut t = Table::new();
                c.add_into(&mut t, Key::unit(), b.clone());
                if i > 0 {
                    for (pos, &g) in ring.coords().iter().enumerate() {
                        let key = Key { simplices: vec![i as u8], pattern: vec![pos as u8] };
                        c.add_into(&mut t, key, alg.derivation(b, g));
                    }
                }
                Ok(Self::from_table(ring, t))
            }
            Engine::Generic => Ok(Self::generic_nf(ring, lift(alg, &ring.ambient(), b, i))),
        }
    }

    pub(crate) fn from_ambient(ring: &SimplexRing, p: &Poly) -> Result<Self> {
        let ambient = ring.ambient();
        if !crate::exactalg::same_ring(p.ring(), &ambient) {
            return Err(Error::Context("polynomial is not in the ambient ring".into()));
        }
        match ring.engine() {
            Engine::Generic => Ok(Self::generic_nf(ring, p.clone())),
            Engine::Structured => {
                let mut images = Vec::with_capacity(ambient.nvars());
                for i in 0..=ring.degree() {
                    images.extend(ring.universal_images(i)?);
                }
                Ok(p.evaluate(ring, &images))
            }
        }
    }

    pub fn ring(&self) -> &SimplexRing {
        &self.ring
    }

    pub fn engine(&self) -> Engine {
        self.ring.engine()
    }

    /// Structured table, if this element uses the structured engine.
    pub fn table(&self) -> Option<&Table> {
        match &self.repr {
            Repr::S(t) => Some(t),
            Repr::G(_) => None,
        }
    }

    /// Gröbner normal form, if this element uses the generic engine.
    pub fn poly(&self) -> Option<&Poly> {
        match &self.repr {
            Repr::G(p) => Some(p),
            Repr::S(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::S(t) => t.is_empty(),
            Repr::G(p) => p.is_zero(),
        }
    }

    fn check(&self, other: &SimplexElement) {
        assert!(
            self.ring.same_ring(&other.ring),
            "elements of different simplex rings: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    pub fn try_add(&self, other: &SimplexElement) -> Result<SimplexElement> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::Context("elements of different simplex rings".into()));
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &SimplexElement) -> Result<SimplexElement> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::Context("elements of different simplex rings".into()));
        }
        Ok(self * other)
    }

    pub fn scale(&self, s: &Scalar) -> SimplexElement {
        match &self.repr {
            Repr::S(t) => Self::from_table(&self.ring, ctx(&self.ring).scale(t, s)),
            Repr::G(p) => SimplexElement { ring: self.ring.clone(), repr: Repr::G(p.scale(s)) },
        }
    }

    pub fn pow(&self, mut e: u32) -> SimplexElement {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Ring map of the index map `φ`: `x_i ↦ x_{φ(i)}`.
    pub fn pullback(&self, phi: &IndexMap) -> Result<SimplexElement> {
        if phi.source() != self.ring.degree() {
            return Err(Error::Index(format!(
                "pulling back a degree-{} element along a map from degree {}",
                self.ring.degree(),
                phi.source()
            )));
        }
        let target = self.ring.sibling(phi.target())?;
        match &self.repr {
            Repr::S(t) => {
                let base_slot = phi.apply(0);
                let mut acc = target.zero();
                for (key, c) in t {
                    let mut term = target.universal_point(base_slot, c)?;
                    for (&s, &p) in key.simplices.iter().zip(&key.pattern) {
                        let a = phi.apply(s as usize);
                        if a == base_slot {
                            term = target.zero();
                            break;
                        }
                        let mut f = target.eps(a, p as usize)?;
                        if base_slot != 0 {
                            f = &f - &target.eps(base_slot, p as usize)?;
                        }
                        term = &term * &f;
                    }
                    acc = &acc + &term;
                }
                Ok(acc)
            }
            Repr::G(p) => {
                let k = self.ring.algebra().ngens();
                let map: Vec<usize> = (0..=self.ring.degree())
                    .flat_map(|i| (0..k).map(move |g| phi.apply(i) * k + g))
                    .collect();
                let q = p.substitute_vars(&target.ambient(), &map);
                Ok(Self::generic_nf(&target, q))
            }
        }
    }

    /// Restriction to the diagonal, as an element of B.
    pub fn constant_part(&self) -> Result<Poly> {
        let d = self.pullback(&IndexMap::collapse(self.ring.degree()))?;
        Ok(match &d.repr {
            Repr::S(t) => t.get(&Key::unit()).cloned().unwrap_or_else(|| Poly::zero(self.ring.algebra().ring())),
            Repr::G(p) => {
                let alg = self.ring.algebra();
                let map: Vec<usize> = (0..alg.ngens()).collect();
                p.substitute_vars(alg.ring(), &map)
            }
        })
    }

    /// Inverse of `c + ν` with `c` a unit of B and `ν` nilpotent:
    /// `c⁻¹ Σ_{k≤n} (−c⁻¹ν)^k`.
    pub fn inverse(&self) -> Result<SimplexElement> {
        let c = self.constant_part()?;
        let cinv = self.ring.algebra().unit_inverse(&c)?;
        let cinv = self.ring.from_base(&cinv);
        let nu = self - &self.ring.from_base(&c);
        let step = -&(&cinv * &nu);
        let mut acc = self.ring.one();
        let mut pow = self.ring.one();
        for _ in 0..self.ring.degree() {
            pow = &pow * &step;
            acc = &acc + &pow;
        }
        Ok(&cinv * &acc)
    }

    /// The same element in the other engine's normal form.
    pub fn to_engine(&self, engine: Engine) -> Result<SimplexElement> {
        if engine == self.engine() {
            return Ok(self.clone());
        }
        let target = self.ring.with_engine(engine)?;
        match &self.repr {
            Repr::G(p) => {
                let q = p.substitute_vars(&target.ambient(), &(0..p.ring().nvars()).collect::<Vec<_>>());
                target.from_ambient(&q)
            }
            Repr::S(_) => target.from_ambient(&self.lift()),
        }
    }

    /// A representative in the ambient polynomial ring.
    pub fn lift(&self) -> Poly {
        match &self.repr {
            Repr::G(p) => p.clone(),
            Repr::S(t) => {
                let alg = self.ring.algebra();
                let ambient = self.ring.ambient();
                let mut acc = Poly::zero(&ambient);
                for (key, c) in t {
                    let mut term = lift(alg, &ambient, c, 0);
                    for (&s, &p) in key.simplices.iter().zip(&key.pattern) {
                        let g = self.ring.coords()[p as usize];
                        let e = &slot_var(alg, &ambient, g, s as usize) - &slot_var(alg, &ambient, g, 0);
                        term = &term * &e;
                    }
                    acc = &acc + &term;
                }
                acc
            }
        }
    }

    /// Coefficient of a structured key (zero if absent).
    pub fn coefficient(&self, key: &Key) -> Result<Poly> {
        match &self.repr {
            Repr::S(t) => Ok(t.get(key).cloned().unwrap_or_else(|| Poly::zero(self.ring.algebra().ring()))),
            Repr::G(_) => self.to_engine(Engine::Structured)?.coefficient(key),
        }
    }

    pub fn render_key(&self, key: &Key) -> String {
        key.simplices
            .iter()
            .zip(&key.pattern)
            .map(|(s, p)| format!("e[{},{}]", s, self.ring.coord_name(*p as usize)))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for SimplexElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::G(p) => write!(f, "{p}"),
            Repr::S(t) => {
                let base = self.ring.algebra().base();
                let one = base.one();
                let mut parts: Vec<(Scalar, String)> = Vec::new();
                for (key, c) in t {
                    let mono = self.render_key(key);
                    if c.len() == 1 {
                        let (m, s) = &c.terms()[0];
                        let cm = crate::exactalg::render_monomial(c.ring().vars(), m);
                        let text = match (cm.is_empty(), mono.is_empty()) {
                            (true, _) => mono,
                            (false, true) => cm,
                            (false, false) => format!("{cm}*{mono}"),
                        };
                        parts.push((s.clone(), text));
                    } else if mono.is_empty() {
                        parts.push((one.clone(), c.to_string()));
                    } else {
                        parts.push((one.clone(), format!("({c})*{mono}")));
                    }
                }
                let s = render_terms(base, parts.iter().map(|(c, t)| (c, t.clone())));
                f.write_str(&s)
            }
        }
    }
}

impl Add for &SimplexElement {
    type Output = SimplexElement;
    fn add(self, rhs: &SimplexElement) -> SimplexElement {
        self.check(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::S(a), Repr::S(b)) => Repr::S(ctx(&self.ring).add(a, b)),
            (Repr::G(a), Repr::G(b)) => Repr::G(a + b),
            _ => unreachable!("same ring implies same engine"),
        };
        SimplexElement { ring: self.ring.clone(), repr }
    }
}

impl Neg for &SimplexElement {
    type Output = SimplexElement;
    fn neg(self) -> SimplexElement {
        self.scale(&self.ring.algebra().base().from_int(-1))
    }
}

impl Sub for &SimplexElement {
    type Output = SimplexElement;
    fn sub(self, rhs: &SimplexElement) -> SimplexElement {
        self + &(-rhs)
    }
}

impl Mul for &SimplexElement {
    type Output = SimplexElement;
    fn mul(self, rhs: &SimplexElement) -> SimplexElement {
        self.check(rhs);
        match (&self.repr, &rhs.repr) {
            (Repr::S(a), Repr::S(b)) => SimplexElement::from_table(&self.ring, ctx(&self.ring).mul(a, b)),
            (Repr::G(a), Repr::G(b)) => SimplexElement::generic_nf(&self.ring, a * b),
            _ => unreachable!("same ring implies same engine"),
        }
    }
}
