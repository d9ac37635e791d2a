//! Rings of infinitesimal simplices over an affine base `X = Spec B`.
//!
//! Degree `n` means `n + 1` points. The weak flavor divides `B^{⊗(n+1)}` by
//! `J^(2) = Σ_{r<s} J_rs²`, the strong flavor additionally by `J_n`.
//! Two normal-form engines are provided: a structured ε-basis (for
//! localized-free B) and a Gröbner engine (any B over a field).

mod element;
pub mod generic;
mod index_map;
pub(crate) mod structured;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use element::SimplexElement;
pub use index_map::IndexMap;
pub use structured::{Key, Table};

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, Caps, CommAlgebra, Ideal, Poly, RingRef, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Weak,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Structured,
    Generic,
}

impl Engine {
    pub fn other(self) -> Engine {
        match self {
            Engine::Structured => Engine::Generic,
            Engine::Generic => Engine::Structured,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Weak => "weak",
            Flavor::Strong => "strong",
        })
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Structured => "structured",
            Engine::Generic => "generic",
        })
    }
}

pub(crate) struct GenericData {
    pub ambient: RingRef,
    pub ideal: Ideal,
    pub stabilized_at: Option<u32>,
}

pub(crate) struct RingInner {
    pub degree: usize,
    pub engine: Engine,
    pub generic: Option<GenericData>,
    pub custom: bool,
}

/// Shared data of all rings over one base algebra and flavor, with a cache of
/// the rings built so far (per degree and engine).
struct Family {
    algebra: AlgebraRef,
    flavor: Flavor,
    caps: Caps,
    coords: Vec<usize>,
    cache: Mutex<HashMap<(usize, Engine), Arc<RingInner>>>,
}

/// `O(Δ^(n))` (weak) or `O(Δ^n)` (strong) over a base algebra.
#[derive(Clone)]
pub struct SimplexRing {
    inner: Arc<RingInner>,
    family: Arc<Family>,
}

impl fmt::Debug for SimplexRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplexRing(n={}, {}, {}, {:?})",
            self.degree(),
            self.flavor(),
            self.engine(),
            self.family.algebra
        )
    }
}

fn build_inner(family: &Family, n: usize, engine: Engine) -> Result<RingInner> {
    match engine {
        Engine::Structured => {
            if !family.algebra.is_localized_free() {
                return Err(Error::Engine(
                    "the structured engine needs a polynomial algebra, possibly with inverted generators".into(),
                ));
            }
            Ok(RingInner { degree: n, engine, generic: None, custom: false })
        }
        Engine::Generic => {
            let ambient = generic::ambient_ring(&family.algebra, n);
            let (ideal, stabilized_at) =
                generic::defining_ideal(&family.algebra, &ambient, n, family.flavor, family.caps)?;
            Ok(RingInner {
                degree: n,
                engine,
                generic: Some(GenericData { ambient, ideal, stabilized_at }),
                custom: false,
            })
        }
    }
}

impl SimplexRing {
    pub fn new(algebra: &AlgebraRef, n: usize, flavor: Flavor, engine: Engine) -> Result<Self> {
        Self::with_caps(algebra, n, flavor, engine, Caps::default())
    }

    pub fn with_caps(algebra: &AlgebraRef, n: usize, flavor: Flavor, engine: Engine, caps: Caps) -> Result<Self> {
        let family = Arc::new(Family {
            algebra: algebra.clone(),
            flavor,
            caps,
            coords: algebra.coordinates(),
            cache: Mutex::new(HashMap::new()),
        });
        let probe = SimplexRing {
            inner: Arc::new(RingInner { degree: n, engine, generic: None, custom: true }),
            family,
        };
        probe.sibling_with(n, engine)
    }

    /// A Gröbner-engine ring whose defining ideal is generated by `gens`
    /// (lifted relations of B are added). Used to test corrupted presentations.
    pub fn generic_with_generators(
        algebra: &AlgebraRef,
        n: usize,
        flavor: Flavor,
        gens: Vec<Poly>,
        caps: Caps,
    ) -> Result<Self> {
        let ambient = generic::ambient_ring(algebra, n);
        let mut all = generic::relation_generators(algebra, &ambient, n);
        all.extend(gens);
        let ideal = Ideal::with_caps(&ambient, all, caps);
        ideal.basis()?;
        let family = Arc::new(Family {
            algebra: algebra.clone(),
            flavor,
            caps,
            coords: algebra.coordinates(),
            cache: Mutex::new(HashMap::new()),
        });
        Ok(SimplexRing {
            inner: Arc::new(RingInner {
                degree: n,
                engine: Engine::Generic,
                generic: Some(GenericData { ambient, ideal, stabilized_at: None }),
                custom: true,
            }),
            family,
        })
    }

    /// The ring of degree `m` with the same base, flavor and engine.
    pub fn sibling(&self, m: usize) -> Result<SimplexRing> {
        if m == self.degree() && !self.inner.custom {
            return Ok(self.clone());
        }
        self.sibling_with(m, self.engine())
    }

    /// The same ring computed by the other engine.
    pub fn twin(&self) -> Result<SimplexRing> {
        self.sibling_with(self.degree(), self.engine().other())
    }

    pub fn with_engine(&self, engine: Engine) -> Result<SimplexRing> {
        if engine == self.engine() && !self.inner.custom {
            return Ok(self.clone());
        }
        self.sibling_with(self.degree(), engine)
    }

    fn sibling_with(&self, m: usize, engine: Engine) -> Result<SimplexRing> {
        if let Some(inner) = self.family.cache.lock().expect("ring cache").get(&(m, engine)) {
            return Ok(SimplexRing { inner: inner.clone(), family: self.family.clone() });
        }
        let built = Arc::new(build_inner(&self.family, m, engine)?);
        let inner = self
            .family
            .cache
            .lock()
            .expect("ring cache")
            .entry((m, engine))
            .or_insert(built)
            .clone();
        Ok(SimplexRing { inner, family: self.family.clone() })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.family.algebra
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn flavor(&self) -> Flavor {
        self.family.flavor
    }

    pub fn engine(&self) -> Engine {
        self.inner.engine
    }

    pub fn caps(&self) -> Caps {
        self.family.caps
    }

    /// Coordinate generators of B (indices into its generator list).
    pub fn coords(&self) -> &[usize] {
        &self.family.coords
    }

    pub fn coord_name(&self, pos: usize) -> &str {
        &self.algebra().generators()[self.family.coords[pos]]
    }

    pub fn coord_position(&self, name: &str) -> Option<usize> {
        let g = self.algebra().ring().var_index(name)?;
        self.family.coords.iter().position(|&c| c == g)
    }

    pub fn is_custom(&self) -> bool {
        self.inner.custom
    }

    /// Degree at which the strong defining ideal stabilized (presented B only).
    pub fn stabilized_at(&self) -> Option<u32> {
        self.inner.generic.as_ref().and_then(|g| g.stabilized_at)
    }

    pub(crate) fn generic_data(&self) -> Option<&GenericData> {
        self.inner.generic.as_ref()
    }

    /// The polynomial ring on `x_v^{(i)}`.
    pub fn ambient(&self) -> RingRef {
        match &self.inner.generic {
            Some(g) => g.ambient.clone(),
            None => generic::ambient_ring(self.algebra(), self.degree()),
        }
    }

    /// Defining ideal in the ambient ring (generic engine only).
    pub fn defining_ideal(&self) -> Result<&Ideal> {
        self.inner
            .generic
            .as_ref()
            .map(|g| &g.ideal)
            .ok_or_else(|| Error::Engine("defining ideal requested from the structured engine".into()))
    }

    pub fn same_ring(&self, other: &SimplexRing) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        !self.inner.custom
            && !other.inner.custom
            && Arc::ptr_eq(&self.family.algebra, &other.family.algebra)
            && self.family.flavor == other.family.flavor
            && self.family.caps == other.family.caps
            && self.degree() == other.degree()
            && self.engine() == other.engine()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.degree() {
            Err(Error::Index(format!("point {i} in a ring of degree {}", self.degree())))
        } else {
            Ok(())
        }
    }

    pub fn zero(&self) -> SimplexElement {
        SimplexElement::zero(self)
    }

    pub fn one(&self) -> SimplexElement {
        self.from_base(&Poly::one(self.algebra().ring()))
    }

    pub fn from_scalar(&self, c: &Scalar) -> SimplexElement {
        self.from_base(&Poly::constant(self.algebra().ring(), c.clone()))
    }

    /// `b(x_0)`.
    pub fn from_base(&self, b: &Poly) -> SimplexElement {
        self.universal_point(0, b).expect("slot 0 exists")
    }

    /// `ε_{i,c} = x_c^{(i)} − x_c^{(0)}` for coordinate position `c`.
    pub fn eps(&self, i: usize, coord: usize) -> Result<SimplexElement> {
        self.check_index(i)?;
        if coord >= self.coords().len() {
            return Err(Error::Index(format!("coordinate position {coord} out of range")));
        }
        let g = self.coords()[coord];
        self.dgen(0, i, &self.algebra().var(g))
    }

    /// `ε_{i,v}` by coordinate name.
    pub fn eps_named(&self, i: usize, name: &str) -> Result<SimplexElement> {
        let c = self
            .coord_position(name)
            .ok_or_else(|| Error::UnknownName(format!("coordinate `{name}`")))?;
        self.eps(i, c)
    }

    /// The class of `d^{r,s}b = b(x_s) − b(x_r)`.
    pub fn dgen(&self, r: usize, s: usize, b: &Poly) -> Result<SimplexElement> {
        self.check_index(r)?;
        self.check_index(s)?;
        Ok(&self.universal_point(s, b)? - &self.universal_point(r, b)?)
    }

    /// The `i`-th universal point applied to `b`, i.e. `b(x_i)`.
    pub fn universal_point(&self, i: usize, b: &Poly) -> Result<SimplexElement> {
        self.check_index(i)?;
        SimplexElement::universal_point(self, i, b)
    }

    /// Images of all generators of B under the `i`-th universal point.
    pub fn universal_images(&self, i: usize) -> Result<Vec<SimplexElement>> {
        (0..self.algebra().ngens())
            .map(|g| self.universal_point(i, &self.algebra().var(g)))
            .collect()
    }

    /// The class of an ambient polynomial in `x_v^{(i)}`.
    pub fn from_ambient(&self, p: &Poly) -> Result<SimplexElement> {
        SimplexElement::from_ambient(self, p)
    }

    /// `m_rs`: degree `n` → degree `n − 1`.
    pub fn mult_map(&self, r: usize, s: usize, e: &SimplexElement) -> Result<SimplexElement> {
        if !(r < s && s <= self.degree()) {
            return Err(Error::Index(format!("m_{r}{s} in degree {}", self.degree())));
        }
        e.pullback(&IndexMap::merge(self.degree(), r, s))
    }

    /// `δ^r`: degree `n − 1` → degree `n`, inserting a unit in slot `r + 1`.
    /// Here `self` is the degree-`n` target ring.
    pub fn splitting_map(&self, r: usize, e: &SimplexElement) -> Result<SimplexElement> {
        if self.degree() == 0 || r > self.degree() || e.ring().degree() + 1 != self.degree() {
            return Err(Error::Index(format!("δ^{r} into degree {}", self.degree())));
        }
        e.pullback(&IndexMap::face(self.degree(), r))
    }
}

impl CommAlgebra for SimplexRing {
    type Elem = SimplexElement;

    fn base(&self) -> crate::exactalg::BaseRing {
        self.algebra().base()
    }
    fn zero(&self) -> SimplexElement {
        SimplexRing::zero(self)
    }
    fn one(&self) -> SimplexElement {
        SimplexRing::one(self)
    }
    fn from_scalar(&self, c: &Scalar) -> SimplexElement {
        SimplexRing::from_scalar(self, c)
    }
    fn add(&self, a: &SimplexElement, b: &SimplexElement) -> SimplexElement {
        a + b
    }
    fn mul(&self, a: &SimplexElement, b: &SimplexElement) -> SimplexElement {
        a * b
    }
    fn scale(&self, c: &Scalar, a: &SimplexElement) -> SimplexElement {
        a.scale(c)
    }
    fn is_zero(&self, a: &SimplexElement) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &SimplexElement) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests;
