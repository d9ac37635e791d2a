//! Scalar combinatorial forms: elements of `O(Δⁿ)` killed by every degeneracy.

use std::fmt;
use std::sync::Arc;

use super::classical::ClassicalForm;
use crate::error::{Error, Result};
use crate::exactalg::{Poly, Scalar};
use crate::simplex::{Engine, Flavor, IndexMap, Key, SimplexElement, SimplexRing};

/// An element of `Ψ^(n)` (weak ring) or `Ψⁿ` (strong ring).
#[derive(Clone, PartialEq)]
pub struct ScalarCombForm {
    elem: SimplexElement,
}

impl fmt::Debug for ScalarCombForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarCombForm({})", self.elem)
    }
}

impl fmt::Display for ScalarCombForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}

/// The first degeneracy under which `e` does not vanish, with its image.
pub fn degeneracy_witness(e: &SimplexElement) -> Result<Option<(usize, SimplexElement)>> {
    let n = e.ring().degree();
    for i in 0..n {
        let img = e.pullback(&IndexMap::degeneracy(n - 1, i))?;
        if !img.is_zero() {
            return Ok(Some((i, img)));
        }
    }
    Ok(None)
}

impl ScalarCombForm {
    /// Checks degeneracy vanishing; degree 0 accepts every function.
    pub fn new(elem: SimplexElement) -> Result<Self> {
        if let Some((i, img)) = degeneracy_witness(&elem)? {
            return Err(Error::Form(format!("`{elem}` survives the degeneracy s_{i} as `{img}`")));
        }
        Ok(ScalarCombForm { elem })
    }

    pub fn zero(ring: &SimplexRing) -> Self {
        ScalarCombForm { elem: ring.zero() }
    }

    /// `ν`: `c·db_1⋯db_n ↦ c(x_0)·∏ d^{0,i}b_i`, extended linearly.
    pub fn nu(form: &ClassicalForm, ring: &SimplexRing) -> Result<Self> {
        if !Arc::ptr_eq(form.algebra(), ring.algebra()) {
            return Err(Error::Context("form and ring over different algebras".into()));
        }
        if form.flavor() != ring.flavor() {
            return Err(Error::Flavor(format!("{} form sent into a {} ring", form.flavor(), ring.flavor())));
        }
        if form.degree() != ring.degree() {
            return Err(Error::Degree(format!("{}-form sent into a degree-{} ring", form.degree(), ring.degree())));
        }
        let mut acc = ring.zero();
        for (pattern, c) in form.terms() {
            let mut term = ring.from_base(c);
            for (i, &p) in pattern.iter().enumerate() {
                term = &term * &ring.eps(i + 1, p as usize)?;
            }
            acc = &acc + &term;
        }
        Ok(ScalarCombForm { elem: acc })
    }

    /// `ν⁻¹`: reads off the full-simplex keys of the structured normal form.
    pub fn nu_inverse(&self) -> Result<ClassicalForm> {
        let ring = self.elem.ring();
        let n = ring.degree();
        let s = self.elem.to_engine(Engine::Structured)?;
        let table = s.table().expect("structured element");
        let full: Vec<u8> = (1..=n as u8).collect();
        let mut out = ClassicalForm::zero(ring.algebra(), ring.flavor(), n);
        for (key, c) in table {
            if key.simplices != full {
                return Err(Error::Form(format!(
                    "`{}` has a component `{}` outside the form ideal",
                    self.elem,
                    s.render_key(key)
                )));
            }
            let pattern: Vec<usize> = key.pattern.iter().map(|&p| p as usize).collect();
            out = out.add(&ClassicalForm::term(ring.algebra(), ring.flavor(), c, &pattern)?)?;
        }
        Ok(out)
    }

    pub fn elem(&self) -> &SimplexElement {
        &self.elem
    }

    pub fn into_elem(self) -> SimplexElement {
        self.elem
    }

    pub fn ring(&self) -> &SimplexRing {
        self.elem.ring()
    }

    pub fn degree(&self) -> usize {
        self.elem.ring().degree()
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn add(&self, other: &ScalarCombForm) -> Result<ScalarCombForm> {
        Ok(ScalarCombForm { elem: self.elem.try_add(&other.elem)? })
    }

    pub fn sub(&self, other: &ScalarCombForm) -> Result<ScalarCombForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ScalarCombForm {
        ScalarCombForm { elem: -&self.elem }
    }

    pub fn scale(&self, s: &Scalar) -> ScalarCombForm {
        ScalarCombForm { elem: self.elem.scale(s) }
    }

    /// `(f ∗ g)(x_0..x_{m+n}) = f(x_0..x_m)·g(x_m..x_{m+n})`.
    pub fn star(&self, other: &ScalarCombForm) -> Result<ScalarCombForm> {
        let (m, n) = (self.degree(), other.degree());
        if self.ring().flavor() != other.ring().flavor() {
            return Err(Error::Flavor("star product of forms of different flavors".into()));
        }
        if !Arc::ptr_eq(self.ring().algebra(), other.ring().algebra()) {
            return Err(Error::Context("star product over different algebras".into()));
        }
        let f = self.elem.pullback(&IndexMap::shift(m, 0, m + n))?;
        let g = other.elem.pullback(&IndexMap::shift(n, m, m + n))?;
        let g = if g.ring().same_ring(f.ring()) { g } else { g.to_engine(f.engine())? };
        Ok(ScalarCombForm { elem: f.try_mul(&g)? })
    }

    /// `(σ.f)(x_0..x_n) = f(x_{σ(0)}..x_{σ(n)})`.
    pub fn sym_action(&self, sigma: &IndexMap) -> Result<ScalarCombForm> {
        if sigma.sign().is_none() || sigma.source() != self.degree() {
            return Err(Error::Index(format!("{sigma} is not a permutation of degree {}", self.degree())));
        }
        Ok(ScalarCombForm { elem: self.elem.pullback(sigma)? })
    }

    /// Alternating Čech sum `δf = Σ_i (−1)^i d_i^* f`.
    pub fn cech_delta(&self) -> Result<ScalarCombForm> {
        let n = self.degree();
        let target = self.ring().sibling(n + 1)?;
        let mut acc = target.zero();
        for i in 0..=n + 1 {
            let face = self.elem.pullback(&IndexMap::face(n + 1, i))?;
            acc = if i % 2 == 0 { &acc + &face } else { &acc - &face };
        }
        Ok(ScalarCombForm { elem: acc })
    }

    /// Multiplication by `b(x_slot)`; on forms the slot does not matter.
    pub fn module_action(&self, b: &Poly, slot: usize) -> Result<ScalarCombForm> {
        let u = self.ring().universal_point(slot, b)?;
        Ok(ScalarCombForm { elem: &u * &self.elem })
    }

    /// The image in the strong flavor of a weak form.
    pub fn to_strong(&self) -> Result<ScalarCombForm> {
        if self.ring().flavor() == Flavor::Strong {
            return Ok(self.clone());
        }
        let strong = SimplexRing::new(self.ring().algebra(), self.degree(), Flavor::Strong, self.elem.engine())?;
        let amb = strong.ambient();
        let lifted = self.elem.lift();
        let map: Vec<usize> = (0..amb.nvars()).collect();
        let e = strong.from_ambient(&lifted.substitute_vars(&amb, &map))?;
        Ok(ScalarCombForm { elem: e })
    }

    /// Structured key of the full simplex with a given pattern.
    pub fn full_key(n: usize, pattern: &[u8]) -> Key {
        Key { simplices: (1..=n as u8).collect(), pattern: pattern.to_vec() }
    }
}
