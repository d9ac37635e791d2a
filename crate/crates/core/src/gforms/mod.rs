//! Group-valued combinatorial forms: points of an affine group over
//! `O(Δⁿ)` (strong flavor) that become trivial on every degeneracy.

mod differentials;
mod rep;

use std::fmt;

pub use differentials::{delta0, delta1, delta2, delta3, delta3_full, lift_point, mc_form, twisted_action};
pub use rep::{
    classical_adjoint, classical_aut_bracket, classical_bracket, classical_square, pair_tensor, rep_add, rep_apply,
    rep_scale, rep_zero, ClassicalRep,
};

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, Poly};
use crate::forms::{ClassicalForm, ScalarCombForm};
use crate::hopf::{CoactionRef, GroupPoint, HopfRef};
use crate::simplex::{Flavor, IndexMap, SimplexRing};

/// A `G`-valued combinatorial `n`-form over a base algebra B.
#[derive(Clone)]
pub struct GroupForm {
    point: GroupPoint<SimplexRing>,
}

impl fmt::Debug for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupForm[{}, n={}]({})", self.group().name(), self.degree(), self.point.render())
    }
}

impl fmt::Display for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.point.render())
    }
}

impl GroupForm {
    /// Validates the flavor and degeneracy vanishing.
    pub fn new(point: GroupPoint<SimplexRing>) -> Result<Self> {
        if point.target().flavor() != Flavor::Strong {
            return Err(Error::Flavor("group-valued forms live on the strong neighborhoods".into()));
        }
        let f = GroupForm { point };
        if let Some(w) = f.degeneracy_failure()? {
            return Err(Error::Form(w));
        }
        Ok(f)
    }

    /// Wraps a point produced by an operation known to preserve forms.
    pub(crate) fn trusted(point: GroupPoint<SimplexRing>) -> Self {
        GroupForm { point }
    }

    pub fn identity(group: &HopfRef, ring: &SimplexRing) -> Self {
        GroupForm { point: GroupPoint::identity(group, ring) }
    }

    pub fn group(&self) -> &HopfRef {
        self.point.group()
    }

    pub fn ring(&self) -> &SimplexRing {
        self.point.target()
    }

    pub fn algebra(&self) -> &AlgebraRef {
        self.ring().algebra()
    }

    pub fn degree(&self) -> usize {
        self.ring().degree()
    }

    pub fn point(&self) -> &GroupPoint<SimplexRing> {
        &self.point
    }

    /// The first specialization `x_s = x_r` (r < s) under which the form is
    /// not the identity, rendered. Covers every degeneracy.
    pub fn degeneracy_failure(&self) -> Result<Option<String>> {
        let n = self.degree();
        for s in 1..=n {
            for r in 0..s {
                let p = self.pullback(&IndexMap::merge(n, r, s))?;
                if let Some(w) = p.difference(&GroupPoint::identity(p.group(), p.target())) {
                    return Ok(Some(format!("not trivial on x_{r} = x_{s}: {w}")));
                }
            }
        }
        Ok(None)
    }

    /// `φ(g) = η(g) + ν(Σ_j [g − η(g)]_j · u_j)`.
    pub fn from_classical(group: &HopfRef, rep: &[ClassicalForm], ring: &SimplexRing) -> Result<Self> {
        let colie = group.colie();
        if rep.len() != colie.dim() {
            return Err(Error::Representation(format!(
                "{} classical values for a co-Lie module of rank {}",
                rep.len(),
                colie.dim()
            )));
        }
        if ring.degree() == 0 {
            return Err(Error::Representation("classical representations need degree at least 1".into()));
        }
        let mut images = Vec::with_capacity(group.algebra().ngens());
        for g in 0..group.algebra().ngens() {
            let u = rep_apply(rep, colie.generator_class(g), ring.algebra(), ring.flavor(), ring.degree())?;
            let nu = ScalarCombForm::nu(&u, ring)?;
            images.push(&ring.from_scalar(&group.counit()[g]) + nu.elem());
        }
        let point = GroupPoint::new(group, ring, images)
            .map_err(|e| Error::Representation(format!("linear map does not define a point: {e}")))?;
        Ok(GroupForm { point })
    }

    /// `u_j = ν⁻¹(φ(b_j) − η(b_j))` on the co-Lie basis generators `b_j`.
    pub fn to_classical(&self) -> Result<ClassicalRep> {
        let ring = self.ring();
        self.group()
            .colie()
            .basis()
            .iter()
            .map(|&b| {
                let e = &self.point.images()[b] - &ring.from_scalar(&self.group().counit()[b]);
                ScalarCombForm::new(e)?.nu_inverse()
            })
            .collect()
    }

    fn check_compatible(&self, other: &GroupForm) -> Result<()> {
        if !self.group().same_group(other.group()) {
            return Err(Error::Point(format!("forms of `{}` and `{}`", self.group().name(), other.group().name())));
        }
        if !self.ring().same_ring(other.ring()) {
            return Err(Error::Context("forms over different rings or degrees".into()));
        }
        Ok(())
    }

    pub fn product(&self, other: &GroupForm) -> Result<GroupForm> {
        self.check_compatible(other)?;
        Ok(GroupForm { point: self.point.compose(&other.point)? })
    }

    pub fn inverse(&self) -> GroupForm {
        GroupForm { point: self.point.inverse() }
    }

    /// `φ(x_{m(0)}, …, x_{m(u)})`, a point over `O(Δ^{target(m)})`.
    pub fn pullback(&self, m: &IndexMap) -> Result<GroupPoint<SimplexRing>> {
        if m.source() != self.degree() {
            return Err(Error::Index(format!("{m} does not start at degree {}", self.degree())));
        }
        let target = self.ring().sibling(m.target())?;
        self.point.map(&target, |e| e.pullback(m))
    }

    /// `σ·φ` for a permutation σ of the vertices.
    pub fn permute(&self, sigma: &IndexMap) -> Result<GroupForm> {
        if sigma.sign().is_none() {
            return Err(Error::Index(format!("{sigma} is not a permutation")));
        }
        Ok(GroupForm { point: self.pullback(sigma)? })
    }

    pub fn difference(&self, other: &GroupForm) -> Option<String> {
        if !self.group().same_group(other.group()) {
            return Some(format!("groups `{}` and `{}`", self.group().name(), other.group().name()));
        }
        self.point.difference(&other.point)
    }

    pub fn same(&self, other: &GroupForm) -> bool {
        self.difference(other).is_none()
    }

    pub fn is_identity(&self) -> bool {
        self.point.is_identity()
    }

    /// `[f, g]`: commutator of `f(x_0..x_m)` and `g(x_m..x_{m+n})`.
    pub fn bracket(&self, other: &GroupForm) -> Result<GroupForm> {
        let (m, n) = (self.degree(), other.degree());
        if m == 0 || n == 0 {
            return Err(Error::Unsupported("brackets with 0-forms are not bilinear".into()));
        }
        if !self.group().same_group(other.group()) {
            return Err(Error::Point(format!("forms of `{}` and `{}`", self.group().name(), other.group().name())));
        }
        let f = self.pullback(&IndexMap::shift(m, 0, m + n))?;
        let g = other.pullback(&IndexMap::shift(n, m, m + n))?;
        if !f.target().same_ring(g.target()) {
            return Err(Error::Context("forms over different rings".into()));
        }
        Ok(GroupForm { point: f.commutator(&g)? })
    }

    /// Conjugation by a B-point pulled back along the projection to `slot`.
    pub fn adjoint(&self, g: &GroupPoint<AlgebraRef>, slot: usize) -> Result<GroupForm> {
        let gamma = lift_point(g, self.ring(), slot)?;
        if !gamma.group().same_group(self.group()) {
            return Err(Error::Point("conjugating by a point of another group".into()));
        }
        Ok(GroupForm { point: gamma.conjugate(&self.point)? })
    }

    /// The form with its ring switched to another engine.
    pub fn to_engine(&self, engine: crate::simplex::Engine) -> Result<GroupForm> {
        let ring = self.ring().with_engine(engine)?;
        Ok(GroupForm { point: self.point.map(&ring, |e| e.to_engine(engine))? })
    }

    /// Value of the form on an element of the Hopf algebra.
    pub fn eval(&self, a: &Poly) -> crate::simplex::SimplexElement {
        self.point.eval(a)
    }
}

/// An `Aut(G)`-valued 1-form, given as a Γ-valued form and a coaction of Γ on G.
#[derive(Clone, Debug)]
pub struct AutForm {
    chi: GroupForm,
    action: CoactionRef,
}

impl AutForm {
    pub fn new(chi: GroupForm, action: &CoactionRef) -> Result<Self> {
        if !chi.group().same_group(action.acting()) {
            return Err(Error::Coaction(format!(
                "`{}` acts through `{}`, not `{}`",
                action.name(),
                action.acting().name(),
                chi.group().name()
            )));
        }
        Ok(AutForm { chi, action: action.clone() })
    }

    pub fn identity(action: &CoactionRef, ring: &SimplexRing) -> Self {
        AutForm { chi: GroupForm::identity(action.acting(), ring), action: action.clone() }
    }

    /// `i_*f`: the form acting through inner conjugation.
    pub fn inner(f: &GroupForm) -> Result<Self> {
        let conj = f.group().conjugation()?;
        Self::new(f.clone(), &conj)
    }

    pub fn chi(&self) -> &GroupForm {
        &self.chi
    }

    pub fn action(&self) -> &CoactionRef {
        &self.action
    }

    pub fn degree(&self) -> usize {
        self.chi.degree()
    }

    /// `χ(g)·g⁻¹` with `χ` on `x_0..x_m` and `g` on `x_m..x_{m+n}`.
    pub fn bracket(&self, g: &GroupForm) -> Result<GroupForm> {
        let (m, n) = (self.degree(), g.degree());
        if m == 0 || n == 0 {
            return Err(Error::Unsupported("brackets with 0-forms are not bilinear".into()));
        }
        self.check_acts_on(g)?;
        let chi = self.chi.pullback(&IndexMap::shift(m, 0, m + n))?;
        let gp = g.pullback(&IndexMap::shift(n, m, m + n))?;
        let acted = self.action.act(&chi, &gp)?;
        Ok(GroupForm { point: acted.compose(&gp.inverse())? })
    }

    pub(crate) fn check_acts_on(&self, g: &GroupForm) -> Result<()> {
        if !g.group().same_group(self.action.acted()) {
            return Err(Error::Coaction(format!("`{}` acts on `{}`, not `{}`", self.action.name(), self.action.acted().name(), g.group().name())));
        }
        Ok(())
    }
}
