//! The non-abelian differentials `δ⁰`, `δ¹`, `δ²_χ`, `δ³_χ` and the
//! Maurer–Cartan form.

use super::{AutForm, GroupForm};
use crate::error::{Error, Result};
use crate::exactalg::AlgebraRef;
use crate::hopf::{GroupPoint, HopfRef};
use crate::simplex::{Engine, Flavor, IndexMap, SimplexRing};

/// A B-point of G seen over `O(Δⁿ)` through the projection to `x_slot`.
pub fn lift_point(g: &GroupPoint<AlgebraRef>, ring: &SimplexRing, slot: usize) -> Result<GroupPoint<SimplexRing>> {
    g.map(ring, |b| ring.universal_point(slot, b))
}

/// `φ(x_{v_0}, …)` as a point over `O(Δ^r)`.
fn at(f: &GroupForm, r: usize, vertices: &[usize]) -> Result<GroupPoint<SimplexRing>> {
    f.pullback(&IndexMap::new(r, vertices.to_vec())?)
}

/// `δ⁰(g)(x_0, x_1) = g(x_0)⁻¹ g(x_1)`; `ring` fixes engine and base.
pub fn delta0(g: &GroupPoint<AlgebraRef>, ring: &SimplexRing) -> Result<GroupForm> {
    let r1 = ring.sibling(1)?;
    let g0 = lift_point(g, &r1, 0)?;
    let g1 = lift_point(g, &r1, 1)?;
    Ok(GroupForm::trusted(g0.inverse().compose(&g1)?))
}

/// `ω = δ⁰(id_G)` over `B = A`.
pub fn mc_form(group: &HopfRef, engine: Engine) -> Result<GroupForm> {
    let ring = SimplexRing::new(group.algebra(), 1, Flavor::Strong, engine)?;
    delta0(&group.universal_point(), &ring)
}

/// `(ω∗g)(x_0, x_1) = g(x_0)⁻¹ ω(x_0, x_1) g(x_1)`.
pub fn twisted_action(omega: &GroupForm, g: &GroupPoint<AlgebraRef>) -> Result<GroupForm> {
    if omega.degree() != 1 {
        return Err(Error::Degree(format!("twisting a {}-form", omega.degree())));
    }
    let g0 = lift_point(g, omega.ring(), 0)?;
    let g1 = lift_point(g, omega.ring(), 1)?;
    Ok(GroupForm::trusted(g0.inverse().compose(omega.point())?.compose(&g1)?))
}

/// `δ¹ω = ω(x_0,x_1) ω(x_1,x_2) ω(x_2,x_0)`.
pub fn delta1(omega: &GroupForm) -> Result<GroupForm> {
    if omega.degree() != 1 {
        return Err(Error::Degree(format!("δ¹ of a {}-form", omega.degree())));
    }
    let p = at(omega, 2, &[0, 1])?.compose(&at(omega, 2, &[1, 2])?)?.compose(&at(omega, 2, &[2, 0])?)?;
    Ok(GroupForm::trusted(p))
}

/// `δ²_χ φ (x,y,z,u) = χ(x,y)(φ(y,z,u)) φ(x,y,u) φ(x,u,z) φ(x,z,y)`.
pub fn delta2(chi: &AutForm, phi: &GroupForm) -> Result<GroupForm> {
    if chi.degree() != 1 || phi.degree() != 2 {
        return Err(Error::Degree(format!("δ² takes a 1-form and a 2-form, not {} and {}", chi.degree(), phi.degree())));
    }
    chi.check_acts_on(phi)?;
    let c01 = at(chi.chi(), 3, &[0, 1])?;
    let head = chi.action().act(&c01, &at(phi, 3, &[1, 2, 3])?)?;
    let p = head
        .compose(&at(phi, 3, &[0, 1, 3])?)?
        .compose(&at(phi, 3, &[0, 3, 2])?)?
        .compose(&at(phi, 3, &[0, 2, 1])?)?;
    Ok(GroupForm::trusted(p))
}

/// The naive `δ³_χ Ω (x,y,z,u,v) =
/// χ(x,y)(Ω(y,z,u,v)) Ω(x,y,u,v) Ω(x,y,z,u) Ω(x,z,u,v)⁻¹ Ω(x,y,z,v)⁻¹`.
pub fn delta3(chi: &AutForm, omega: &GroupForm) -> Result<GroupForm> {
    check3(chi, omega)?;
    let c01 = at(chi.chi(), 4, &[0, 1])?;
    let o = |v: &[usize]| at(omega, 4, v);
    let p = chi
        .action()
        .act(&c01, &o(&[1, 2, 3, 4])?)?
        .compose(&o(&[0, 1, 3, 4])?)?
        .compose(&o(&[0, 1, 2, 3])?)?
        .compose(&o(&[0, 2, 3, 4])?.inverse())?
        .compose(&o(&[0, 1, 2, 4])?.inverse())?;
    Ok(GroupForm::trusted(p))
}

/// `δ³_{χ,η}Ω`, with the inner conjugations by η-terms written out.
pub fn delta3_full(chi: &AutForm, eta: &GroupForm, omega: &GroupForm) -> Result<GroupForm> {
    check3(chi, omega)?;
    if eta.degree() != 2 {
        return Err(Error::Degree(format!("η must be a 2-form, not a {}-form", eta.degree())));
    }
    chi.check_acts_on(eta)?;
    let act = |c: &GroupPoint<SimplexRing>, g: &GroupPoint<SimplexRing>| chi.action().act(c, g);
    let c01 = at(chi.chi(), 4, &[0, 1])?;
    let c12 = at(chi.chi(), 4, &[1, 2])?;
    let o = |v: &[usize]| at(omega, 4, v);
    let e = |v: &[usize]| at(eta, 4, v);
    let first = act(&c01, &o(&[1, 2, 3, 4])?)?;
    let second = act(&c01, &e(&[1, 2, 3])?)?.conjugate(&o(&[0, 1, 3, 4])?)?;
    let third = o(&[0, 1, 2, 3])?;
    let fourth = e(&[0, 1, 2])?.conjugate(&o(&[0, 2, 3, 4])?)?.inverse();
    let twisted = act(&c01, &act(&c12, &e(&[2, 3, 4])?)?)?;
    let fifth = twisted.conjugate(&o(&[0, 1, 2, 4])?)?.inverse();
    let p = first.compose(&second)?.compose(&third)?.compose(&fourth)?.compose(&fifth)?;
    Ok(GroupForm::trusted(p))
}

fn check3(chi: &AutForm, omega: &GroupForm) -> Result<()> {
    if chi.degree() != 1 || omega.degree() != 3 {
        return Err(Error::Degree(format!("δ³ takes a 1-form and a 3-form, not {} and {}", chi.degree(), omega.degree())));
    }
    chi.check_acts_on(omega)
}
