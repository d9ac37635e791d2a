//! Points of an affine group with values in a commutative algebra.

use std::fmt;

use super::HopfRef;
use crate::error::{Error, Result};
use crate::exactalg::{CommAlgebra, Poly};

/// A `C`-valued point of the group: images of the Hopf generators in `C`.
#[derive(Clone)]
pub struct GroupPoint<C: CommAlgebra + Clone> {
    group: HopfRef,
    target: C,
    images: Vec<C::Elem>,
}

impl<C: CommAlgebra + Clone> fmt::Debug for GroupPoint<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupPoint({})", self.render())
    }
}

impl<C: CommAlgebra + Clone> GroupPoint<C> {
    /// Checks that the images satisfy the group's relations.
    pub fn new(group: &HopfRef, target: &C, images: Vec<C::Elem>) -> Result<Self> {
        let p = Self::unchecked(group, target, images)?;
        let alg = group.algebra();
        for &(g, h) in alg.inverse_pairs() {
            let prod = target.mul(&p.images[g], &p.images[h]);
            if !target.equal(&prod, &target.one()) {
                return Err(Error::Unit(format!(
                    "image `{}` of `{}` is not inverse to the image of `{}`",
                    target.render(&p.images[h]),
                    alg.generators()[h],
                    alg.generators()[g]
                )));
            }
        }
        for r in alg.extra_relations() {
            let v = r.evaluate(target, &p.images);
            if !target.is_zero(&v) {
                return Err(Error::Point(format!("relation `{r}` evaluates to `{}`", target.render(&v))));
            }
        }
        Ok(p)
    }

    pub fn unchecked(group: &HopfRef, target: &C, images: Vec<C::Elem>) -> Result<Self> {
        if images.len() != group.algebra().ngens() {
            return Err(Error::Point(format!(
                "{} images for {} generators",
                images.len(),
                group.algebra().ngens()
            )));
        }
        Ok(GroupPoint { group: group.clone(), target: target.clone(), images })
    }

    pub fn identity(group: &HopfRef, target: &C) -> Self {
        let images = group.counit().iter().map(|c| target.from_scalar(c)).collect();
        GroupPoint { group: group.clone(), target: target.clone(), images }
    }

    pub fn group(&self) -> &HopfRef {
        &self.group
    }

    pub fn target(&self) -> &C {
        &self.target
    }

    pub fn images(&self) -> &[C::Elem] {
        &self.images
    }

    /// Value of an element of the Hopf algebra at this point.
    pub fn eval(&self, a: &Poly) -> C::Elem {
        a.evaluate(&self.target, &self.images)
    }

    fn check_group(&self, other: &GroupPoint<C>) -> Result<()> {
        if !self.group.same_group(&other.group) {
            return Err(Error::Point(format!(
                "points of different groups `{}` and `{}`",
                self.group.name(),
                other.group.name()
            )));
        }
        Ok(())
    }

    /// Group law through the comultiplication.
    pub fn compose(&self, other: &GroupPoint<C>) -> Result<GroupPoint<C>> {
        self.check_group(other)?;
        let mut both = self.images.clone();
        both.extend(other.images.iter().cloned());
        let images = self.group.comult().iter().map(|m| m.evaluate(&self.target, &both)).collect();
        Ok(GroupPoint { group: self.group.clone(), target: self.target.clone(), images })
    }

    /// Inverse through the antipode.
    pub fn inverse(&self) -> GroupPoint<C> {
        let images = self.group.antipode().iter().map(|s| self.eval(s)).collect();
        GroupPoint { group: self.group.clone(), target: self.target.clone(), images }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, other: &GroupPoint<C>) -> Result<GroupPoint<C>> {
        self.compose(other)?.compose(&self.inverse())?.compose(&other.inverse())
    }

    /// `g h g⁻¹` with `g = self`.
    pub fn conjugate(&self, h: &GroupPoint<C>) -> Result<GroupPoint<C>> {
        self.compose(h)?.compose(&self.inverse())
    }

    /// `self^k` for an integer `k`.
    pub fn power(&self, k: i64) -> Result<GroupPoint<C>> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupPoint::identity(&self.group, &self.target);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// First generator where the two points differ.
    pub fn difference(&self, other: &GroupPoint<C>) -> Option<String> {
        let names = self.group.algebra().generators();
        for (i, (a, b)) in self.images.iter().zip(&other.images).enumerate() {
            if !self.target.equal(a, b) {
                return Some(format!(
                    "{}: {} vs {}",
                    names[i],
                    self.target.render(a),
                    self.target.render(b)
                ));
            }
        }
        None
    }

    pub fn same(&self, other: &GroupPoint<C>) -> bool {
        self.group.same_group(&other.group) && self.difference(other).is_none()
    }

    pub fn is_identity(&self) -> bool {
        self.same(&GroupPoint::identity(&self.group, &self.target))
    }

    /// Transports the point along a ring map `C → D`.
    pub fn map<D: CommAlgebra + Clone>(
        &self,
        target: &D,
        f: impl Fn(&C::Elem) -> Result<D::Elem>,
    ) -> Result<GroupPoint<D>> {
        let images = self.images.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(GroupPoint { group: self.group.clone(), target: target.clone(), images })
    }

    pub fn render(&self) -> String {
        let names = self.group.algebra().generators();
        self.images
            .iter()
            .enumerate()
            .map(|(i, e)| format!("{} -> {}", names[i], self.target.render(e)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}
