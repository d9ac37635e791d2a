//! Coactions `ρ: A_G → A_Γ ⊗ A_G`, i.e. actions of a group Γ on a group G
//! by automorphisms.

use std::sync::Arc;

use super::tensor::{embed, tensor_algebra};
use super::{builtin_group, split_by_left, ColieTensor, GroupPoint, HopfRef};
use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, BaseRing, CommAlgebra, Poly};

pub struct Coaction {
    name: String,
    acting: HopfRef,
    acted: HopfRef,
    mixed: AlgebraRef,
    rho: Vec<Poly>,
}

pub type CoactionRef = Arc<Coaction>;

impl std::fmt::Debug for Coaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coaction({})", self.name)
    }
}

impl Coaction {
    /// `rho` gives, per generator of G, a polynomial in `γ_1`-variables of Γ
    /// followed by `g_2`-variables of G. The action axioms are verified.
    pub fn new(name: &str, acting: &HopfRef, acted: &HopfRef, rho: &[&str]) -> Result<CoactionRef> {
        let mixed = tensor_algebra(&[(acting.algebra(), "1"), (acted.algebra(), "2")])?;
        let rho = rho.iter().map(|t| mixed.parse(t)).collect::<Result<Vec<_>>>()?;
        Self::from_parts(name, acting, acted, mixed, rho)
    }

    pub(crate) fn from_parts(
        name: &str,
        acting: &HopfRef,
        acted: &HopfRef,
        mixed: AlgebraRef,
        rho: Vec<Poly>,
    ) -> Result<CoactionRef> {
        let c = Self::unchecked(name, acting, acted, mixed, rho)?;
        if let Some(e) = c.axiom_failures().into_iter().next() {
            return Err(e);
        }
        Ok(c)
    }

    pub(crate) fn unchecked(
        name: &str,
        acting: &HopfRef,
        acted: &HopfRef,
        mixed: AlgebraRef,
        rho: Vec<Poly>,
    ) -> Result<CoactionRef> {
        if rho.len() != acted.algebra().ngens() {
            return Err(Error::Coaction(format!(
                "`{name}` gives {} images for {} generators",
                rho.len(),
                acted.algebra().ngens()
            )));
        }
        let rho = rho.iter().map(|p| mixed.normalize(p)).collect();
        Ok(Arc::new(Coaction { name: name.to_string(), acting: acting.clone(), acted: acted.clone(), mixed, rho }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn acting(&self) -> &HopfRef {
        &self.acting
    }

    pub fn acted(&self) -> &HopfRef {
        &self.acted
    }

    pub fn mixed(&self) -> &AlgebraRef {
        &self.mixed
    }

    pub fn rho(&self) -> &[Poly] {
        &self.rho
    }

    /// `γ(g)` for points with values in a common algebra.
    pub fn act<C: CommAlgebra + Clone>(&self, gamma: &GroupPoint<C>, g: &GroupPoint<C>) -> Result<GroupPoint<C>> {
        if !gamma.group().same_group(&self.acting) {
            return Err(Error::Coaction(format!(
                "`{}` is acted on by `{}`, not `{}`",
                self.acted.name(),
                self.acting.name(),
                gamma.group().name()
            )));
        }
        if !g.group().same_group(&self.acted) {
            return Err(Error::Coaction(format!("`{}` acts on `{}`, not `{}`", self.acting.name(), self.acted.name(), g.group().name())));
        }
        let mut both = gamma.images().to_vec();
        both.extend(g.images().iter().cloned());
        let images = self.rho.iter().map(|r| r.evaluate(g.target(), &both)).collect();
        GroupPoint::unchecked(g.group(), g.target(), images)
    }

    /// Every failing axiom of the action, with witnesses.
    pub fn axiom_failures(&self) -> Vec<Error> {
        let mut out = Vec::new();
        let fail = |axiom: &str, g: &str, witness: String| Error::Axiom {
            axiom: axiom.to_string(),
            generator: g.to_string(),
            witness,
        };
        for r in self.acted.algebra().relations() {
            let v = self.mixed.normalize(&r.evaluate(&self.mixed, &self.rho));
            if !v.is_zero() {
                out.push(fail("coaction respects relations", &r.to_string(), v.to_string()));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let names = self.acted.algebra().generators();
        let compare = |out: &mut Vec<Error>, axiom: &str, l: Result<GroupPoint<AlgebraRef>>, r: Result<GroupPoint<AlgebraRef>>| {
            match (l, r) {
                (Ok(l), Ok(r)) => {
                    for (i, (a, b)) in l.images().iter().zip(r.images()).enumerate() {
                        if !l.target().equal(a, b) {
                            out.push(fail(axiom, &names[i], format!("{a} vs {b}")));
                        }
                    }
                }
                (Err(e), _) | (_, Err(e)) => out.push(e),
            }
        };
        let (ka, kg) = (self.acting.algebra().ngens(), self.acted.algebra().ngens());
        let vars = |alg: &AlgebraRef, off: usize, n: usize| (0..n).map(|i| alg.var(off + i)).collect::<Vec<_>>();

        // Identity acts trivially: over A_G.
        let g = self.acted.universal_point();
        let e = GroupPoint::identity(&self.acting, self.acted.algebra());
        compare(&mut out, "identity acts trivially", self.act(&e, &g), Ok(g.clone()));

        // (γ1γ2)(g) = γ1(γ2(g)) over Γ⊗Γ⊗G.
        match tensor_algebra(&[(self.acting.algebra(), "1"), (self.acting.algebra(), "2"), (self.acted.algebra(), "3")]) {
            Ok(t) => {
                let g1 = GroupPoint::unchecked(&self.acting, &t, vars(&t, 0, ka));
                let g2 = GroupPoint::unchecked(&self.acting, &t, vars(&t, ka, ka));
                let h = GroupPoint::unchecked(&self.acted, &t, vars(&t, 2 * ka, kg));
                if let (Ok(g1), Ok(g2), Ok(h)) = (g1, g2, h) {
                    let lhs = g1.compose(&g2).and_then(|p| self.act(&p, &h));
                    let rhs = self.act(&g2, &h).and_then(|p| self.act(&g1, &p));
                    compare(&mut out, "action is multiplicative in the acting group", lhs, rhs);
                }
            }
            Err(e) => out.push(e),
        }

        // γ(h1h2) = γ(h1)γ(h2) over Γ⊗G⊗G.
        match tensor_algebra(&[(self.acting.algebra(), "1"), (self.acted.algebra(), "2"), (self.acted.algebra(), "3")]) {
            Ok(t) => {
                let g1 = GroupPoint::unchecked(&self.acting, &t, vars(&t, 0, ka));
                let h1 = GroupPoint::unchecked(&self.acted, &t, vars(&t, ka, kg));
                let h2 = GroupPoint::unchecked(&self.acted, &t, vars(&t, ka + kg, kg));
                if let (Ok(g1), Ok(h1), Ok(h2)) = (g1, h1, h2) {
                    let lhs = h1.compose(&h2).and_then(|p| self.act(&g1, &p));
                    let rhs = self.act(&g1, &h1).and_then(|a| self.act(&g1, &h2).and_then(|b| a.compose(&b)));
                    compare(&mut out, "action is by homomorphisms", lhs, rhs);
                }
            }
            Err(e) => out.push(e),
        }
        out
    }

    /// `λ̄(z̄) ∈ ω_Γ ⊗ ω_G` for the `j`-th co-Lie basis class of G.
    pub fn lambda_bar_basis(&self, j: usize) -> Result<ColieTensor> {
        let mut v = vec![self.acted.base().zero(); self.acted.colie().dim()];
        v[j] = self.acted.base().one();
        self.lambda_bar(&v)
    }

    /// `λ̄` of a co-Lie vector of G: classes of `ρ(z) − 1⊗z = Σ d_i ⊗ z_i`.
    pub fn lambda_bar(&self, v: &[crate::exactalg::Scalar]) -> Result<ColieTensor> {
        let base = self.acted.base();
        let z = self.acted.colie_representative(v);
        let rz = z.evaluate(&self.mixed, &self.rho);
        let one_z = embed(&z, &self.mixed, self.acting.algebra().ngens());
        let tail = self.mixed.normalize(&(&rz - &one_z));
        let split = split_by_left(&tail, self.acting.algebra().ngens(), self.acting.algebra().ring(), self.acted.algebra().ring());
        let mut out = ColieTensor::zero();
        for (d, zd) in split {
            let d = &d - &Poly::constant(d.ring(), self.acting.eta(&d));
            let zd = &zd - &Poly::constant(zd.ring(), self.acted.eta(&zd));
            if d.is_zero() || zd.is_zero() {
                continue;
            }
            let rd = self.acting.reduce_colie(&d)?;
            let rz = self.acted.reduce_colie(&zd)?;
            out.add_outer(base, &base.one(), &rd, &rz);
        }
        Ok(out)
    }

    /// The linear action of a B-point `γ` of Γ on `ω_G ⊗ B`: the matrix
    /// `M` with `γ(φ)*_j = Σ_k M_jk φ*_k` for points `φ` of the square-zero kernel.
    pub fn linearized_at(&self, gamma: &GroupPoint<AlgebraRef>) -> Result<Vec<Vec<Poly>>> {
        if !gamma.group().same_group(&self.acting) {
            return Err(Error::Coaction(format!("`{}` is not the acting group", gamma.group().name())));
        }
        let b = gamma.target();
        let ka = self.acting.algebra().ngens();
        let colie = self.acted.colie();
        let mut subst: Vec<Poly> = gamma.images().to_vec();
        subst.extend(self.acted.counit().iter().map(|c| Poly::constant(b.ring(), c.clone())));
        let mut m = Vec::with_capacity(colie.dim());
        for &bj in colie.basis() {
            let mut row = vec![Poly::zero(b.ring()); colie.dim()];
            for h in 0..self.acted.algebra().ngens() {
                let dh = self.rho[bj].partial_derivative(ka + h)?;
                let dh = b.normalize(&dh.evaluate(b, &subst));
                if dh.is_zero() {
                    continue;
                }
                for (k, c) in colie.generator_class(h).iter().enumerate() {
                    row[k] = &row[k] + &dh.scale(c);
                }
            }
            m.push(row.iter().map(|p| b.normalize(p)).collect());
        }
        Ok(m)
    }
}

/// `conjugation(G)` for a built-in `G`, or `gm_scales_ga` (`ρ(x) = t⊗x`).
pub fn builtin_action(name: &str, base: BaseRing) -> Result<CoactionRef> {
    if name == "gm_scales_ga" {
        let gm = builtin_group("Gm", base)?;
        let ga = builtin_group("Ga", base)?;
        return Coaction::new("gm_scales_ga", &gm, &ga, &["t_1*x_2"]);
    }
    if let Some(inner) = name.strip_prefix("conjugation(").and_then(|s| s.strip_suffix(')')) {
        return builtin_group(inner.trim(), base)?.conjugation();
    }
    Err(Error::UnknownName(format!("action `{name}`")))
}
