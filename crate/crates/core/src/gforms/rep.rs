//! Classical representations `u: ω_G → Ωⁿ` and the classical formulas for
//! brackets, squares and the adjoint action.

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, Poly, Scalar};
use crate::forms::ClassicalForm;
use crate::hopf::{ColieTensor, Coaction, HopfAlgebra};
use crate::simplex::Flavor;

/// Values of a linear map on the co-Lie basis.
pub type ClassicalRep = Vec<ClassicalForm>;

pub fn rep_zero(group: &HopfAlgebra, algebra: &AlgebraRef, flavor: Flavor, degree: usize) -> ClassicalRep {
    vec![ClassicalForm::zero(algebra, flavor, degree); group.colie().dim()]
}

pub fn rep_add(a: &[ClassicalForm], b: &[ClassicalForm]) -> Result<ClassicalRep> {
    if a.len() != b.len() {
        return Err(Error::Representation("representations of different ranks".into()));
    }
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn rep_scale(a: &[ClassicalForm], s: &Scalar) -> ClassicalRep {
    a.iter().map(|x| x.scale(s)).collect()
}

/// `u(v) = Σ_j v_j u_j`.
pub fn rep_apply(rep: &[ClassicalForm], v: &[Scalar], algebra: &AlgebraRef, flavor: Flavor, degree: usize) -> Result<ClassicalForm> {
    let mut acc = ClassicalForm::zero(algebra, flavor, degree);
    for (u, c) in rep.iter().zip(v) {
        if u.degree() != degree {
            return Err(Error::Degree(format!("{}-form in a representation of degree {degree}", u.degree())));
        }
        if !algebra.base().is_zero(c) {
            acc = acc.add(&u.scale(c))?;
        }
    }
    Ok(acc)
}

fn degree_of(rep: &[ClassicalForm]) -> Result<(AlgebraRef, Flavor, usize)> {
    let f = rep.first().ok_or_else(|| Error::Representation("empty representation".into()))?;
    Ok((f.algebra().clone(), f.flavor(), f.degree()))
}

/// `Σ c_jk f_j ∧ g_k` for a tensor `Σ c_jk e_j ⊗ e_k`.
pub fn pair_tensor(t: &ColieTensor, f: &[ClassicalForm], g: &[ClassicalForm]) -> Result<ClassicalForm> {
    let (alg, flavor, m) = degree_of(f)?;
    let (_, _, n) = degree_of(g)?;
    let mut acc = ClassicalForm::zero(&alg, flavor, m + n);
    for (&(j, k), c) in &t.entries {
        acc = acc.add(&f[j].wedge(&g[k])?.scale(c))?;
    }
    Ok(acc)
}

/// `z̄ ↦ (f*⊗g*)(λ(z̄))`.
pub fn classical_bracket(group: &HopfAlgebra, f: &[ClassicalForm], g: &[ClassicalForm]) -> Result<ClassicalRep> {
    (0..group.colie().dim()).map(|j| pair_tensor(&group.lambda_basis(j)?, f, g)).collect()
}

/// `z̄ ↦ (χ*⊗g*)(λ̄(z̄))`.
pub fn classical_aut_bracket(action: &Coaction, chi: &[ClassicalForm], g: &[ClassicalForm]) -> Result<ClassicalRep> {
    (0..action.acted().colie().dim()).map(|j| pair_tensor(&action.lambda_bar_basis(j)?, chi, g)).collect()
}

/// `[f]^(2)(z̄) = Σ f*(α_i) ∧ f*(β_i)` over the tail of `μ(z)`, for odd degree.
pub fn classical_square(group: &HopfAlgebra, f: &[ClassicalForm]) -> Result<ClassicalRep> {
    let (alg, flavor, n) = degree_of(f)?;
    if n % 2 == 0 {
        return Err(Error::Unsupported(format!("the square is defined for odd degrees, not {n}")));
    }
    let colie = group.colie();
    let mut out = Vec::with_capacity(colie.dim());
    for j in 0..colie.dim() {
        let mut v = vec![group.base().zero(); colie.dim()];
        v[j] = group.base().one();
        let tail = group.comult_tail(&group.colie_representative(&v))?;
        let mut acc = ClassicalForm::zero(&alg, flavor, 2 * n);
        for (a, b) in &tail {
            let fa = rep_apply(f, &group.reduce_colie(a)?, &alg, flavor, n)?;
            let fb = rep_apply(f, &group.reduce_colie(b)?, &alg, flavor, n)?;
            acc = acc.add(&fa.wedge(&fb)?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `φ'_j = Σ_k M_jk φ_k` for a matrix over B.
pub fn classical_adjoint(m: &[Vec<Poly>], phi: &[ClassicalForm]) -> Result<ClassicalRep> {
    let (alg, flavor, n) = degree_of(phi)?;
    m.iter()
        .map(|row| {
            let mut acc = ClassicalForm::zero(&alg, flavor, n);
            for (c, f) in row.iter().zip(phi) {
                acc = acc.add(&f.times(c))?;
            }
            Ok(acc)
        })
        .collect()
}
