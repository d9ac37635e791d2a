//! Kernels of `G(C) → G(C/K)` for square-zero ideals `K`, compared with
//! linear maps `ω_G → K`.

use std::fmt;

use super::{GroupPoint, HopfRef};
use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, BaseRing, CommAlgebra, Poly, Scalar};
use crate::simplex::{Key, SimplexElement, SimplexRing};

/// `B ⊕ K` with `K = B^r` free on named generators and `K² = 0`.
#[derive(Clone, Debug)]
pub struct SquareZeroExt {
    algebra: AlgebraRef,
    names: Vec<String>,
}

/// An element `b + Σ k_i ε_i` of a [`SquareZeroExt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqElem {
    pub main: Poly,
    pub kernel: Vec<Poly>,
}

impl SquareZeroExt {
    pub fn new(algebra: &AlgebraRef, names: Vec<String>) -> Self {
        SquareZeroExt { algebra: algebra.clone(), names }
    }

    /// `B[ε]/(ε²)`.
    pub fn dual_numbers(algebra: &AlgebraRef) -> Self {
        Self::new(algebra, vec!["eps".into()])
    }

    /// `B ⊕ Ω¹`, with `dx` for each coordinate generator `x`.
    pub fn with_differentials(algebra: &AlgebraRef) -> Self {
        let names = algebra.coordinates().iter().map(|&g| format!("d{}", algebra.generators()[g])).collect();
        Self::new(algebra, names)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem(&self, main: Poly, kernel: Vec<Poly>) -> SqElem {
        SqElem {
            main: self.algebra.normalize(&main),
            kernel: kernel.iter().map(|k| self.algebra.normalize(k)).collect(),
        }
    }

    /// The kernel generator `ε_i`.
    pub fn eps(&self, i: usize) -> SqElem {
        let mut k = vec![Poly::zero(self.algebra.ring()); self.names.len()];
        k[i] = Poly::one(self.algebra.ring());
        SqElem { main: Poly::zero(self.algebra.ring()), kernel: k }
    }

    pub fn from_base(&self, b: &Poly) -> SqElem {
        self.elem(b.clone(), vec![Poly::zero(self.algebra.ring()); self.names.len()])
    }
}

impl CommAlgebra for SquareZeroExt {
    type Elem = SqElem;

    fn base(&self) -> BaseRing {
        self.algebra.base()
    }
    fn zero(&self) -> SqElem {
        self.from_base(&Poly::zero(self.algebra.ring()))
    }
    fn one(&self) -> SqElem {
        self.from_base(&Poly::one(self.algebra.ring()))
    }
    fn from_scalar(&self, c: &Scalar) -> SqElem {
        self.from_base(&Poly::constant(self.algebra.ring(), c.clone()))
    }
    fn add(&self, a: &SqElem, b: &SqElem) -> SqElem {
        SqElem {
            main: &a.main + &b.main,
            kernel: a.kernel.iter().zip(&b.kernel).map(|(x, y)| x + y).collect(),
        }
    }
    fn mul(&self, a: &SqElem, b: &SqElem) -> SqElem {
        let kernel = a
            .kernel
            .iter()
            .zip(&b.kernel)
            .map(|(x, y)| &(&a.main * y) + &(&b.main * x))
            .collect();
        self.elem(&a.main * &b.main, kernel)
    }
    fn is_zero(&self, a: &SqElem) -> bool {
        self.algebra.is_zero_elem(&a.main) && a.kernel.iter().all(|k| self.algebra.is_zero_elem(k))
    }
    fn render(&self, a: &SqElem) -> String {
        let mut parts = Vec::new();
        if !a.main.is_zero() {
            parts.push(a.main.to_string());
        }
        for (k, n) in a.kernel.iter().zip(&self.names) {
            if k.is_zero() {
                continue;
            }
            if k.is_one() {
                parts.push(n.clone());
            } else if k.len() == 1 {
                parts.push(format!("{k}*{n}"));
            } else {
                parts.push(format!("({k})*{n}"));
            }
        }
        let mut out = String::new();
        for (i, part) in parts.iter().enumerate() {
            match (i, part.strip_prefix('-')) {
                (0, _) => out.push_str(part),
                (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
                (_, None) => out.push_str(&format!(" + {part}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for SqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.main)?;
        for k in &self.kernel {
            write!(f, " ; {k}")?;
        }
        Ok(())
    }
}

/// An algebra `C` with a square-zero ideal `K ≅ B^r` and retraction `C → B`.
pub trait SquareZeroTarget: CommAlgebra + Clone {
    fn base_algebra(&self) -> &AlgebraRef;
    fn kernel_rank(&self) -> usize;
    fn retract(&self, e: &Self::Elem) -> Result<Poly>;
    /// Coordinates of `e − retract(e)` in `K`.
    fn kernel_part(&self, e: &Self::Elem) -> Result<Vec<Poly>>;
    fn from_parts(&self, main: &Poly, kernel: &[Poly]) -> Result<Self::Elem>;

    /// Verifies `K² = 0` on kernel generators.
    fn check_square_zero(&self) -> Result<()> {
        let alg = self.base_algebra();
        let r = self.kernel_rank();
        let zero = Poly::zero(alg.ring());
        let gens: Vec<Self::Elem> = (0..r)
            .map(|i| {
                let mut k = vec![zero.clone(); r];
                k[i] = Poly::one(alg.ring());
                self.from_parts(&zero, &k)
            })
            .collect::<Result<_>>()?;
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i..] {
                let p = self.mul(a, b);
                if !self.is_zero(&p) {
                    return Err(Error::Precondition(format!("kernel is not square-zero: {}", self.render(&p))));
                }
            }
        }
        Ok(())
    }
}

impl SquareZeroTarget for SquareZeroExt {
    fn base_algebra(&self) -> &AlgebraRef {
        &self.algebra
    }
    fn kernel_rank(&self) -> usize {
        self.names.len()
    }
    fn retract(&self, e: &SqElem) -> Result<Poly> {
        Ok(e.main.clone())
    }
    fn kernel_part(&self, e: &SqElem) -> Result<Vec<Poly>> {
        Ok(e.kernel.clone())
    }
    fn from_parts(&self, main: &Poly, kernel: &[Poly]) -> Result<SqElem> {
        if kernel.len() != self.names.len() {
            return Err(Error::Degree(format!("{} kernel coordinates for rank {}", kernel.len(), self.names.len())));
        }
        Ok(self.elem(main.clone(), kernel.to_vec()))
    }
}

/// `O(Δ¹) = B ⊕ Ω¹` with `K` spanned by `ε_{1,c}`; higher degrees have
/// `K² ≠ 0` and are rejected.
impl SquareZeroTarget for SimplexRing {
    fn base_algebra(&self) -> &AlgebraRef {
        self.algebra()
    }
    fn kernel_rank(&self) -> usize {
        self.coords().len()
    }
    fn retract(&self, e: &SimplexElement) -> Result<Poly> {
        e.constant_part()
    }
    fn kernel_part(&self, e: &SimplexElement) -> Result<Vec<Poly>> {
        if self.degree() != 1 {
            return Err(Error::Precondition(format!("O(Δ^{}) is not a square-zero extension", self.degree())));
        }
        (0..self.coords().len())
            .map(|c| e.coefficient(&Key { simplices: vec![1], pattern: vec![c as u8] }))
            .collect()
    }
    fn from_parts(&self, main: &Poly, kernel: &[Poly]) -> Result<SimplexElement> {
        if self.degree() != 1 {
            return Err(Error::Precondition(format!("O(Δ^{}) is not a square-zero extension", self.degree())));
        }
        let mut acc = self.from_base(main);
        for (c, k) in kernel.iter().enumerate() {
            acc = &acc + &(&self.from_base(k) * &self.eps(1, c)?);
        }
        Ok(acc)
    }
    fn check_square_zero(&self) -> Result<()> {
        if self.degree() != 1 {
            return Err(Error::Precondition(format!("O(Δ^{}) is not a square-zero extension", self.degree())));
        }
        Ok(())
    }
}

/// A linear map `ω_G → K`: for each co-Lie basis class, its coordinates in `K`.
pub type LinearMap = Vec<Vec<Poly>>;

/// `ker(G(C) → G(C/K))` with its identification `u ↦ (a ↦ η(a) + u(a − η(a)))`.
pub struct DeformationKernel<T: SquareZeroTarget> {
    group: HopfRef,
    target: T,
}

impl<T: SquareZeroTarget> DeformationKernel<T> {
    pub fn new(group: &HopfRef, target: &T) -> Result<Self> {
        target.check_square_zero()?;
        if target.base_algebra().base() != group.base() {
            return Err(Error::Context("group and extension over different base rings".into()));
        }
        Ok(DeformationKernel { group: group.clone(), target: target.clone() })
    }

    pub fn group(&self) -> &HopfRef {
        &self.group
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    /// The kernel point attached to a linear map.
    pub fn point_from_linear(&self, u: &LinearMap) -> Result<GroupPoint<T>> {
        let colie = self.group.colie();
        let alg = self.target.base_algebra();
        let r = self.target.kernel_rank();
        if u.len() != colie.dim() || u.iter().any(|v| v.len() != r) {
            return Err(Error::Degree(format!("linear map must be {}×{r}", colie.dim())));
        }
        let mut images = Vec::new();
        for g in 0..self.group.algebra().ngens() {
            let mut k = vec![Poly::zero(alg.ring()); r];
            for (j, c) in colie.generator_class(g).iter().enumerate() {
                for (i, ki) in k.iter_mut().enumerate() {
                    *ki = &*ki + &u[j][i].scale(c);
                }
            }
            let main = Poly::constant(alg.ring(), self.group.counit()[g].clone());
            images.push(self.target.from_parts(&main, &k)?);
        }
        GroupPoint::new(&self.group, &self.target, images)
    }

    /// Inverse of [`Self::point_from_linear`]; fails off the kernel.
    pub fn linear_from_point(&self, p: &GroupPoint<T>) -> Result<LinearMap> {
        let alg = self.target.base_algebra();
        for (g, img) in p.images().iter().enumerate() {
            let main = self.target.retract(img)?;
            let want = Poly::constant(alg.ring(), self.group.counit()[g].clone());
            if !alg.is_zero_elem(&(&main - &want)) {
                return Err(Error::Point(format!(
                    "`{}` maps to {main} modulo the kernel, not {want}",
                    self.group.algebra().generators()[g]
                )));
            }
        }
        self.group
            .colie()
            .basis()
            .iter()
            .map(|&b| self.target.kernel_part(&p.images()[b]))
            .collect()
    }

    /// The B-module structure: `b·u`.
    pub fn scale(&self, b: &Poly, p: &GroupPoint<T>) -> Result<GroupPoint<T>> {
        let u = self.linear_from_point(p)?;
        let alg = self.target.base_algebra();
        let scaled = u.iter().map(|v| v.iter().map(|k| alg.normalize(&(b * k))).collect()).collect();
        self.point_from_linear(&scaled)
    }

    /// Checks that composing points adds linear maps and that points commute;
    /// returns a witness on failure.
    pub fn check_pair(&self, u: &LinearMap, v: &LinearMap) -> Result<Option<String>> {
        let alg = self.target.base_algebra();
        let (p, q) = (self.point_from_linear(u)?, self.point_from_linear(v)?);
        let pq = p.compose(&q)?;
        let qp = q.compose(&p)?;
        if let Some(w) = pq.difference(&qp) {
            return Ok(Some(format!("kernel points do not commute at {w}")));
        }
        let sum: LinearMap = u
            .iter()
            .zip(v)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| alg.normalize(&(x + y))).collect())
            .collect();
        let got = self.linear_from_point(&pq)?;
        if got != sum {
            return Ok(Some(format!("composition gives {got:?} instead of the sum {sum:?}")));
        }
        if let Some(w) = self.point_from_linear(&sum)?.difference(&pq) {
            return Ok(Some(format!("point of the sum differs at {w}")));
        }
        Ok(None)
    }
}
