//! Hopf algebras of affine groups, co-Lie modules and the `λ`, `λ̄` maps,
//! coactions, and points with values in arbitrary commutative algebras.

mod coaction;
mod deformation;
mod point;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use coaction::{builtin_action, Coaction, CoactionRef};
pub use deformation::{DeformationKernel, LinearMap, SqElem, SquareZeroExt, SquareZeroTarget};
pub use point::GroupPoint;
pub use tensor::tensor_algebra;

use crate::error::{Error, Result};
use crate::exactalg::linalg::{Echelon, SparseVec};
use crate::exactalg::{AlgebraRef, BaseRing, CommAlgebra, Monomial, Poly, PolyRing, Scalar};

/// A vector of the co-Lie module `ω = I/I²` in its chosen basis.
pub type ColieVec = Vec<Scalar>;

/// An element of `ω_1 ⊗ ω_2`: sparse coefficients on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColieTensor {
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl ColieTensor {
    pub fn zero() -> Self {
        ColieTensor { entries: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn add_outer(&mut self, base: BaseRing, c: &Scalar, a: &[Scalar], b: &[Scalar]) {
        for (i, x) in a.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if base.is_zero(y) {
                    continue;
                }
                let v = base.mul(c, &base.mul(x, y));
                let cur = self.entries.remove(&(i, j)).unwrap_or_else(|| base.zero());
                let new = base.add(&cur, &v);
                if !base.is_zero(&new) {
                    self.entries.insert((i, j), new);
                }
            }
        }
    }

    /// Swaps the two tensor factors.
    pub fn transpose(&self) -> ColieTensor {
        ColieTensor { entries: self.entries.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn scale(&self, base: BaseRing, s: &Scalar) -> ColieTensor {
        let mut out = ColieTensor::zero();
        for (&(i, j), c) in &self.entries {
            let v = base.mul(c, s);
            if !base.is_zero(&v) {
                out.entries.insert((i, j), v);
            }
        }
        out
    }

    pub fn render(&self, base: BaseRing, left: &[String], right: &[String]) -> String {
        let parts: Vec<(Scalar, String)> = self
            .entries
            .iter()
            .map(|(&(i, j), c)| (c.clone(), format!("{}⊗{}", left[i], right[j])))
            .collect();
        crate::exactalg::render_terms(base, parts.iter().map(|(c, t)| (c, t.clone())))
    }
}

/// Basis of `I/I²` and the class map, read off the Jacobian of the relations
/// at the identity.
#[derive(Clone, Debug)]
pub struct CoLie {
    basis: Vec<usize>,
    gen_coords: Vec<ColieVec>,
}

impl CoLie {
    fn new(algebra: &AlgebraRef, counit: &[Scalar]) -> Result<Self> {
        let base = algebra.base();
        let k = algebra.ngens();
        // Keys run backwards so later generators become pivots and earlier
        // ones stay in the basis (e.g. `a` survives while `abar` is eliminated).
        let mut ech: Echelon<usize> = Echelon::new(base);
        for r in algebra.relations() {
            let mut row = SparseVec::new();
            for g in 0..k {
                let d = eval_scalar(&r.partial_derivative(g)?, counit);
                if !base.is_zero(&d) {
                    row.insert(k - 1 - g, d);
                }
            }
            ech.insert(&row)?;
        }
        let pivots: Vec<usize> = ech.pivots().map(|&key| k - 1 - key).collect();
        let basis: Vec<usize> = (0..k).filter(|g| !pivots.contains(g)).collect();
        let mut gen_coords = Vec::with_capacity(k);
        for g in 0..k {
            let mut v = SparseVec::new();
            v.insert(k - 1 - g, base.one());
            let red = ech.reduce(&v);
            let coords = basis
                .iter()
                .map(|&b| red.get(&(k - 1 - b)).cloned().unwrap_or_else(|| base.zero()))
                .collect();
            gen_coords.push(coords);
        }
        Ok(CoLie { basis, gen_coords })
    }

    /// Generators whose classes `[g − η(g)]` form the basis.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `[g − η(g)]`.
    pub fn generator_class(&self, g: usize) -> &ColieVec {
        &self.gen_coords[g]
    }
}

/// Value of a polynomial at a scalar point.
pub(crate) fn eval_scalar(p: &Poly, point: &[Scalar]) -> Scalar {
    let ring = p.ring();
    let images: Vec<Poly> = point.iter().map(|c| Poly::constant(ring, c.clone())).collect();
    p.evaluate(ring, &images).constant_term()
}

/// A commutative Hopf algebra given on generators.
pub struct HopfAlgebra {
    name: String,
    algebra: AlgebraRef,
    pair: AlgebraRef,
    comult: Vec<Poly>,
    counit: Vec<Scalar>,
    antipode: Vec<Poly>,
    colie: CoLie,
    conjugation: OnceLock<Result<(AlgebraRef, Vec<Poly>)>>,
}

pub type HopfRef = Arc<HopfAlgebra>;

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({})", self.name)
    }
}

/// Hopf structure given as text: comultiplication in `g_1`, `g_2`.
pub struct HopfSpec<'a> {
    pub name: &'a str,
    pub base: BaseRing,
    pub generators: &'a [&'a str],
    pub relations: &'a [&'a str],
    pub inverse_pairs: &'a [(&'a str, &'a str)],
    pub comult: &'a [&'a str],
    pub counit: &'a [&'a str],
    pub antipode: &'a [&'a str],
}

pub const BUILTIN_GROUPS: [&str; 4] = ["Ga", "Gm", "Aff1", "Heis3"];

impl HopfAlgebra {
    /// Builds the Hopf algebra and verifies its axioms on generators.
    pub fn new(
        name: &str,
        algebra: &AlgebraRef,
        comult: Vec<Poly>,
        counit: Vec<Scalar>,
        antipode: Vec<Poly>,
    ) -> Result<HopfRef> {
        let h = Self::unchecked(name, algebra, comult, counit, antipode)?;
        if let Some(e) = h.axiom_failures().into_iter().next() {
            return Err(e);
        }
        Ok(h)
    }

    /// Builds without checking the axioms (used for negative controls).
    pub fn unchecked(
        name: &str,
        algebra: &AlgebraRef,
        comult: Vec<Poly>,
        counit: Vec<Scalar>,
        antipode: Vec<Poly>,
    ) -> Result<HopfRef> {
        let k = algebra.ngens();
        if comult.len() != k || counit.len() != k || antipode.len() != k {
            return Err(Error::Presentation(format!("Hopf structure of `{name}` must be given on all {k} generators")));
        }
        let pair = tensor_algebra(&[(algebra, "1"), (algebra, "2")])?;
        for p in &comult {
            if !crate::exactalg::same_ring(p.ring(), pair.ring()) {
                return Err(Error::Context("comultiplication must live in the tensor square".into()));
            }
        }
        for p in &antipode {
            if !crate::exactalg::same_ring(p.ring(), algebra.ring()) {
                return Err(Error::Context("antipode must live in the algebra".into()));
            }
        }
        let comult = comult.iter().map(|p| pair.normalize(p)).collect();
        let antipode = antipode.iter().map(|p| algebra.normalize(p)).collect();
        let colie = CoLie::new(algebra, &counit)?;
        Ok(Arc::new(HopfAlgebra {
            name: name.to_string(),
            algebra: algebra.clone(),
            pair,
            comult,
            counit,
            antipode,
            colie,
            conjugation: OnceLock::new(),
        }))
    }

    /// Parses a textual Hopf structure; with `check` the axioms are verified.
    pub fn from_spec(spec: &HopfSpec<'_>, check: bool) -> Result<HopfRef> {
        let algebra = crate::exactalg::AlgebraPresentation::new(
            spec.base,
            spec.generators.iter().copied(),
            spec.relations,
            spec.inverse_pairs,
        )?;
        let pair = tensor_algebra(&[(&algebra, "1"), (&algebra, "2")])?;
        let comult = spec.comult.iter().map(|t| Poly::parse(pair.ring(), t)).collect::<Result<Vec<_>>>()?;
        let counit = spec
            .counit
            .iter()
            .map(|t| {
                let p = Poly::parse(algebra.ring(), t)?;
                if !p.is_constant() {
                    return Err(Error::Presentation(format!("counit value `{t}` is not a constant")));
                }
                Ok(p.constant_term())
            })
            .collect::<Result<Vec<_>>>()?;
        let antipode = spec.antipode.iter().map(|t| Poly::parse(algebra.ring(), t)).collect::<Result<Vec<_>>>()?;
        if check {
            Self::new(spec.name, &algebra, comult, counit, antipode)
        } else {
            Self::unchecked(spec.name, &algebra, comult, counit, antipode)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same object, or an identical structure on identically named generators.
    pub fn same_group(&self, other: &HopfAlgebra) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        let render = |ps: &[Poly]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        self.name == other.name
            && self.base() == other.base()
            && self.algebra.generators() == other.algebra.generators()
            && render(self.algebra.relations()) == render(other.algebra.relations())
            && render(&self.comult) == render(&other.comult)
            && self.counit == other.counit
            && render(&self.antipode) == render(&other.antipode)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn base(&self) -> BaseRing {
        self.algebra.base()
    }

    /// `A ⊗ A` on generators `g_1`, `g_2`.
    pub fn pair_algebra(&self) -> &AlgebraRef {
        &self.pair
    }

    pub fn comult(&self) -> &[Poly] {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &[Poly] {
        &self.antipode
    }

    pub fn colie(&self) -> &CoLie {
        &self.colie
    }

    /// Counit of an arbitrary element.
    pub fn eta(&self, a: &Poly) -> Scalar {
        eval_scalar(a, &self.counit)
    }

    /// `g − η(g)`.
    pub fn augmented_generator(&self, g: usize) -> Poly {
        let v = self.algebra.var(g);
        &v - &Poly::constant(self.algebra.ring(), self.counit[g].clone())
    }

    /// Names of the co-Lie basis classes, e.g. `[a]` for the class of `a − 1`.
    pub fn colie_names(&self) -> Vec<String> {
        self.colie.basis.iter().map(|&g| format!("[{}]", self.algebra.generators()[g])).collect()
    }

    /// The universal point `id_A` over `A` itself.
    pub fn universal_point(self: &Arc<Self>) -> GroupPoint<AlgebraRef> {
        let images = (0..self.algebra.ngens()).map(|g| self.algebra.var(g)).collect();
        GroupPoint::unchecked(self, &self.algebra, images).expect("one image per generator")
    }

    /// Class in `I/I²` of an element of the augmentation ideal.
    pub fn reduce_colie(&self, z: &Poly) -> Result<ColieVec> {
        let base = self.base();
        let z = self.algebra.normalize(z);
        if !base.is_zero(&self.eta(&z)) {
            return Err(Error::Augmentation(format!("`{z}` has counit {}", self.eta(&z))));
        }
        let mut out = vec![base.zero(); self.colie.dim()];
        for g in 0..self.algebra.ngens() {
            let d = eval_scalar(&z.partial_derivative(g)?, &self.counit);
            if base.is_zero(&d) {
                continue;
            }
            for (j, c) in self.colie.gen_coords[g].iter().enumerate() {
                out[j] = base.add(&out[j], &base.mul(&d, c));
            }
        }
        Ok(out)
    }

    /// Representative in `I` of a co-Lie vector.
    pub fn colie_representative(&self, v: &[Scalar]) -> Poly {
        let mut acc = Poly::zero(self.algebra.ring());
        for (j, c) in v.iter().enumerate() {
            acc = &acc + &self.augmented_generator(self.colie.basis[j]).scale(c);
        }
        acc
    }

    /// `μ(z) − z⊗1 − 1⊗z` as pairs `(α_i, β_i)` with both factors in `I`,
    /// grouped by the left monomial.
    pub fn comult_tail(&self, z: &Poly) -> Result<Vec<(Poly, Poly)>> {
        let base = self.base();
        let z = self.algebra.normalize(z);
        if !base.is_zero(&self.eta(&z)) {
            return Err(Error::Augmentation(format!("`{z}` has counit {}", self.eta(&z))));
        }
        let k = self.algebra.ngens();
        let mu = z.evaluate(&self.pair, &self.comult);
        let z1 = tensor::embed(&z, &self.pair, 0);
        let z2 = tensor::embed(&z, &self.pair, k);
        let tail = self.pair.normalize(&(&(&mu - &z1) - &z2));
        Ok(split_by_left(&tail, k, self.algebra.ring(), self.algebra.ring())
            .into_iter()
            .map(|(l, r)| {
                let l = &l - &Poly::constant(l.ring(), self.eta(&l));
                let r = &r - &Poly::constant(r.ring(), self.eta(&r));
                (l, r)
            })
            .filter(|(l, r)| !l.is_zero() && !r.is_zero())
            .collect())
    }

    /// `λ(z̄) = Σ ᾱ_i⊗β̄_i − β̄_i⊗ᾱ_i` for a co-Lie vector.
    pub fn lambda(&self, v: &[Scalar]) -> Result<ColieTensor> {
        let tail = self.comult_tail(&self.colie_representative(v))?;
        self.lambda_from_tail(&tail)
    }

    /// `λ` of the `j`-th basis class.
    pub fn lambda_basis(&self, j: usize) -> Result<ColieTensor> {
        let mut v = vec![self.base().zero(); self.colie.dim()];
        v[j] = self.base().one();
        self.lambda(&v)
    }

    pub fn lambda_from_tail(&self, tail: &[(Poly, Poly)]) -> Result<ColieTensor> {
        let base = self.base();
        let one = base.one();
        let mone = base.from_int(-1);
        let mut out = ColieTensor::zero();
        for (a, b) in tail {
            let (ra, rb) = (self.reduce_colie(a)?, self.reduce_colie(b)?);
            out.add_outer(base, &one, &ra, &rb);
            out.add_outer(base, &mone, &rb, &ra);
        }
        Ok(out)
    }

    /// Every failing axiom, each with the generator and a rendered witness.
    pub fn axiom_failures(self: &Arc<Self>) -> Vec<Error> {
        let mut out = Vec::new();
        let names = self.algebra.generators();
        let fail = |axiom: &str, g: &str, witness: String| Error::Axiom {
            axiom: axiom.to_string(),
            generator: g.to_string(),
            witness,
        };
        for r in self.algebra.relations() {
            let v = self.pair.normalize(&r.evaluate(&self.pair, &self.comult));
            if !v.is_zero() {
                out.push(fail("comultiplication respects relations", &r.to_string(), v.to_string()));
            }
            let v = eval_scalar(r, &self.counit);
            if !self.base().is_zero(&v) {
                out.push(fail("counit respects relations", &r.to_string(), v.to_string()));
            }
            let v = self.algebra.normalize(&r.evaluate(&self.algebra, &self.antipode));
            if !v.is_zero() {
                out.push(fail("antipode respects relations", &r.to_string(), v.to_string()));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let triple = match tensor_algebra(&[(&self.algebra, "1"), (&self.algebra, "2"), (&self.algebra, "3")]) {
            Ok(t) => t,
            Err(e) => return vec![e],
        };
        let k = self.algebra.ngens();
        let pt = |off: usize| {
            GroupPoint::unchecked(self, &triple, (0..k).map(|g| triple.var(off + g)).collect()).expect("arity")
        };
        let (p1, p2, p3) = (pt(0), pt(k), pt(2 * k));
        let lhs = p1.compose(&p2).and_then(|x| x.compose(&p3));
        let rhs = p2.compose(&p3).and_then(|x| p1.compose(&x));
        if let (Ok(l), Ok(r)) = (lhs, rhs) {
            for g in 0..k {
                if !triple.equal(&l.images()[g], &r.images()[g]) {
                    out.push(fail(
                        "coassociativity",
                        &names[g],
                        format!("(μ⊗id)μ = {} but (id⊗μ)μ = {}", l.images()[g], r.images()[g]),
                    ));
                }
            }
        }
        let u = self.universal_point();
        let e = GroupPoint::identity(self, &self.algebra);
        let checks: [(&str, Result<GroupPoint<AlgebraRef>>, &GroupPoint<AlgebraRef>); 4] = [
            ("left counit", e.compose(&u), &u),
            ("right counit", u.compose(&e), &u),
            ("left antipode", u.inverse().compose(&u), &e),
            ("right antipode", u.compose(&u.inverse()), &e),
        ];
        for (axiom, got, want) in checks {
            let Ok(got) = got else { continue };
            for g in 0..k {
                if !self.algebra.equal(&got.images()[g], &want.images()[g]) {
                    out.push(fail(axiom, &names[g], format!("got {} instead of {}", got.images()[g], want.images()[g])));
                }
            }
        }
        out
    }

    /// The conjugation coaction `g ↦ γ g γ⁻¹`, expanded once and cached.
    pub fn conjugation(self: &Arc<Self>) -> Result<CoactionRef> {
        let cached = self.conjugation.get_or_init(|| {
            let mixed = tensor_algebra(&[(&self.algebra, "1"), (&self.algebra, "2")])?;
            let k = self.algebra.ngens();
            let gamma = GroupPoint::unchecked(self, &mixed, (0..k).map(|g| mixed.var(g)).collect())?;
            let h = GroupPoint::unchecked(self, &mixed, (0..k).map(|g| mixed.var(k + g)).collect())?;
            let c = gamma.conjugate(&h)?;
            Ok((mixed, c.images().to_vec()))
        });
        let (mixed, rho) = cached.clone()?;
        Coaction::from_parts(&format!("conjugation({})", self.name), self, self, mixed, rho)
    }

    /// The Hopf algebra with its generators renamed (structure unchanged).
    pub fn relabeled(&self, name: &str, generators: &[String]) -> Result<HopfRef> {
        if generators.len() != self.algebra.ngens() {
            return Err(Error::Presentation("wrong number of generator names".into()));
        }
        let ring = PolyRing::new(self.base(), generators.to_vec());
        let ident: Vec<usize> = (0..ring.nvars()).collect();
        let extra = self.algebra.extra_relations().iter().map(|r| r.substitute_vars(&ring, &ident)).collect();
        let algebra = crate::exactalg::AlgebraPresentation::from_parts(ring, extra, self.algebra.inverse_pairs().to_vec())?;
        let pair = tensor_algebra(&[(&algebra, "1"), (&algebra, "2")])?;
        let pid: Vec<usize> = (0..pair.ngens()).collect();
        let comult = self.comult.iter().map(|p| p.substitute_vars(pair.ring(), &pid)).collect();
        let antipode = self.antipode.iter().map(|p| p.substitute_vars(algebra.ring(), &ident)).collect();
        Self::new(name, &algebra, comult, self.counit.clone(), antipode)
    }
}

/// Splits a polynomial on `left ⊗ right` variables into `Σ l_m ⊗ r_m` with
/// distinct left monomials `l_m`.
pub(crate) fn split_by_left(
    p: &Poly,
    nleft: usize,
    left: &crate::exactalg::RingRef,
    right: &crate::exactalg::RingRef,
) -> Vec<(Poly, Poly)> {
    let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, Scalar)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (l, r) = m.exponents().split_at(nleft);
        groups.entry(l.to_vec()).or_default().push((Monomial::from_exponents(r.to_vec()), c.clone()));
    }
    groups
        .into_iter()
        .map(|(l, rs)| {
            let lp = Poly::monomial(left, Monomial::from_exponents(l), left.base().one());
            (lp, Poly::from_terms(right, rs))
        })
        .collect()
}

/// One of the built-in groups over the given base ring.
pub fn builtin_group(name: &str, base: BaseRing) -> Result<HopfRef> {
    let spec = match name {
        "Ga" => HopfSpec {
            name: "Ga",
            base,
            generators: &["x"],
            relations: &[],
            inverse_pairs: &[],
            comult: &["x_1 + x_2"],
            counit: &["0"],
            antipode: &["-x"],
        },
        "Gm" => HopfSpec {
            name: "Gm",
            base,
            generators: &["t", "tbar"],
            relations: &[],
            inverse_pairs: &[("t", "tbar")],
            comult: &["t_1*t_2", "tbar_1*tbar_2"],
            counit: &["1", "1"],
            antipode: &["tbar", "t"],
        },
        "Aff1" => HopfSpec {
            name: "Aff1",
            base,
            generators: &["a", "abar", "b"],
            relations: &[],
            inverse_pairs: &[("a", "abar")],
            comult: &["a_1*a_2", "abar_1*abar_2", "b_1 + a_1*b_2"],
            counit: &["1", "1", "0"],
            antipode: &["abar", "a", "-abar*b"],
        },
        "Heis3" => HopfSpec {
            name: "Heis3",
            base,
            generators: &["p", "q", "r"],
            relations: &[],
            inverse_pairs: &[],
            comult: &["p_1 + p_2", "q_1 + q_2", "r_1 + r_2 + p_1*q_2"],
            counit: &["0", "0", "0"],
            antipode: &["-p", "-q", "-r + p*q"],
        },
        other => return Err(Error::UnknownName(format!("group `{other}`"))),
    };
    HopfAlgebra::from_spec(&spec, true)
}

#[cfg(test)]
mod tests;
