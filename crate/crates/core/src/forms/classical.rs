//! Classical forms in the wedge basis `dx_{v1}∧…∧dx_{vn}` of the coordinate
//! differentials, and multi-derivations acting on them by full contraction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraRef, Poly, Scalar};
use crate::simplex::Flavor;

/// Sorts a coordinate pattern; returns the sign parity, or `None` when a
/// repeated coordinate kills the product.
fn canonical(pattern: &[u8], keep_diagonal: bool) -> Option<(Vec<u8>, bool)> {
    let mut p = pattern.to_vec();
    let mut odd = false;
    for i in 1..p.len() {
        let mut j = i;
        while j > 0 && p[j - 1] > p[j] {
            p.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if p.windows(2).any(|w| w[0] == w[1]) && !keep_diagonal {
        return None;
    }
    Some((p, odd))
}

fn is_diagonal(p: &[u8]) -> bool {
    p.windows(2).any(|w| w[0] == w[1])
}

/// Splits at top-level occurrences of `seps`, outside parentheses and not
/// after `^`, `*` or `/`. Each piece carries whether it followed a `-`.
fn split_top(text: &str, seps: &[char]) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    let mut prev = None;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{text}`")));
        }
        let binary = !matches!(prev, None | Some('^') | Some('*') | Some('/') | Some('('));
        if depth == 0 && seps.contains(&ch) && (binary || ch == '*') {
            if !cur.trim().is_empty() {
                out.push((negative, cur.trim().to_string()));
            }
            cur.clear();
            negative = ch == '-';
        } else if depth == 0 && ch == '-' && seps.contains(&'-') && prev.is_none() {
            negative = true;
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{text}`")));
    }
    if !cur.trim().is_empty() {
        out.push((negative, cur.trim().to_string()));
    }
    Ok(out)
}

/// An element of `Ωⁿ` (strong) or of the anti-symmetric tensors `Ω^(n)` (weak).
///
/// Weak forms over a base where 2 is not a unit keep repeated-index keys such
/// as `dx⊗̃dx`, which are 2-torsion.
#[derive(Clone)]
pub struct ClassicalForm {
    algebra: AlgebraRef,
    flavor: Flavor,
    degree: usize,
    terms: BTreeMap<Vec<u8>, Poly>,
}

impl PartialEq for ClassicalForm {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            && self.flavor == other.flavor
            && self.degree == other.degree
            && self.terms == other.terms
    }
}

impl fmt::Debug for ClassicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassicalForm[{}, {}]({self})", self.flavor, self.degree)
    }
}

impl ClassicalForm {
    pub fn zero(algebra: &AlgebraRef, flavor: Flavor, degree: usize) -> Self {
        ClassicalForm { algebra: algebra.clone(), flavor, degree, terms: BTreeMap::new() }
    }

    /// A degree-0 form, i.e. a function.
    pub fn function(algebra: &AlgebraRef, flavor: Flavor, b: &Poly) -> Self {
        let mut f = Self::zero(algebra, flavor, 0);
        f.add_term(Vec::new(), b.clone());
        f
    }

    /// `c · dx_{p1} ∧ … ∧ dx_{pn}` for coordinate positions `p`, in any order.
    pub fn term(algebra: &AlgebraRef, flavor: Flavor, c: &Poly, pattern: &[usize]) -> Result<Self> {
        let ncoords = algebra.coordinates().len();
        if let Some(bad) = pattern.iter().find(|&&p| p >= ncoords) {
            return Err(Error::Index(format!("coordinate position {bad} out of range")));
        }
        let mut f = Self::zero(algebra, flavor, pattern.len());
        let p: Vec<u8> = pattern.iter().map(|&p| p as u8).collect();
        f.add_term(p, c.clone());
        Ok(f)
    }

    /// `db = Σ_c ∂_c b · dx_c`.
    pub fn differential(algebra: &AlgebraRef, flavor: Flavor, b: &Poly) -> Self {
        let mut f = Self::zero(algebra, flavor, 1);
        for (pos, &g) in algebra.coordinates().iter().enumerate() {
            f.add_term(vec![pos as u8], algebra.derivation(b, g));
        }
        f
    }

    /// `db_1 ∧ … ∧ db_n`.
    pub fn from_differentials(algebra: &AlgebraRef, flavor: Flavor, bs: &[Poly]) -> Self {
        let mut acc = Self::function(algebra, flavor, &Poly::one(algebra.ring()));
        for b in bs {
            acc = acc.wedge(&Self::differential(algebra, flavor, b)).expect("same algebra");
        }
        acc
    }

    /// Reads the rendered syntax back: a sum of terms `coeff*dx^dy`, where
    /// differentials may also be joined by `*`. `d <poly>` is the
    /// differential of a function. `degree` is needed only for `0`.
    pub fn parse(algebra: &AlgebraRef, flavor: Flavor, degree: Option<usize>, text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("d ") {
            return Ok(Self::differential(algebra, flavor, &algebra.parse(rest)?));
        }
        let coords = algebra.coordinates();
        let names = algebra.generators();
        let diff = |piece: &str| -> Option<usize> {
            let v = piece.strip_prefix('d')?;
            if names.iter().any(|g| g == piece) {
                return None;
            }
            coords.iter().position(|&c| names[c] == v)
        };
        let mut acc: Option<ClassicalForm> = None;
        for (negative, term) in split_top(text, &['+', '-'])? {
            let mut coeff = Poly::one(algebra.ring());
            let mut pattern = Vec::new();
            for (_, factor) in split_top(&term, &['*'])? {
                let pieces: Vec<&str> = factor.split('^').map(str::trim).collect();
                let diffs: Vec<Option<usize>> = pieces.iter().map(|p| diff(p)).collect();
                if diffs.iter().all(Option::is_some) {
                    pattern.extend(diffs.into_iter().flatten());
                } else {
                    coeff = &coeff * &algebra.parse(&factor)?;
                }
            }
            if negative {
                coeff = -&coeff;
            }
            let t = Self::term(algebra, flavor, &coeff, &pattern)?;
            acc = Some(match acc {
                None => t,
                Some(a) if t.is_zero() && a.degree != t.degree => a,
                Some(a) if a.is_zero() && a.degree != t.degree => t,
                Some(a) => a.add(&t)?,
            });
        }
        match (acc, degree) {
            (Some(f), Some(n)) if f.is_zero() => Ok(Self::zero(algebra, flavor, n)),
            (Some(f), Some(n)) if f.degree != n => {
                Err(Error::Parse(format!("`{text}` has degree {}, expected {n}", f.degree)))
            }
            (Some(f), _) => Ok(f),
            (None, _) => Err(Error::Parse("empty form".into())),
        }
    }

    fn keeps_diagonal(&self) -> bool {
        self.flavor == Flavor::Weak && !self.algebra.base().two_is_unit()
    }

    fn add_term(&mut self, pattern: Vec<u8>, c: Poly) {
        let Some((key, odd)) = canonical(&pattern, self.keeps_diagonal()) else {
            return;
        };
        let c = if odd { -&c } else { c };
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        let mut sum = self.algebra.normalize(&sum);
        if is_diagonal(&key) {
            let base = self.algebra.base();
            let ring = sum.ring().clone();
            sum = Poly::from_terms(&ring, sum.into_terms().into_iter().map(|(m, s)| (m, base.reduce_two_torsion(&s))));
        }
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(pattern, coefficient)` pairs with canonical patterns.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Poly)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, pattern: &[u8]) -> Poly {
        self.terms.get(pattern).cloned().unwrap_or_else(|| Poly::zero(self.algebra.ring()))
    }

    fn compatible(&self, other: &ClassicalForm) -> Result<()> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) {
            return Err(Error::Context("forms over different base algebras".into()));
        }
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!("{} form combined with {} form", self.flavor, other.flavor)));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassicalForm) -> Result<ClassicalForm> {
        self.compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::Degree(format!("adding forms of degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> ClassicalForm {
        self.scale(&self.algebra.base().from_int(-1))
    }

    pub fn sub(&self, other: &ClassicalForm) -> Result<ClassicalForm> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> ClassicalForm {
        self.times(&Poly::constant(self.algebra.ring(), s.clone()))
    }

    /// Multiplication by a function `b ∈ B`.
    pub fn times(&self, b: &Poly) -> ClassicalForm {
        let mut out = Self::zero(&self.algebra, self.flavor, self.degree);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * b);
        }
        out
    }

    /// Wedge (strong) or anti-symmetric tensor (weak) product.
    pub fn wedge(&self, other: &ClassicalForm) -> Result<ClassicalForm> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.algebra, self.flavor, self.degree + other.degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out.add_term(k, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exterior derivative `d(c·dx_P) = dc ∧ dx_P`.
    pub fn exterior_d(&self) -> ClassicalForm {
        let mut out = Self::zero(&self.algebra, self.flavor, self.degree + 1);
        for (k, c) in &self.terms {
            for (pos, &g) in self.algebra.coordinates().iter().enumerate() {
                let mut key = vec![pos as u8];
                key.extend_from_slice(k);
                out.add_term(key, self.algebra.derivation(c, g));
            }
        }
        out
    }

    /// Full contraction with a multi-derivation of the same degree.
    pub fn contract(&self, d: &MultiDerivation) -> Result<Poly> {
        if !Arc::ptr_eq(&self.algebra, &d.algebra) {
            return Err(Error::Context("form and multi-derivation over different algebras".into()));
        }
        if self.degree != d.degree {
            return Err(Error::Degree(format!(
                "contracting a {}-form with a {}-derivation",
                self.degree, d.degree
            )));
        }
        let mut acc = Poly::zero(self.algebra.ring());
        for (k, c) in &self.terms {
            if let Some(dc) = d.terms.get(k) {
                acc = &acc + &(c * dc);
            }
        }
        Ok(self.algebra.normalize(&acc))
    }

    /// Image in the strong flavor: repeated-index keys die.
    pub fn to_strong(&self) -> ClassicalForm {
        let mut out = Self::zero(&self.algebra, Flavor::Strong, self.degree);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// The same coefficients viewed in the other flavor (2 must be a unit, or
    /// the form must have no repeated-index keys).
    pub fn with_flavor(&self, flavor: Flavor) -> ClassicalForm {
        let mut out = Self::zero(&self.algebra, flavor, self.degree);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub(crate) fn render_pattern(&self, key: &[u8]) -> String {
        let coords = self.algebra.coordinates();
        let sep = if self.flavor == Flavor::Weak && !self.algebra.base().two_is_unit() { "*" } else { "^" };
        key.iter()
            .map(|&p| format!("d{}", self.algebra.generators()[coords[p as usize]]))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for ClassicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.algebra.base();
        let one = base.one();
        let mut parts: Vec<(Scalar, String)> = Vec::new();
        for (k, c) in &self.terms {
            let basis = self.render_pattern(k);
            if basis.is_empty() {
                parts.push((one.clone(), c.to_string()));
                continue;
            }
            if c.len() == 1 {
                let (m, s) = &c.terms()[0];
                let cm = crate::exactalg::render_monomial(c.ring().vars(), m);
                let text = if cm.is_empty() { basis } else { format!("{cm}*{basis}") };
                parts.push((s.clone(), text));
            } else {
                parts.push((one.clone(), format!("({c})*{basis}")));
            }
        }
        if parts.len() == 1 && self.degree == 0 {
            return f.write_str(&parts[0].1);
        }
        f.write_str(&crate::exactalg::render_terms(base, parts.iter().map(|(c, t)| (c, t.clone()))))
    }
}

/// A section of `Λⁿ T` for a localized-free base: `Σ c_P ∂_{p1}∧…∧∂_{pn}`.
#[derive(Clone, Debug)]
pub struct MultiDerivation {
    algebra: AlgebraRef,
    degree: usize,
    terms: BTreeMap<Vec<u8>, Poly>,
}

impl MultiDerivation {
    pub fn zero(algebra: &AlgebraRef, degree: usize) -> Self {
        MultiDerivation { algebra: algebra.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn term(algebra: &AlgebraRef, c: &Poly, pattern: &[usize]) -> Result<Self> {
        let mut d = Self::zero(algebra, pattern.len());
        d.add_term(pattern, c)?;
        Ok(d)
    }

    pub fn add_term(&mut self, pattern: &[usize], c: &Poly) -> Result<()> {
        if pattern.len() != self.degree {
            return Err(Error::Degree(format!("{}-vector in a {}-derivation", pattern.len(), self.degree)));
        }
        let p: Vec<u8> = pattern.iter().map(|&p| p as u8).collect();
        let Some((key, odd)) = canonical(&p, false) else {
            return Ok(());
        };
        let c = if odd { -c } else { c.clone() };
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        let sum = self.algebra.normalize(&sum);
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{AlgebraPresentation, BaseRing};

    fn q(names: &[&str]) -> AlgebraRef {
        AlgebraPresentation::free(BaseRing::Rationals, names.iter().copied())
    }

    #[test]
    fn exterior_calculus_examples() {
        let b = q(&["x", "y"]);
        let x = b.parse("x").unwrap();
        let y = b.parse("y").unwrap();
        let xdy = ClassicalForm::differential(&b, Flavor::Strong, &y).times(&x);
        let dxdy = ClassicalForm::from_differentials(&b, Flavor::Strong, &[x.clone(), y.clone()]);
        assert_eq!(xdy.exterior_d(), dxdy);
        assert_eq!(dxdy.to_string(), "dx^dy");
        let dydx = ClassicalForm::from_differentials(&b, Flavor::Strong, &[y, x.clone()]);
        assert_eq!(dydx, dxdy.neg());
        let d = MultiDerivation::term(&b, &Poly::one(b.ring()), &[0, 1]).unwrap();
        assert_eq!(dxdy.times(&x).contract(&d).unwrap(), x);
        assert!(dxdy.exterior_d().is_zero());
        assert!(matches!(xdy.contract(&d), Err(Error::Degree(_))));
    }

    #[test]
    fn weak_diagonal_survives_in_characteristic_two() {
        let f2 = AlgebraPresentation::free(BaseRing::prime_field(2).unwrap(), ["x"]);
        let dx = ClassicalForm::differential(&f2, Flavor::Weak, &f2.parse("x").unwrap());
        let t = dx.wedge(&dx).unwrap();
        assert!(!t.is_zero());
        assert_eq!(t.to_string(), "dx*dx");
        assert!(t.to_strong().is_zero());
        assert!(t.add(&t).unwrap().is_zero());
        let b = q(&["x"]);
        let dx = ClassicalForm::differential(&b, Flavor::Weak, &b.parse("x").unwrap());
        assert!(dx.wedge(&dx).unwrap().is_zero());
    }

    #[test]
    fn differential_of_inverse_generator() {
        let b = AlgebraPresentation::new(BaseRing::Rationals, ["s", "sb"], &[], &[("s", "sb")]).unwrap();
        let d = ClassicalForm::differential(&b, Flavor::Strong, &b.parse("sb").unwrap());
        assert_eq!(d.to_string(), "-sb^2*ds");
    }
}
