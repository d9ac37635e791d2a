//! Sparse multivariate polynomials over a [`BaseRing`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use super::scalar::{BaseRing, Scalar};
use super::CommAlgebra;
use crate::error::{Error, Result};

/// Exponent vector over the variables of a ring context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial order of a ring context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    /// Block order: the first `k` variables are compared first (degrevlex),
    /// then the rest (degrevlex). Used to eliminate those variables.
    Eliminate(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Eliminate(k) => degrevlex(&a.0[..k], &b.0[..k])
                .then_with(|| degrevlex(&a.0[k..], &b.0[k..])),
        }
    }
}

/// Ring context: base ring, ordered variable names and monomial order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    base: BaseRing,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: Into<String>>(base: BaseRing, vars: impl IntoIterator<Item = S>) -> RingRef {
        Self::with_order(base, vars, MonomialOrder::DegRevLex)
    }

    pub fn with_order<S: Into<String>>(
        base: BaseRing,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> RingRef {
        Arc::new(PolyRing {
            base,
            vars: vars.into_iter().map(Into::into).collect(),
            order,
        })
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A polynomial: terms sorted by decreasing monomial order, no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.base.one())
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, ring.base.from_int(n))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.base.one())
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Scalar) -> Self {
        if ring.base.is_zero(&c) {
            return Self::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Collects arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let base = ring.base;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(old) => *old = base.add(old, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly { ring: ring.clone(), terms }
    }

    /// Trusts the caller: terms already sorted, unique and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, Scalar)>) -> Self {
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn base(&self) -> BaseRing {
        self.ring.base
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.base().is_one(&self.terms[0].1)
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.base().zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "variables {:?} over {} vs {:?} over {}",
                self.ring.vars, self.ring.base, other.ring.vars, other.ring.base
            )))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.merge(other, Some(&self.base().from_int(-1))))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.product(other))
    }

    /// `self + c·other` (c = 1 when `None`) by a sorted merge.
    fn merge(&self, other: &Poly, c: Option<&Scalar>) -> Poly {
        let base = self.base();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |s: &Scalar| match c {
            Some(c) => base.mul(c, s),
            None => s.clone(),
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let v = scaled(cb);
                    if !base.is_zero(&v) {
                        out.push((mb.clone(), v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = base.add(ca, &scaled(cb));
                    if !base.is_zero(&v) {
                        out.push((ma.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, cb) in &other.terms[j..] {
            let v = scaled(cb);
            if !base.is_zero(&v) {
                out.push((m.clone(), v));
            }
        }
        Poly { ring: ring.clone(), terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let base = self.base();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = base.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(old) => *old = base.add(old, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Poly { ring: self.ring.clone(), terms }
    }

    /// Multiplication by the term `c·m`; preserves order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        let base = self.base();
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, d)| {
                let v = base.mul(c, d);
                (!base.is_zero(&v)).then(|| (t.mul(m), v))
            })
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// `self − c·m·g`, the elementary reduction step.
    pub(crate) fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Poly) -> Poly {
        let neg = self.base().neg(c);
        self.merge(&g.mul_term(m, &neg), None)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient, if it is a unit.
    pub fn monic(&self) -> Option<Poly> {
        let Some((_, lc)) = self.leading() else {
            return Some(self.clone());
        };
        let inv = self.base().inv(lc)?;
        Some(self.scale(&inv))
    }

    pub fn partial_derivative(&self, v: usize) -> Result<Poly> {
        if v >= self.ring.nvars() {
            return Err(Error::Context(format!("variable index {v} out of range")));
        }
        let base = self.base();
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[v];
            if e == 0 {
                return None;
            }
            let mut n = m.clone();
            n.0[v] -= 1;
            Some((n, base.mul(c, &base.from_int(e as i64))))
        });
        Ok(Poly::from_terms(&self.ring, terms))
    }

    pub fn partial_derivative_by_name(&self, name: &str) -> Result<Poly> {
        let v = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::Context(format!("unknown variable `{name}`")))?;
        self.partial_derivative(v)
    }

    /// Renames variables into another context: variable `i` becomes `target` variable `map[i]`.
    pub fn substitute_vars(&self, target: &RingRef, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.ring.nvars(), "variable map has the wrong length");
        assert_eq!(target.base, self.ring.base, "base rings differ");
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Poly::from_terms(target, terms)
    }

    /// Ring homomorphism into `alg` sending variable `i` to `images[i]`.
    pub fn evaluate<A: CommAlgebra + ?Sized>(&self, alg: &A, images: &[A::Elem]) -> A::Elem {
        assert_eq!(images.len(), self.ring.nvars(), "wrong number of images");
        let mut powers: Vec<Vec<A::Elem>> = images.iter().map(|x| vec![alg.one(), x.clone()]).collect();
        let mut acc = alg.zero();
        for (m, c) in &self.terms {
            let mut t = alg.from_scalar(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = alg.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                t = alg.mul(&t, &powers[i][e]);
            }
            acc = alg.add(&acc, &t);
        }
        acc
    }

    /// Terms whose monomial involves no variable outside `keep`.
    pub fn only_vars(&self, keep: &[bool]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| e == 0 || keep[i]))
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<Poly> {
        let mut p = Parser { ring, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected `{}` in `{text}`", p.chars[p.pos])));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    let base = self.ring.base();
                    let inv = base
                        .from_fraction(&BigInt::from(1), &d)
                        .ok_or_else(|| Error::Parse(format!("cannot divide by {d}")))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let a = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(a.pow(e));
        }
        Ok(a)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(self.ring, self.ring.base().from_bigint(&n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                Ok(Poly::var(self.ring, i))
            }
            Some(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub(crate) fn render_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

/// Renders `Σ c·m·suffix` style sums; `suffix` is appended to every term.
pub(crate) fn render_terms<'a>(
    base: BaseRing,
    terms: impl Iterator<Item = (&'a Scalar, String)>,
) -> String {
    let mut out = String::new();
    for (k, (c, mono)) in terms.enumerate() {
        let (neg, mag) = base.sign_split(c);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let is_one = base.is_one(&mag);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if is_one {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = &self.ring.vars;
        let s = render_terms(
            self.base(),
            self.terms.iter().map(|(m, c)| (c, render_monomial(vars, m))),
        );
        f.write_str(&s)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&self.base().from_int(-1))
    }
}

impl CommAlgebra for RingRef {
    type Elem = Poly;

    fn base(&self) -> BaseRing {
        self.base
    }
    fn zero(&self) -> Poly {
        Poly::zero(self)
    }
    fn one(&self) -> Poly {
        Poly::one(self)
    }
    fn from_scalar(&self, c: &Scalar) -> Poly {
        Poly::constant(self, c.clone())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }
    fn scale(&self, c: &Scalar, a: &Poly) -> Poly {
        a.scale(c)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Poly) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> RingRef {
        PolyRing::new(BaseRing::Rationals, ["x", "y"])
    }

    #[test]
    fn difference_of_squares() {
        let r = qxy();
        let x = Poly::var(&r, 0);
        let one = Poly::one(&r);
        assert_eq!(&(&x + &one) * &(&x - &one), Poly::parse(&r, "x^2-1").unwrap());
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = PolyRing::new(BaseRing::prime_field(2).unwrap(), ["x"]);
        let p = Poly::parse(&r, "x+1").unwrap();
        assert_eq!(p.pow(2), Poly::parse(&r, "x^2+1").unwrap());
    }

    #[test]
    fn derivatives() {
        let r = qxy();
        let p = Poly::parse(&r, "x^2*y").unwrap();
        assert_eq!(p.partial_derivative(0).unwrap(), Poly::parse(&r, "2*x*y").unwrap());
        assert!(Poly::parse(&r, "y^3").unwrap().partial_derivative(0).unwrap().is_zero());
        assert!(p.partial_derivative(5).is_err());
        let f2 = PolyRing::new(BaseRing::prime_field(2).unwrap(), ["x"]);
        assert!(Poly::parse(&f2, "x^2").unwrap().partial_derivative(0).unwrap().is_zero());
    }

    #[test]
    fn context_mismatch() {
        let a = Poly::var(&qxy(), 0);
        let b = Poly::var(&PolyRing::new(BaseRing::Rationals, ["u"]), 0);
        assert!(matches!(a.try_add(&b), Err(Error::Context(_))));
    }

    #[test]
    fn degrevlex_order() {
        let r = PolyRing::new(BaseRing::Rationals, ["x", "y", "z"]);
        let p = Poly::parse(&r, "z^2 + x*z + y^2 + x*y").unwrap();
        assert_eq!(p.to_string(), "x*y + y^2 + x*z + z^2");
    }

    #[test]
    fn parse_and_render() {
        let r = qxy();
        let p = Poly::parse(&r, "-3/2*x^2 + (x-y)*(x+y) - 1").unwrap();
        assert_eq!(p.to_string(), "-1/2*x^2 - y^2 - 1");
        assert!(Poly::parse(&r, "x + w").is_err());
    }

    #[test]
    fn additive_identity() {
        let r = qxy();
        let p = Poly::parse(&r, "x*y - 4").unwrap();
        assert_eq!(&p + &Poly::zero(&r), p);
    }
}
