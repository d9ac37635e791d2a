//! Exact base rings: ℚ, prime fields and integers modulo m.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient ring R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Rationals,
    PrimeField(u64),
    IntegersMod(u64),
}

/// A coefficient. Modular values are kept reduced into `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    M(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl BaseRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not a supported prime")));
        }
        Ok(BaseRing::PrimeField(p))
    }

    pub fn integers_mod(m: u64) -> Result<Self> {
        if !(2..=u32::MAX as u64).contains(&m) {
            return Err(Error::InvalidRing(format!("modulus {m} out of range")));
        }
        Ok(BaseRing::IntegersMod(m))
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            BaseRing::Rationals => 0,
            BaseRing::PrimeField(p) => p,
            BaseRing::IntegersMod(m) => m,
        }
    }

    fn modulus(&self) -> Option<u64> {
        match *self {
            BaseRing::Rationals => None,
            BaseRing::PrimeField(m) | BaseRing::IntegersMod(m) => Some(m),
        }
    }

    pub fn is_field(&self) -> bool {
        match *self {
            BaseRing::Rationals | BaseRing::PrimeField(_) => true,
            BaseRing::IntegersMod(m) => is_prime(m),
        }
    }

    /// Whether 2 is invertible in R.
    pub fn two_is_unit(&self) -> bool {
        self.characteristic() % 2 == 1 || self.characteristic() == 0
    }

    pub fn zero(&self) -> Scalar {
        match self {
            BaseRing::Rationals => Scalar::Q(BigRational::zero()),
            _ => Scalar::M(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self.modulus() {
            None => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Some(m) => Scalar::M((n as i128).rem_euclid(m as i128) as u64),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.modulus() {
            None => Scalar::Q(BigRational::from_integer(n.clone())),
            Some(m) => {
                let r = n.mod_floor(&BigInt::from(m));
                Scalar::M(r.to_u64().unwrap_or(0))
            }
        }
    }

    /// `num/den`, if `den` is invertible in R.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        match self {
            BaseRing::Rationals => Some(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let d = self.from_bigint(den);
                let inv = self.inv(&d)?;
                Some(self.mul(&self.from_bigint(num), &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_zero(),
            Scalar::M(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(q) => q.is_one(),
            Scalar::M(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Scalar::M(x), Scalar::M(y)) => {
                let m = self.modulus().expect("modular scalar over ℚ");
                Scalar::M(((*x as u128 + *y as u128) % m as u128) as u64)
            }
            _ => panic!("scalar kinds do not match the base ring"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Q(x) => Scalar::Q(-x),
            Scalar::M(x) => {
                let m = self.modulus().expect("modular scalar over ℚ");
                Scalar::M(if *x == 0 { 0 } else { m - x })
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Scalar::M(x), Scalar::M(y)) => {
                let m = self.modulus().expect("modular scalar over ℚ");
                Scalar::M(((*x as u128 * *y as u128) % m as u128) as u64)
            }
            _ => panic!("scalar kinds do not match the base ring"),
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u32) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match a {
            Scalar::Q(x) => (!x.is_zero()).then(|| Scalar::Q(x.recip())),
            Scalar::M(x) => {
                let m = self.modulus()? as i128;
                let e = Integer::extended_gcd(&(*x as i128), &m);
                (e.gcd == 1).then(|| Scalar::M(e.x.rem_euclid(m) as u64))
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_some()
    }

    /// Coefficient of a repeated-coordinate tensor in the weak flavor.
    /// Such tensors are killed by 2, so the coefficient lives in R/2R.
    pub fn reduce_two_torsion(&self, a: &Scalar) -> Scalar {
        match *self {
            BaseRing::Rationals => self.zero(),
            BaseRing::PrimeField(p) | BaseRing::IntegersMod(p) if p % 2 == 1 => self.zero(),
            BaseRing::PrimeField(_) | BaseRing::IntegersMod(_) => match a {
                Scalar::M(v) => Scalar::M(v % 2),
                Scalar::Q(_) => panic!("rational scalar over a modular ring"),
            },
        }
    }

    pub fn render(&self, a: &Scalar) -> String {
        a.to_string()
    }

    /// Sign-aware parts for rendering: (is_negative, magnitude text).
    pub(crate) fn sign_split(&self, a: &Scalar) -> (bool, Scalar) {
        match a {
            Scalar::Q(x) if x.is_negative() => (true, Scalar::Q(-x)),
            _ => (false, a.clone()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::M(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Rationals => write!(f, "Q"),
            BaseRing::PrimeField(p) => write!(f, "GF {p}"),
            BaseRing::IntegersMod(m) => write!(f, "Zmod {m}"),
        }
    }
}
