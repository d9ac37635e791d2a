//! The ε-basis normal form for localized-free base algebras.
//!
//! An element is a table `key → coefficient in B` where a key
//! `(T, pattern)` stands for `∏_j ε_{T_j, pattern_j}` and
//! `ε_{i,v} = x_v^{(i)} − x_v^{(0)}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::Flavor;
use crate::exactalg::{AlgebraPresentation, BaseRing, Poly};

/// Basis key: ascending simplex indices and, per index, a coordinate position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    pub simplices: Vec<u8>,
    pub pattern: Vec<u8>,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.simplices
            .len()
            .cmp(&other.simplices.len())
            .then_with(|| self.simplices.cmp(&other.simplices))
            .then_with(|| self.pattern.cmp(&other.pattern))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Key {
    pub fn unit() -> Self {
        Key { simplices: Vec::new(), pattern: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.simplices.len()
    }

    /// A repeated coordinate: only present in the weak flavor when 2 is not a unit.
    pub fn is_diagonal(&self) -> bool {
        self.pattern.windows(2).any(|w| w[0] == w[1])
    }
}

pub type Table = BTreeMap<Key, Poly>;

/// Canonical key of `∏ ε_{s,c}` over factors with distinct simplices.
/// Returns the key and the sign, or `None` if the product vanishes.
pub(crate) fn canonical(factors: &mut [(u8, u8)], flavor: Flavor, base: BaseRing) -> Option<(Key, bool)> {
    factors.sort_unstable_by_key(|f| f.0);
    let simplices: Vec<u8> = factors.iter().map(|f| f.0).collect();
    let mut pattern: Vec<u8> = factors.iter().map(|f| f.1).collect();
    let mut odd = false;
    for i in 1..pattern.len() {
        let mut j = i;
        while j > 0 && pattern[j - 1] > pattern[j] {
            pattern.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    let key = Key { simplices, pattern };
    if key.is_diagonal() && (flavor == Flavor::Strong || base.two_is_unit()) {
        return None;
    }
    Some((key, odd))
}

pub(crate) struct Ctx<'a> {
    pub algebra: &'a AlgebraPresentation,
    pub flavor: Flavor,
}

impl Ctx<'_> {
    fn base(&self) -> BaseRing {
        self.algebra.base()
    }

    /// Coefficient clean-up for a key: relations of B, then 2-torsion on diagonals.
    pub fn fix(&self, key: &Key, c: Poly) -> Poly {
        let c = self.algebra.normalize(&c);
        if key.is_diagonal() {
            let base = self.base();
            let ring = c.ring().clone();
            let terms = c.into_terms().into_iter().map(|(m, s)| (m, base.reduce_two_torsion(&s)));
            Poly::from_terms(&ring, terms)
        } else {
            c
        }
    }

    pub fn add_into(&self, t: &mut Table, key: Key, c: Poly) {
        if c.is_zero() {
            return;
        }
        let new = match t.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        let new = self.fix(&key, new);
        if !new.is_zero() {
            t.insert(key, new);
        }
    }

    pub fn add(&self, a: &Table, b: &Table) -> Table {
        let mut out = a.clone();
        for (k, c) in b {
            self.add_into(&mut out, k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, a: &Table, s: &crate::exactalg::Scalar) -> Table {
        let mut out = Table::new();
        for (k, c) in a {
            self.add_into(&mut out, k.clone(), c.scale(s));
        }
        out
    }

    pub fn mul(&self, a: &Table, b: &Table) -> Table {
        let mut out = Table::new();
        let base = self.base();
        for (ka, ca) in a {
            for (kb, cb) in b {
                if ka.simplices.iter().any(|s| kb.simplices.contains(s)) {
                    continue;
                }
                let mut factors: Vec<(u8, u8)> = ka
                    .simplices
                    .iter()
                    .zip(&ka.pattern)
                    .chain(kb.simplices.iter().zip(&kb.pattern))
                    .map(|(s, c)| (*s, *c))
                    .collect();
                let Some((key, odd)) = canonical(&mut factors, self.flavor, base) else {
                    continue;
                };
                let mut c = ca * cb;
                if odd {
                    c = -&c;
                }
                self.add_into(&mut out, key, c);
            }
        }
        out
    }
}
