//! Sparse row echelon forms over a base ring whose pivots are units.

use std::collections::BTreeMap;

use super::scalar::{BaseRing, Scalar};
use crate::error::{Error, Result};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incrementally maintained echelon basis; rows are monic in their pivot,
/// which is the smallest key of the row.
pub struct Echelon<K: Ord + Clone> {
    base: BaseRing,
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(base: BaseRing) -> Self {
        Echelon { base, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Residue of `v` after eliminating every pivot it touches.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let base = self.base;
        let mut v: SparseVec<K> = v.iter().filter(|(_, c)| !base.is_zero(c)).map(|(k, c)| (k.clone(), c.clone())).collect();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.iter().find(|(k, _)| self.rows.contains_key(*k)),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .find(|(k, _)| self.rows.contains_key(*k)),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else {
                return v;
            };
            let row = &self.rows[&k];
            for (rk, rc) in row {
                let delta = base.mul(&c, rc);
                let cur = v.get(rk).cloned().unwrap_or_else(|| base.zero());
                let new = base.sub(&cur, &delta);
                if base.is_zero(&new) {
                    v.remove(rk);
                } else {
                    v.insert(rk.clone(), new);
                }
            }
            cursor = Some(k);
        }
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Result<bool> {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(false);
        };
        let inv = self.base.inv(&lead).ok_or_else(|| {
            Error::Unsupported(format!("pivot {lead} is not a unit in {}", self.base))
        })?;
        let row = r.into_iter().map(|(k, c)| (k, self.base.mul(&c, &inv))).collect();
        self.rows.insert(pivot, row);
        Ok(true)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(base: BaseRing, vectors: &[SparseVec<K>]) -> Result<usize> {
    let mut e = Echelon::new(base);
    for v in vectors {
        e.insert(v)?;
    }
    Ok(e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(base: BaseRing, xs: &[(u32, i64)]) -> SparseVec<u32> {
        xs.iter().map(|&(k, c)| (k, base.from_int(c))).collect()
    }

    #[test]
    fn rank_over_q_and_f2() {
        let q = BaseRing::Rationals;
        let rows = [v(q, &[(0, 1), (1, 1)]), v(q, &[(0, 1), (1, -1)]), v(q, &[(1, 1)])];
        assert_eq!(rank(q, &rows).unwrap(), 2);
        let f2 = BaseRing::prime_field(2).unwrap();
        let rows = [v(f2, &[(0, 1), (1, 1)]), v(f2, &[(0, 1), (1, -1)])];
        assert_eq!(rank(f2, &rows).unwrap(), 1);
    }

    #[test]
    fn membership_after_insert() {
        let q = BaseRing::Rationals;
        let mut e = Echelon::new(q);
        e.insert(&v(q, &[(0, 2), (2, 1)])).unwrap();
        e.insert(&v(q, &[(1, 1), (2, 1)])).unwrap();
        assert!(e.contains(&v(q, &[(0, 4), (1, 3), (2, 5)])));
        assert!(!e.contains(&v(q, &[(2, 1)])));
    }
}
