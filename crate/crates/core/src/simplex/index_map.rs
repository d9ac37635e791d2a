use std::fmt;

use crate::error::{Error, Result};

/// A map of index sets `{0..u} → {0..r}`. Pulling back along it substitutes
/// the universal point `x_{φ(i)}` for `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexMap {
    target: usize,
    map: Vec<usize>,
}

impl IndexMap {
    pub fn new(target: usize, map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::Index("index map with empty source".into()));
        }
        if let Some(&bad) = map.iter().find(|&&j| j > target) {
            return Err(Error::Index(format!("image {bad} exceeds target degree {target}")));
        }
        Ok(IndexMap { target, map })
    }

    pub fn identity(n: usize) -> Self {
        IndexMap { target: n, map: (0..=n).collect() }
    }

    /// `{0..n-1} → {0..n}` skipping `i`: pulling back along it is the face
    /// operator that forgets the point `x_i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "face index out of range");
        IndexMap { target: n, map: (0..n).map(|j| if j < i { j } else { j + 1 }).collect() }
    }

    /// `{0..n+1} → {0..n}` hitting `i` twice: the degeneracy that repeats `x_i`.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "degeneracy index out of range");
        IndexMap { target: n, map: (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect() }
    }

    /// `{0..n} → {0..n-1}` sending `s` onto `r`: the map `m_rs` that
    /// multiplies slots `r` and `s` together.
    pub fn merge(n: usize, r: usize, s: usize) -> Self {
        assert!(r < s && s <= n, "merge indices out of range");
        let map = (0..=n)
            .map(|j| match j.cmp(&s) {
                std::cmp::Ordering::Less => j,
                std::cmp::Ordering::Equal => r,
                std::cmp::Ordering::Greater => j - 1,
            })
            .collect();
        IndexMap { target: n - 1, map }
    }

    /// `i ↦ offset + i` on `{0..u}`, landing in `{0..r}`.
    pub fn shift(u: usize, offset: usize, r: usize) -> Self {
        assert!(offset + u <= r, "shifted range exceeds target");
        IndexMap { target: r, map: (0..=u).map(|i| offset + i).collect() }
    }

    /// `{0} → {0..r}` picking the point `i`.
    pub fn point(r: usize, i: usize) -> Self {
        assert!(i <= r, "point index out of range");
        IndexMap { target: r, map: vec![i] }
    }

    /// Collapse `{0..n} → {0}`.
    pub fn collapse(n: usize) -> Self {
        IndexMap { target: 0, map: vec![0; n + 1] }
    }

    /// A permutation of `{0..n}` given as the image list.
    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len().checked_sub(1).ok_or_else(|| Error::Index("empty permutation".into()))?;
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p > n || seen[p] {
                return Err(Error::Index(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(IndexMap { target: n, map: perm })
    }

    pub fn source(&self) -> usize {
        self.map.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self` followed by `next`: `i ↦ next(self(i))`.
    pub fn then(&self, next: &IndexMap) -> Result<IndexMap> {
        if self.target != next.source() {
            return Err(Error::Index(format!(
                "cannot compose a map into degree {} with a map from degree {}",
                self.target,
                next.source()
            )));
        }
        Ok(IndexMap { target: next.target, map: self.map.iter().map(|&j| next.map[j]).collect() })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        self.map.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    /// Sign of a permutation; `None` if the map is not a bijection.
    pub fn sign(&self) -> Option<i64> {
        if self.source() != self.target || !self.is_injective() {
            return None;
        }
        let mut inversions = 0;
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] > self.map[j] {
                    inversions += 1;
                }
            }
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }
}

impl fmt::Display for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|j| j.to_string()).collect();
        write!(f, "({})→{}", parts.join(","), self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosimplicial_identities() {
        for n in 2..=4 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = IndexMap::face(n - 1, j - 1).then(&IndexMap::face(n, i)).unwrap();
                    let rhs = IndexMap::face(n - 1, i).then(&IndexMap::face(n, j)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for n in 0..=3 {
            for i in 0..=n {
                for j in i..=n {
                    let lhs = IndexMap::degeneracy(n + 1, j + 1).then(&IndexMap::degeneracy(n, i)).unwrap();
                    let rhs = IndexMap::degeneracy(n + 1, i).then(&IndexMap::degeneracy(n, j)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn merge_after_split_is_identity() {
        for n in 1..=4 {
            for r in 1..=n {
                let id = IndexMap::face(n, r).then(&IndexMap::merge(n, 0, r)).unwrap();
                assert_eq!(id, IndexMap::identity(n - 1));
            }
        }
    }

    #[test]
    fn permutation_sign() {
        assert_eq!(IndexMap::permutation(vec![1, 0]).unwrap().sign(), Some(-1));
        assert_eq!(IndexMap::permutation(vec![1, 2, 0]).unwrap().sign(), Some(1));
        assert!(IndexMap::permutation(vec![0, 0]).is_err());
    }
}
