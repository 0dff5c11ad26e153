use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing set of row/column positions.
///
/// Positions are 0-based in the API. [`Display`](fmt::Display) renders them
/// 1-based, as `{1,3}`, matching the usual mathematical notation and the CLI.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<IndexSet> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndexSet);
        }
        Ok(IndexSet(indices))
    }

    /// From 1-based positions, as index sets are usually written.
    pub fn from_one_based(indices: &[usize]) -> Result<IndexSet> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0) {
            return Err(Error::IndexOutOfRange { index: bad, order: 0 });
        }
        IndexSet::new(indices.iter().map(|&i| i - 1).collect())
    }

    pub fn empty() -> IndexSet {
        IndexSet(Vec::new())
    }

    /// `{0, 1, ..., n-1}`.
    pub fn all(n: usize) -> IndexSet {
        IndexSet((0..n).collect())
    }

    /// Bit `i` of `mask` selects position `i`.
    pub fn from_mask(mask: u64) -> IndexSet {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            v.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        IndexSet(v)
    }

    /// Inverse of [`from_mask`](Self::from_mask); `None` if an index is 64 or more.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &i| (i < 64).then(|| acc | (1u64 << i)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Positions of `0..n` not in the set, in increasing order.
    pub fn complement(&self, n: usize) -> IndexSet {
        IndexSet((0..n).filter(|&i| !self.contains(i)).collect())
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| !other.contains(i))
    }

    pub(crate) fn check_bounds(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last >= order => Err(Error::IndexOutOfRange { index: last, order }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_and_duplicates() {
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert!(IndexSet::new(vec![1, 1]).is_err());
        assert!(IndexSet::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn mask_round_trip_and_display() {
        let s = IndexSet::from_one_based(&[1, 3, 4]).unwrap();
        assert_eq!(s.to_mask(), Some(0b1101));
        assert_eq!(IndexSet::from_mask(0b1101), s);
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(IndexSet::empty().to_string(), "{}");
        assert_eq!(s.complement(5).to_string(), "{2,5}");
    }

    #[test]
    fn bounds() {
        let s = IndexSet::new(vec![0, 4]).unwrap();
        assert!(s.check_bounds(5).is_ok());
        assert!(s.check_bounds(4).is_err());
    }
}
