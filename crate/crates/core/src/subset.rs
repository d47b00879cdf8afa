//! Bitset over carrier indices.

use std::fmt;

use crate::algebra::Elem;

/// A set of carrier indices. Carriers are capped at 64 elements, so one
/// machine word is enough.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: Elem) -> Self {
        Subset(1u64 << x)
    }

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: Elem) -> bool {
        x < 64 && self.0 & (1u64 << x) != 0
    }

    pub fn insert(&mut self, x: Elem) -> bool {
        let fresh = !self.contains(x);
        self.0 |= 1u64 << x;
        fresh
    }

    pub fn with(self, x: Elem) -> Self {
        Subset(self.0 | (1u64 << x))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Ordering used for every listing of ideals: by size, then by the sorted
    /// member list.
    pub fn listing_key(self) -> (usize, Vec<Elem>) {
        (self.len(), self.to_vec())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the ascending list of member indices.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<Elem> for Subset {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = Elem;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as Elem;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for SubsetIter {}
