use alloc::vec::Vec;
use core::fmt;

/// A set of element labels stored as a 64-bit mask.
///
/// The numeric order of masks with equal cardinality is the colexicographic
/// order of the subsets, which is the order of the chirotope sign tables.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    /// `{0, 1, ..., n-1}`
    pub fn full(n: usize) -> ElemSet {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> ElemSet {
        ElemSet(1u64 << e)
    }

    pub fn from_slice(elems: &[usize]) -> ElemSet {
        elems.iter().copied().collect()
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> ElemSet {
        ElemSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> ElemSet {
        ElemSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Number of elements of `self` strictly smaller than `e`.
    pub fn count_below(self, e: usize) -> usize {
        (self.0 & ((1u64 << e) - 1)).count_ones() as usize
    }

    /// Number of elements of `self` strictly greater than `e`.
    pub fn count_above(self, e: usize) -> usize {
        if e >= 63 {
            0
        } else {
            (self.0 >> (e + 1)).count_ones() as usize
        }
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under a label map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> ElemSet {
        self.iter().map(f).collect()
    }
}

/// Ascending iterator over the elements of an [`ElemSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElemSet(iter.into_iter().fold(0, |m, e| m | 1u64 << e))
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let s = ElemSet::from_slice(&[0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), [0, 3, 5]);
        assert_eq!(s.count_below(4), 2);
        assert_eq!(s.count_above(3), 1);
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.max(), Some(5));
        assert!(ElemSet::from_slice(&[3]).is_subset(s));
        assert_eq!(s.without(3).with(1).to_vec(), [0, 1, 5]);
        assert_eq!(ElemSet::full(4).difference(s).to_vec(), [1, 2]);
    }
}
