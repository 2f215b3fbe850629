use crate::{ElemSet, Sign};
use core::fmt;

/// A signed subset of a ground set `0..ground`: a (co)circuit or (co)vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pub ground: usize,
    pub plus: ElemSet,
    pub minus: ElemSet,
}

impl SignedSet {
    pub fn new(ground: usize, plus: ElemSet, minus: ElemSet) -> SignedSet {
        debug_assert!(plus.is_disjoint(minus));
        SignedSet { ground, plus, minus }
    }

    pub fn support(&self) -> ElemSet {
        self.plus.union(self.minus)
    }

    pub fn zero_set(&self) -> ElemSet {
        ElemSet::full(self.ground).difference(self.support())
    }

    pub fn get(&self, e: usize) -> Sign {
        if self.plus.contains(e) {
            Sign::Pos
        } else if self.minus.contains(e) {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, e: usize, s: Sign) {
        self.plus = self.plus.without(e);
        self.minus = self.minus.without(e);
        match s {
            Sign::Pos => self.plus = self.plus.with(e),
            Sign::Neg => self.minus = self.minus.with(e),
            Sign::Zero => {}
        }
    }

    pub fn negated(&self) -> SignedSet {
        SignedSet::new(self.ground, self.minus, self.plus)
    }

    /// The representative of `{X, -X}` that is positive on its smallest
    /// support element.
    pub fn normalized(&self) -> SignedSet {
        match self.support().min() {
            Some(e) if self.minus.contains(e) => self.negated(),
            _ => *self,
        }
    }

    /// `||X+| - |X-||`
    pub fn discrepancy(&self) -> usize {
        self.plus.len().abs_diff(self.minus.len())
    }

    /// Signed orthogonality: supports are disjoint, or the products
    /// `X(e)Y(e)` on the common support take both signs.
    pub fn is_orthogonal_to(&self, other: &SignedSet) -> bool {
        let same = self.plus.intersection(other.plus).union(self.minus.intersection(other.minus));
        let opposite =
            self.plus.intersection(other.minus).union(self.minus.intersection(other.plus));
        (same.is_empty() && opposite.is_empty()) || (!same.is_empty() && !opposite.is_empty())
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for e in 0..self.ground {
            write!(f, "{}", self.get(e))?;
        }
        write!(f, ")")
    }
}
