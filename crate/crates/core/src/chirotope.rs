//! Uniform chirotopes: the sign table of a uniform oriented matroid.

use crate::combin::{binomial, colex_rank, shuffle_parity, sort_parity, subsets};
use crate::{ElemSet, Error, Result, Sign, SignedSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A uniform chirotope of rank `rank` on the elements `0..n`.
///
/// One sign per ascending `rank`-subset, stored in colex order as a packed
/// bit table (bit set = negative). Evaluation on unsorted tuples is
/// alternating; tuples with repeats evaluate to zero.
///
/// Chirotopes `χ` and `-χ` describe the same oriented matroid. Equality
/// (`==`) compares sign tables bit for bit; use [`Chirotope::eq_up_to_sign`]
/// to compare oriented matroids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chirotope {
    n: usize,
    rank: usize,
    neg: Vec<u64>,
}

/// A failed three-term Grassmann–Plücker relation: with `X = base`, the
/// products `χ(X,a,b)χ(X,c,d)`, `-χ(X,a,c)χ(X,b,d)`, `χ(X,a,d)χ(X,b,c)`
/// all have the same sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub base: ElemSet,
    pub quad: [usize; 4],
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.quad;
        write!(f, "Grassmann-Plucker relation fails for X={} a={a} b={b} c={c} d={d}", self.base)
    }
}

/// A minor `χ \ deleted / contracted` with its relabeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub deleted: ElemSet,
    pub contracted: ElemSet,
    pub result: Chirotope,
    /// `survivors[i]` is the original label of the new element `i`.
    pub survivors: Vec<usize>,
}

impl Minor {
    /// New label of an original element, if it survived.
    pub fn new_label(&self, original: usize) -> Option<usize> {
        self.survivors.iter().position(|&e| e == original)
    }
}

fn check_dims(n: usize, rank: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::TooManyElements(n));
    }
    if rank == 0 || rank > n {
        return Err(Error::InvalidRank { n, rank });
    }
    Ok(())
}

impl Chirotope {
    /// Builds a chirotope by evaluating `f` on every basis (ascending, colex order).
    pub fn from_fn(n: usize, rank: usize, mut f: impl FnMut(ElemSet) -> Sign) -> Result<Chirotope> {
        check_dims(n, rank)?;
        let len = binomial(n, rank) as usize;
        let mut neg = vec![0u64; len.div_ceil(64)];
        for (i, basis) in subsets(n, rank).enumerate() {
            match f(basis) {
                Sign::Pos => {}
                Sign::Neg => neg[i / 64] |= 1 << (i % 64),
                Sign::Zero => return Err(Error::NotUniform(format!("{basis}"))),
            }
        }
        Ok(Chirotope { n, rank, neg })
    }

    pub fn from_signs(n: usize, rank: usize, signs: &[Sign]) -> Result<Chirotope> {
        check_dims(n, rank)?;
        let expected = binomial(n, rank) as usize;
        if signs.len() != expected {
            return Err(Error::SignTableLength { expected, got: signs.len() });
        }
        let mut it = signs.iter();
        Chirotope::from_fn(n, rank, |_| *it.next().unwrap())
    }

    /// The all-positive chirotope: the cyclic polytope `C(n, rank-1)`.
    pub fn all_positive(n: usize, rank: usize) -> Result<Chirotope> {
        Chirotope::from_fn(n, rank, |_| Sign::Pos)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    /// Number of bases, `C(n, rank)`.
    pub fn len(&self) -> usize {
        binomial(self.n, self.rank) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    #[inline]
    pub fn sign_at(&self, index: usize) -> Sign {
        if self.neg[index / 64] >> (index % 64) & 1 == 1 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    /// Sign of an ascending basis given as a set of exactly `rank` elements.
    #[inline]
    pub fn sign_of(&self, basis: ElemSet) -> Sign {
        debug_assert_eq!(basis.len(), self.rank);
        self.sign_at(colex_rank(basis))
    }

    /// Alternating evaluation on an arbitrary tuple of length `rank`.
    pub fn eval(&self, tuple: &[usize]) -> Sign {
        assert_eq!(tuple.len(), self.rank, "tuple length must equal the rank");
        let set: ElemSet = tuple.iter().copied().collect();
        if set.len() != tuple.len() {
            return Sign::Zero;
        }
        let s = self.sign_of(set);
        if sort_parity(tuple) {
            -s
        } else {
            s
        }
    }

    /// `χ(prefix..., rest...)` where both parts are taken in ascending order.
    #[inline]
    pub fn eval_split(&self, prefix: ElemSet, rest: ElemSet) -> Sign {
        if !prefix.is_disjoint(rest) {
            return Sign::Zero;
        }
        let s = self.sign_of(prefix.union(rest));
        if shuffle_parity(prefix, rest) {
            -s
        } else {
            s
        }
    }

    /// Signs in colex basis order.
    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len()).map(|i| self.sign_at(i))
    }

    pub fn negated(&self) -> Chirotope {
        let len = self.len();
        let mut neg: Vec<u64> = self.neg.iter().map(|w| !w).collect();
        if !len.is_multiple_of(64) {
            *neg.last_mut().unwrap() &= (1u64 << (len % 64)) - 1;
        }
        Chirotope { n: self.n, rank: self.rank, neg }
    }

    /// The representative of `{χ, -χ}` that is positive on the first basis.
    pub fn normalized(&self) -> Chirotope {
        if self.sign_at(0) == Sign::Neg {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Same oriented matroid: equal sign tables up to a global sign.
    pub fn eq_up_to_sign(&self, other: &Chirotope) -> bool {
        self.n == other.n
            && self.rank == other.rank
            && (self.neg == other.neg || self.neg == other.negated().neg)
    }

    /// Brute-force three-term Grassmann–Plücker check, which characterizes
    /// uniform chirotopes.
    pub fn validate(&self) -> core::result::Result<(), Violation> {
        let r = self.rank;
        if r < 2 || self.n < r + 2 {
            return Ok(());
        }
        for base in subsets(self.n, r - 2) {
            let rest = self.ground().difference(base);
            for quad in crate::combin::subsets_of(rest, 4) {
                let q = quad.to_vec();
                let (a, b, c, d) = (q[0], q[1], q[2], q[3]);
                let x = |u: usize, v: usize| self.eval_split(base, ElemSet::from_slice(&[u, v]));
                let t1 = x(a, b) * x(c, d);
                let t2 = -(x(a, c) * x(b, d));
                let t3 = x(a, d) * x(b, c);
                if t1 == t2 && t2 == t3 {
                    return Err(Violation { base, quad: [a, b, c, d] });
                }
            }
        }
        Ok(())
    }

    /// The dual chirotope of rank `n - rank`:
    /// `χ*(E∖B) = sign(B, E∖B) · χ(B)`, scaled by a global sign so that the
    /// first bases of `χ` and `χ*` agree. The scaling makes `dual` an exact
    /// involution on sign tables.
    pub fn dual(&self) -> Chirotope {
        let full = self.ground();
        if self.rank == self.n {
            // Rank 0 is not representable; the dual of a basis is itself.
            return self.clone();
        }
        let raw = Chirotope::from_fn(self.n, self.n - self.rank, |d| {
            let b = full.difference(d);
            let s = self.sign_of(b);
            if shuffle_parity(b, d) {
                -s
            } else {
                s
            }
        })
        .expect("dual of a uniform chirotope is uniform");
        if raw.sign_at(0) == self.sign_at(0) {
            raw
        } else {
            raw.negated()
        }
    }

    /// The minor `χ ∖ delete / contract`. Contraction is carried out in
    /// ascending label order: `χ'(X) = χ(k₁, …, k_c, X)`. Survivors are
    /// relabeled `0..` preserving their order.
    pub fn minor(&self, delete: ElemSet, contract: ElemSet) -> Result<Minor> {
        let full = self.ground();
        for s in [delete, contract] {
            if let Some(e) = s.difference(full).min() {
                return Err(Error::ElementOutOfRange { element: e, n: self.n });
            }
        }
        if !delete.is_disjoint(contract) {
            return Err(Error::OverlappingMinor);
        }
        if contract.len() >= self.rank {
            return Err(Error::ContractTooLarge { contract: contract.len(), rank: self.rank });
        }
        let new_rank = self.rank - contract.len();
        let survivors_set = full.difference(delete).difference(contract);
        if survivors_set.len() < new_rank {
            return Err(Error::DeleteTooLarge { left: survivors_set.len(), rank: new_rank });
        }
        let survivors = survivors_set.to_vec();
        let result = Chirotope::from_fn(survivors.len(), new_rank, |b| {
            let orig = b.map(|i| survivors[i]);
            self.eval_split(contract, orig)
        })?;
        Ok(Minor { deleted: delete, contracted: contract, result, survivors })
    }

    pub fn delete(&self, set: ElemSet) -> Result<Chirotope> {
        Ok(self.minor(set, ElemSet::EMPTY)?.result)
    }

    pub fn contract(&self, set: ElemSet) -> Result<Chirotope> {
        Ok(self.minor(ElemSet::EMPTY, set)?.result)
    }

    /// Relabels element `e` as `perm[e]` and reorients the elements of
    /// `flips` (given in the old labels):
    /// `χ'(π(b₁), …, π(b_r)) = (-1)^{|B ∩ flips|} χ(b₁, …, b_r)`.
    pub fn relabel_reorient(&self, perm: &[usize], flips: ElemSet) -> Result<Chirotope> {
        if perm.len() != self.n
            || perm.iter().copied().collect::<ElemSet>() != self.ground()
        {
            return Err(Error::NotAPermutation(self.n));
        }
        let mut inverse = vec![0; self.n];
        for (e, &p) in perm.iter().enumerate() {
            inverse[p] = e;
        }
        let mut preimage = Vec::with_capacity(self.rank);
        Chirotope::from_fn(self.n, self.rank, |b| {
            preimage.clear();
            preimage.extend(b.iter().map(|e| inverse[e]));
            // χ'(b) = χ(π⁻¹ b) in the order induced by b.
            let set: ElemSet = preimage.iter().copied().collect();
            let mut s = self.sign_of(set);
            if sort_parity(&preimage) {
                s = -s;
            }
            if set.intersection(flips).len() % 2 == 1 {
                s = -s;
            }
            s
        })
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Chirotope> {
        self.relabel_reorient(perm, ElemSet::EMPTY)
    }

    pub fn reorient(&self, flips: ElemSet) -> Chirotope {
        let id: Vec<usize> = (0..self.n).collect();
        self.relabel_reorient(&id, flips).expect("identity is a permutation")
    }

    /// The cocircuit vanishing on the `(rank-1)`-set `hyperplane`, with the
    /// orientation `C(e) = χ(h₁, …, h_{r-1}, e)`.
    pub fn cocircuit(&self, hyperplane: ElemSet) -> SignedSet {
        debug_assert_eq!(hyperplane.len() + 1, self.rank);
        let mut plus = ElemSet::EMPTY;
        let mut minus = ElemSet::EMPTY;
        for e in self.ground().difference(hyperplane) {
            let mut s = self.sign_of(hyperplane.with(e));
            if hyperplane.count_above(e) % 2 == 1 {
                s = -s;
            }
            if s == Sign::Pos {
                plus = plus.with(e);
            } else {
                minus = minus.with(e);
            }
        }
        SignedSet::new(self.n, plus, minus)
    }

    /// One representative per `±` pair of cocircuits (positive on the
    /// smallest support element), indexed by hyperplanes in colex order.
    pub fn cocircuits(&self) -> Vec<SignedSet> {
        subsets(self.n, self.rank - 1).map(|h| self.cocircuit(h).normalized()).collect()
    }

    /// The circuit supported on the `(rank+1)`-set `support`, oriented by
    /// `X(z_i) = (-1)^i χ(Z ∖ z_i)` for `Z` in ascending order.
    pub fn circuit(&self, support: ElemSet) -> SignedSet {
        debug_assert_eq!(support.len(), self.rank + 1);
        let mut plus = ElemSet::EMPTY;
        let mut minus = ElemSet::EMPTY;
        for (i, z) in support.iter().enumerate() {
            let mut s = self.sign_of(support.without(z));
            if i % 2 == 1 {
                s = -s;
            }
            if s == Sign::Pos {
                plus = plus.with(z);
            } else {
                minus = minus.with(z);
            }
        }
        SignedSet::new(self.n, plus, minus)
    }

    /// One representative per `±` pair of circuits. These are the cocircuits
    /// of the dual, computed directly from `χ`.
    pub fn circuits(&self) -> Vec<SignedSet> {
        if self.rank >= self.n {
            return Vec::new();
        }
        subsets(self.n, self.rank + 1).map(|z| self.circuit(z).normalized()).collect()
    }

    /// Inseparable pairs `(p, q, α)` with `p < q`: `α = +1` when `p, q` are
    /// covariant (same sign in every circuit containing both), `α = -1` when
    /// contravariant. A pair contained in no circuit is reported with both
    /// signs.
    pub fn inseparable_pairs(&self) -> Vec<(usize, usize, i8)> {
        let n = self.n;
        let mut same = vec![false; n * n];
        let mut diff = vec![false; n * n];
        for x in self.circuits() {
            let supp = x.support().to_vec();
            for (i, &p) in supp.iter().enumerate() {
                for &q in &supp[i + 1..] {
                    if x.get(p) == x.get(q) {
                        same[p * n + q] = true;
                    } else {
                        diff[p * n + q] = true;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                if !diff[p * n + q] {
                    out.push((p, q, 1));
                }
                if !same[p * n + q] {
                    out.push((p, q, -1));
                }
            }
        }
        out
    }

    /// `Some(α)` when `p` and `q` are α-inseparable.
    pub fn inseparability(&self, p: usize, q: usize) -> Option<i8> {
        let (a, b) = if p < q { (p, q) } else { (q, p) };
        let pairs = self.inseparable_pairs();
        let mut found = pairs.iter().filter(|t| t.0 == a && t.1 == b).map(|t| t.2);
        let first = found.next()?;
        match found.next() {
            Some(_) => Some(0),
            None => Some(first),
        }
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope({} {} ", self.n, self.rank)?;
        for s in self.signs() {
            write!(f, "{}", s.as_char())?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::permutations;

    fn chi(n: usize, r: usize, s: &str) -> Chirotope {
        let signs: Vec<Sign> =
            s.chars().map(|c| if c == '+' { Sign::Pos } else { Sign::Neg }).collect();
        Chirotope::from_signs(n, r, &signs).unwrap()
    }

    #[test]
    fn moment_curve_is_valid() {
        assert!(Chirotope::all_positive(5, 3).unwrap().validate().is_ok());
    }

    #[test]
    fn flipped_sign_is_detected() {
        // A single flip is valid exactly when the basis is a mutation. For the
        // pentagon the mutations are the five triangles of consecutive vertices
        // ({i, i+1, i+2} mod 5); every other flip breaks a relation.
        let base = Chirotope::all_positive(5, 3).unwrap();
        let mutations: Vec<ElemSet> =
            (0..5).map(|i| ElemSet::from_slice(&[i, (i + 1) % 5, (i + 2) % 5])).collect();
        for (i, b) in subsets(5, 3).enumerate() {
            let signs: Vec<Sign> =
                base.signs().enumerate().map(|(j, s)| if i == j { -s } else { s }).collect();
            let flipped = Chirotope::from_signs(5, 3, &signs).unwrap();
            match flipped.validate() {
                Ok(()) => assert!(mutations.contains(&b), "flip of {b} accepted"),
                Err(v) => {
                    assert!(!mutations.contains(&b), "flip of {b} rejected");
                    assert_eq!(v.base.len(), 1);
                }
            }
        }
    }

    #[test]
    fn rank_one_always_valid() {
        assert!(chi(4, 1, "+-+-").validate().is_ok());
    }

    #[test]
    fn wrong_table_length_rejected() {
        assert_eq!(
            Chirotope::from_signs(4, 2, &[Sign::Pos; 5]),
            Err(Error::SignTableLength { expected: 6, got: 5 })
        );
        assert!(Chirotope::all_positive(3, 0).is_err());
        assert!(Chirotope::all_positive(3, 4).is_err());
    }

    #[test]
    fn dual_of_all_positive_rank_two() {
        // Bases of the dual are complements; sign = shuffle sign of (B, E∖B).
        // Colex 2-subsets: 01 02 12 03 13 23. Complements: 23 13 03 12 02 01.
        // Shuffle parities: (23|01)=4 even, (13|02)=3 odd, (03|12)=2 even,
        // (12|03)=2 even, (02|13)=1 odd, (01|23)=0 even.
        let d = Chirotope::all_positive(4, 2).unwrap().dual();
        assert_eq!(d, chi(4, 2, "+-++-+"));
        assert_eq!(d.dual(), Chirotope::all_positive(4, 2).unwrap());
    }

    #[test]
    fn dual_is_involution_rank_equals_corank_odd() {
        let c = chi(2, 1, "+-");
        assert_eq!(c.dual().dual(), c);
        let c = Chirotope::all_positive(6, 3).unwrap();
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn eval_alternates() {
        let c = chi(3, 2, "+-+");
        assert_eq!(c.eval(&[0, 1]), Sign::Pos);
        assert_eq!(c.eval(&[1, 0]), Sign::Neg);
        assert_eq!(c.eval(&[2, 0]), Sign::Pos);
        assert_eq!(c.eval(&[1, 1]), Sign::Zero);
    }

    #[test]
    fn contract_first_of_all_positive() {
        let m = Chirotope::all_positive(5, 3).unwrap().minor(ElemSet::EMPTY, ElemSet::singleton(0)).unwrap();
        assert_eq!(m.result, Chirotope::all_positive(4, 2).unwrap());
        assert_eq!(m.survivors, [1, 2, 3, 4]);
        assert_eq!(m.new_label(3), Some(2));
    }

    #[test]
    fn minor_errors() {
        let c = Chirotope::all_positive(5, 3).unwrap();
        assert_eq!(
            c.minor(ElemSet::EMPTY, ElemSet::from_slice(&[0, 1, 2])),
            Err(Error::ContractTooLarge { contract: 3, rank: 3 })
        );
        assert_eq!(
            c.minor(ElemSet::singleton(1), ElemSet::singleton(1)),
            Err(Error::OverlappingMinor)
        );
        assert!(c.delete(ElemSet::from_slice(&[0, 1, 2])).is_err());
    }

    #[test]
    fn cocircuit_rank_two_example() {
        // χ(01)=+, χ(02)=-, χ(12)=+; H = {0}: C(1) = χ(0,1) = +, C(2) = χ(0,2) = -.
        let c = chi(3, 2, "+-+");
        let cc = c.cocircuit(ElemSet::singleton(0));
        assert_eq!(cc.get(0), Sign::Zero);
        assert_eq!(cc.get(1), Sign::Pos);
        assert_eq!(cc.get(2), Sign::Neg);
        assert_eq!(c.cocircuits().len(), 3);
    }

    #[test]
    fn relabel_by_transposition() {
        // Swap 1 and 2 in the all-+ rank 2 chirotope on 4 elements: only the
        // bases {1,2} (order reversed) and the bases whose image order flips
        // change sign. χ'(π(a),π(b)) = χ(a,b).
        let c = Chirotope::all_positive(4, 2).unwrap();
        let r = c.relabel(&[0, 2, 1, 3]).unwrap();
        for b in subsets(4, 2) {
            let v = b.to_vec();
            let pre: Vec<usize> = v.iter().map(|&e| [0, 2, 1, 3][e]).collect();
            let expected = if sort_parity(&pre) { Sign::Neg } else { Sign::Pos };
            assert_eq!(r.sign_of(b), expected, "basis {b}");
        }
        assert_eq!(r.sign_of(ElemSet::from_slice(&[1, 2])), Sign::Neg);
        assert_eq!(r.sign_of(ElemSet::from_slice(&[0, 1])), Sign::Pos);
    }

    #[test]
    fn relabel_identity_and_double_flip() {
        let c = chi(4, 2, "+-++-+");
        assert_eq!(c.relabel_reorient(&[0, 1, 2, 3], ElemSet::EMPTY).unwrap(), c);
        assert_eq!(c.reorient(ElemSet::singleton(2)).reorient(ElemSet::singleton(2)), c);
        assert!(c.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn normalized_and_sign_equivalence() {
        let c = chi(3, 2, "-+-");
        assert_eq!(c.normalized(), chi(3, 2, "+-+"));
        assert!(c.eq_up_to_sign(&chi(3, 2, "+-+")));
        assert!(!c.eq_up_to_sign(&chi(3, 2, "++-")));
    }

    #[test]
    fn all_relabelings_of_all_positive_are_valid() {
        let c = Chirotope::all_positive(5, 2).unwrap();
        for p in permutations(5) {
            assert!(c.relabel(&p).unwrap().validate().is_ok());
        }
    }
}
