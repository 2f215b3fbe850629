//! Binomials, colex ranking of subsets, subset and permutation iteration.

use crate::ElemSet;
use alloc::vec::Vec;

static BINOM: [[u64; 65]; 65] = {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n <= 64 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1].wrapping_add(if k < n { t[n - 1][k] } else { 0 });
            k += 1;
        }
        n += 1;
    }
    t
};

/// `C(n, k)`; zero when `k > n`. Exact for every `n <= 64` where the value fits.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n || n > 64 {
        0
    } else {
        BINOM[n][k]
    }
}

/// Position of `set` among all subsets of the same size in colex order.
#[inline]
pub fn colex_rank(set: ElemSet) -> usize {
    let mut rank = 0u64;
    for (i, e) in set.iter().enumerate() {
        rank += BINOM[e][i + 1];
    }
    rank as usize
}

/// The `k`-subsets of `0..n` in colex order.
pub fn subsets(n: usize, k: usize) -> Subsets {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let first = if k == 0 {
        0
    } else if k > n {
        limit
    } else {
        ElemSet::full(k).bits()
    };
    Subsets {
        current: first,
        limit,
        done: k > n,
        empty: k == 0,
    }
}

/// Iterator returned by [`subsets`] (Gosper's hack).
pub struct Subsets {
    current: u64,
    limit: u64,
    done: bool,
    empty: bool,
}

impl Iterator for Subsets {
    type Item = ElemSet;

    fn next(&mut self) -> Option<ElemSet> {
        if self.done {
            return None;
        }
        let out = self.current;
        if self.empty {
            self.done = true;
            return Some(ElemSet(0));
        }
        let c = out & out.wrapping_neg();
        let r = out.wrapping_add(c);
        if r == 0 || r >= self.limit && self.limit != u64::MAX {
            self.done = true;
        } else {
            self.current = (((r ^ out) >> 2) / c) | r;
            if self.current >= self.limit && self.limit != u64::MAX {
                self.done = true;
            }
        }
        Some(ElemSet(out))
    }
}

/// The `k`-subsets of an arbitrary set, in colex order of the set's elements.
pub fn subsets_of(set: ElemSet, k: usize) -> impl Iterator<Item = ElemSet> {
    let elems = set.to_vec();
    subsets(elems.len(), k).map(move |s| s.iter().map(|i| elems[i]).collect())
}

/// `true` when the permutation sorting `seq` is odd. Assumes distinct entries.
pub fn sort_parity(seq: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Parity of the shuffle that takes the concatenation `(a, b)` of two sorted
/// disjoint sets to sorted order.
pub fn shuffle_parity(a: ElemSet, b: ElemSet) -> bool {
    let mut inversions = 0;
    for x in a {
        inversions += b.count_below(x);
    }
    inversions % 2 == 1
}

/// Advances `perm` to the next permutation in lexicographic order.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    out
}

/// Ordered selections of `k` distinct elements of `0..n`, visited in
/// lexicographic order.
pub fn for_each_arrangement(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, used: u64, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for e in 0..n {
            if used >> e & 1 == 0 {
                cur.push(e);
                rec(n, k, used | 1 << e, cur, f);
                cur.pop();
            }
        }
    }
    if k <= n {
        rec(n, k, 0, &mut Vec::with_capacity(k), &mut f);
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
