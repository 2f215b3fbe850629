//! Seeds, sewing, Gale sewing and the derived constructions.

use crate::analysis::{facets, is_balanced, is_face, is_neighborly, universal_flags};
use crate::extension::{isomorphic_via, lex_extend, ExtensionResult, IdentityReport, LexSignature};
use crate::{Chirotope, ElemSet, Error, Result, Sign};
use alloc::format;
use alloc::vec::Vec;

pub use crate::flag::{FaceRole, Flag, Level, SplitKind};

/// The alternating chirotope of the cyclic polytope `C(n, d)`: rank `d + 1`,
/// every basis positive.
pub fn cyclic(n: usize, d: usize) -> Result<Chirotope> {
    Chirotope::all_positive(n, d + 1)
}

/// The totally cyclic configuration `e₁, …, e_r, -(e₁ + … + e_r)`.
///
/// The basis omitting `e_i` (0-based `i < r`) has determinant
/// `(-1)^{r-i}`; the basis of unit vectors has determinant `+1`.
pub fn stc(r: usize) -> Result<Chirotope> {
    Chirotope::from_fn(r + 1, r, |b| {
        let missing = ElemSet::full(r + 1).difference(b).min().unwrap();
        if missing == r {
            Sign::Pos
        } else {
            Sign::from_parity((r - missing) % 2 == 1)
        }
    })
}

/// The sewing signature `[T'₁⁺, U₂⁻, U₃⁺, …]` with `U_i = T'_i ∖ T'_{i-1}` and
/// a final block holding the remaining elements. Elements ascend within each
/// block; the signature is cut to `rank` entries.
pub fn sewing_signature(p: &Chirotope, flag: &Flag) -> LexSignature {
    let mut entries = Vec::with_capacity(p.n());
    let mut prev = ElemSet::EMPTY;
    let blocks = flag.faces().iter().copied().chain(core::iter::once(p.ground()));
    for (i, face) in blocks.enumerate() {
        let sign = if i % 2 == 0 { Sign::Pos } else { Sign::Neg };
        entries.extend(face.difference(prev).iter().map(|e| (e, sign)));
        prev = face;
    }
    entries.truncate(p.rank());
    LexSignature::new(entries)
}

fn check_flag_faces(p: &Chirotope, flag: &Flag) -> Result<()> {
    for &face in flag.faces() {
        if face.len() >= p.rank() || face.max().is_some_and(|e| e >= p.n()) || !is_face(p, face)? {
            return Err(Error::NotAFace(format!("{face}")));
        }
    }
    Ok(())
}

/// `P[T']`: the lexicographic extension sewn through `flag`. Every member of
/// the flag must be a proper face.
pub fn sew(p: &Chirotope, flag: &Flag) -> Result<ExtensionResult> {
    check_flag_faces(p, flag)?;
    lex_extend(p, &sewing_signature(p, flag))
}

/// `F₁ ∖ (F₂ ∖ (… ∖ F_k))` where `F_j` is the set of facets containing `T'_j`.
pub fn facets_beyond(p: &Chirotope, flag: &Flag) -> Vec<ElemSet> {
    let all = facets(p);
    let mut acc: Vec<ElemSet> = Vec::new();
    for &t in flag.faces().iter().rev() {
        acc = all.containing(t).filter(|f| !acc.contains(f)).collect();
    }
    acc
}

/// The facets of `p` whose hyperplane separates the last element of
/// `extended` from `p`, read off the cocircuits of `extended`. For
/// `extended = sew(p, flag)` this equals [`facets_beyond`].
pub fn facets_separating(p: &Chirotope, extended: &Chirotope) -> Vec<ElemSet> {
    let new = p.n();
    facets(p)
        .facets
        .iter()
        .copied()
        .filter(|&f| {
            let c = extended.cocircuit(f);
            let inside = p.ground().difference(f).min().expect("a facet misses some vertex");
            c.get(new) != c.get(inside)
        })
        .collect()
}

/// Universal faces of `P[T']` predicted from the split pattern of the
/// universal subflag, each confirmed by contracting the sewn result.
///
/// With `p` the new element and parities counted over unsplit levels:
/// `T_i` when `T_i` is even; `(T_j ∖ x_i) ∪ p` when `T_i` is unsplit and
/// `T_j/T_i` even, `x_i`-split and odd, or `y_i`-split and even;
/// `(T_j ∖ y_i) ∪ p` when unsplit and even, `x_i`-split and even, or
/// `y_i`-split and odd.
pub fn propagate_universal(p: &Chirotope, flag: &Flag) -> Result<Vec<ElemSet>> {
    let m = (p.rank() - 1) / 2;
    let levels = flag.levels();
    if levels.len() != m {
        return Err(Error::InvalidFlag(format!("expected {m} universal levels, found {}", levels.len())));
    }
    let sewn = sew(p, flag)?.extended;
    let new = p.n();
    let unsplit_upto = |i: usize| levels[..i].iter().filter(|l| !l.split.is_split()).count();
    let t = |j: usize| levels[..j].iter().fold(ElemSet::EMPTY, |s, l| s.with(l.x).with(l.y));

    let mut predicted = Vec::new();
    for i in 1..=m {
        if unsplit_upto(i) % 2 == 0 {
            predicted.push(t(i));
        }
        for j in i..=m {
            let rel_even = (unsplit_upto(j) - unsplit_upto(i)) % 2 == 0;
            let l = levels[i - 1];
            let (drop_x, drop_y) = match l.split {
                SplitKind::None => (rel_even, rel_even),
                SplitKind::X => (!rel_even, rel_even),
                SplitKind::Y => (rel_even, !rel_even),
            };
            if drop_x {
                predicted.push(t(j).without(l.x).with(new));
            }
            if drop_y {
                predicted.push(t(j).without(l.y).with(new));
            }
        }
    }
    predicted.sort();
    predicted.dedup();
    for &f in &predicted {
        if !is_neighborly(&sewn.contract(f)?) {
            return Err(Error::Verification(format!("{f} is not a universal face of the sewn matroid")));
        }
    }
    Ok(predicted)
}

/// One Gale sewing step `M[p][q]`, `p = [a₁^{s₁}, …, a_r^{s_r}]`,
/// `q = [p⁻, a₁⁻, …, a_{r-1}⁻]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaleStep {
    pub p: LexSignature,
}

impl GaleStep {
    pub fn new(p: LexSignature) -> GaleStep {
        GaleStep { p }
    }

    /// The q signature once `p` carries label `p_label`.
    pub fn q_signature(&self, p_label: usize) -> LexSignature {
        let r = self.p.len();
        let mut entries = Vec::with_capacity(r);
        entries.push((p_label, Sign::Neg));
        entries.extend(self.p.elements().take(r.saturating_sub(1)).map(|a| (a, Sign::Neg)));
        LexSignature::new(entries)
    }
}

/// `M[p][q]` without the balancedness guard.
pub fn gale_extend(m: &Chirotope, step: &GaleStep) -> Result<Chirotope> {
    let mp = lex_extend(m, &step.p)?.extended;
    Ok(lex_extend(&mp, &step.q_signature(m.n()))?.extended)
}

/// Gale sewing of a balanced chirotope: `p` gets label `n`, `q` label `n+1`.
pub fn gale_sew(m: &Chirotope, step: &GaleStep) -> Result<Chirotope> {
    if !is_balanced(m) {
        return Err(Error::NotBalanced);
    }
    gale_extend(m, step)
}

/// The swaps of a Gale sewing step: `M[p][q] ≃ M[p'][q']` with `p'` the
/// negated signature and `p ↔ q`; `M[p][q] ≃ M[p''][q'']` with
/// `p'' = [a₁⁺, a₂^{-s₁s₂}, …]` and `a₁, p, q` permuted as follows:
/// `s₁ = +` sends `p ↦ a₁, a₁ ↦ p''`, fixing `q`; `s₁ = -` sends
/// `p ↦ q'', q ↦ a₁, a₁ ↦ p''`.
pub fn gale_swap_check(m: &Chirotope, step: &GaleStep) -> Result<IdentityReport> {
    let n = m.n();
    let (p, q) = (n, n + 1);
    let (a1, s1) = step.p.first().ok_or(Error::PartialSignature { got: 0, rank: m.rank() })?;
    let base = gale_extend(m, step)?;
    let mut report = IdentityReport::default();

    let swapped = gale_extend(m, &GaleStep::new(step.p.negated()))?;
    let mut phi: Vec<usize> = (0..n + 2).collect();
    phi.swap(p, q);
    report.record("swap p and q", isomorphic_via(&base, &swapped, &phi));

    let pp = LexSignature::new(
        step.p
            .entries
            .iter()
            .enumerate()
            .map(|(i, &(a, s))| if i == 0 { (a, Sign::Pos) } else { (a, -(s1 * s)) })
            .collect(),
    );
    let other = gale_extend(m, &GaleStep::new(pp))?;
    let mut psi: Vec<usize> = (0..n + 2).collect();
    if s1 == Sign::Pos {
        psi[p] = a1;
        psi[a1] = p;
    } else {
        psi[p] = q;
        psi[q] = a1;
        psi[a1] = p;
    }
    report.record("swap a1 and p", isomorphic_via(&base, &other, &psi));
    Ok(report)
}

/// The reduced step after contracting `a₁`:
/// `p' = [a₂^{-s₁s₂}, …, a_r^{-s₁s_r}]` on the labels of `M/a₁`.
fn reduced_after_a1(step: &GaleStep, relabel: impl Fn(usize) -> usize) -> GaleStep {
    let s1 = step.p.entries[0].1;
    GaleStep::new(LexSignature::new(
        step.p.entries[1..].iter().map(|&(a, s)| (relabel(a), -(s1 * s))).collect(),
    ))
}

/// `(M[p][q])/q ≃ (M/a₁)[p'][q']` with `a₁ ↦ p'`, `p ↦ q'` and the other
/// labels carried through `M/a₁`. Requires rank at least 2.
pub fn gale_quotient_check(m: &Chirotope, step: &GaleStep) -> Result<IdentityReport> {
    let n = m.n();
    if m.rank() < 2 {
        return Err(Error::InvalidRank { n, rank: m.rank() });
    }
    let a1 = step.p.entries[0].0;
    let lhs = gale_extend(m, step)?.contract(ElemSet::singleton(n + 1))?;
    let ma1 = m.minor(ElemSet::EMPTY, ElemSet::singleton(a1))?;
    let rhs = gale_extend(&ma1.result, &reduced_after_a1(step, |a| ma1.new_label(a).unwrap()))?;
    let perm: Vec<usize> = (0..=n)
        .map(|e| match e {
            _ if e == a1 => n - 1,
            _ if e == n => n,
            _ => ma1.new_label(e).unwrap(),
        })
        .collect();
    let mut report = IdentityReport::default();
    report.record("contract q", isomorphic_via(&lhs, &rhs, &perm));
    Ok(report)
}

/// Which case of the deletion argument for Gale sewn polytopes applies to
/// the element `e` of `M[p][q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionCase {
    Q,
    P,
    SignatureElement(usize),
    Other,
}

/// Verifies that `M[p][q]/e` is again Gale sewn from a contraction of `M`,
/// dispatching on `e ∈ {q, p, a_i, other}`. Returns the case used.
pub fn gale_deletion_check(m: &Chirotope, step: &GaleStep, e: usize) -> Result<(DeletionCase, bool)> {
    let n = m.n();
    let r = m.rank();
    if r < 2 {
        return Err(Error::InvalidRank { n, rank: r });
    }
    if e >= n + 2 {
        return Err(Error::ElementOutOfRange { element: e, n: n + 2 });
    }
    let full = gale_extend(m, step)?;
    let lhs = full.contract(ElemSet::singleton(e))?;
    let a1 = step.p.entries[0].0;
    if e == n || e == n + 1 {
        let ma1 = m.minor(ElemSet::EMPTY, ElemSet::singleton(a1))?;
        let rhs = gale_extend(&ma1.result, &reduced_after_a1(step, |a| ma1.new_label(a).unwrap()))?;
        // The surviving one of p, q ends up with label n in both.
        let perm: Vec<usize> = (0..=n)
            .map(|x| match x {
                _ if x == a1 => n - 1,
                _ if x == n => n,
                _ => ma1.new_label(x).unwrap(),
            })
            .collect();
        let case = if e == n + 1 { DeletionCase::Q } else { DeletionCase::P };
        return Ok((case, isomorphic_via(&lhs, &rhs, &perm)));
    }
    let me = m.minor(ElemSet::EMPTY, ElemSet::singleton(e))?;
    let cut = |sig: &LexSignature| {
        let mut entries: Vec<(usize, Sign)> = sig.entries.clone();
        match entries.iter().position(|x| x.0 == e) {
            Some(i) => {
                entries.remove(i);
            }
            None => {
                entries.pop();
            }
        }
        LexSignature::new(entries)
    };
    let p2 = cut(&step.p).map(|a| me.new_label(a).unwrap());
    let q2 = cut(&step.q_signature(n)).map(|a| if a == n { n - 1 } else { me.new_label(a).unwrap() });
    let mp = lex_extend(&me.result, &p2)?.extended;
    let rhs = lex_extend(&mp, &q2)?.extended;
    let case = if step.p.elements().any(|a| a == e) {
        DeletionCase::SignatureElement(e)
    } else {
        DeletionCase::Other
    };
    Ok((case, lhs.eq_up_to_sign(&rhs)))
}

/// From the dual of `C(n, d)`, labeled in cyclic order, the dual of
/// `C(n+1, d+1)`: the extension `[(n-1)⁻, (n-2)⁻, …]` with `rank` entries.
pub fn cyclic_dual_extend(m: &Chirotope) -> Result<Chirotope> {
    let n = m.n();
    let sig = LexSignature::new((0..m.rank()).map(|i| (n - 1 - i, Sign::Neg)).collect());
    Ok(lex_extend(m, &sig)?.extended)
}

/// `P̃ = (P*[p][q])*`: rank and size both grow by two and `P̃/{n, n+1} = P`.
/// The step signature refers to elements of the dual `P*`.
pub fn primal_double_extension(p: &Chirotope, step: &GaleStep) -> Result<Chirotope> {
    if p.rank() == p.n() {
        return Err(Error::InvalidRank { n: p.n(), rank: p.rank() });
    }
    let out = gale_sew(&p.dual(), step)?.dual();
    let back = out.contract(ElemSet::from_slice(&[p.n(), p.n() + 1]))?;
    if !back.eq_up_to_sign(p) {
        return Err(Error::Verification("contracting the new pair does not recover the input".into()));
    }
    Ok(out)
}

/// The step `[0⁺, 1⁺, …, (r-1)⁺]`.
pub fn default_step(rank: usize) -> GaleStep {
    GaleStep::new(crate::extension::ascending_positive(rank))
}

/// Raises a neighborly rank-5 seed to a neighborly chirotope of rank
/// `target_rank ≥ 5` on `target_n ≥ target_rank + 5` elements: sewing at rank
/// 5 (first universal flag each time), then primal double extensions, then
/// one extension of the dual when the target rank is even. Choices are
/// deterministic. Non-realizability of the seed is inherited, not checked.
pub fn nonrealizable_pipeline(seed: &Chirotope, target_rank: usize, target_n: usize) -> Result<Chirotope> {
    if seed.rank() != 5 || !is_neighborly(seed) {
        return Err(Error::NotNeighborly);
    }
    if target_rank < 5 || target_n < target_rank + 5 {
        return Err(Error::OutOfRange(format!(
            "rank {target_rank} with {target_n} elements is outside d >= 5, n >= d + 5"
        )));
    }
    let odd_rank = if target_rank % 2 == 1 { target_rank } else { target_rank - 1 };
    let odd_n = if target_rank % 2 == 1 { target_n } else { target_n - 1 };
    let k = (odd_rank - 5) / 2;
    let sewn_n = odd_n - 2 * k;
    if sewn_n < seed.n() {
        return Err(Error::OutOfRange(format!(
            "the seed has {} elements, more than the {sewn_n} needed at rank 5",
            seed.n()
        )));
    }
    let mut cur = seed.clone();
    while cur.n() < sewn_n {
        let flag = universal_flags(&cur)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Verification("no universal flag to sew through".into()))?;
        cur = sew(&cur, &flag)?.extended;
    }
    for _ in 0..k {
        let step = default_step(cur.n() - cur.rank());
        cur = primal_double_extension(&cur, &step)?;
    }
    if target_rank.is_multiple_of(2) {
        let dual = cur.dual();
        let ext = lex_extend(&dual, &crate::extension::ascending_positive(dual.rank()))?;
        cur = ext.extended.dual();
    }
    if !is_neighborly(&cur) {
        return Err(Error::Verification("pipeline output is not neighborly".into()));
    }
    Ok(cur)
}
