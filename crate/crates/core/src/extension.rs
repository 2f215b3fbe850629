//! Lexicographic single-element extensions.

use crate::{Chirotope, ElemSet, Error, Result, Sign, SignedSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

/// An ordered signature `[a₁^{s₁}, …, a_k^{s_k}]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexSignature {
    pub entries: Vec<(usize, Sign)>,
}

impl LexSignature {
    pub fn new(entries: Vec<(usize, Sign)>) -> LexSignature {
        LexSignature { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn first(&self) -> Option<(usize, Sign)> {
        self.entries.first().copied()
    }

    /// Every sign flipped.
    pub fn negated(&self) -> LexSignature {
        LexSignature::new(self.entries.iter().map(|&(e, s)| (e, -s)).collect())
    }

    /// Element labels passed through `f`, signs kept.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> LexSignature {
        LexSignature::new(self.entries.iter().map(|&(e, s)| (f(e), s)).collect())
    }

    fn check(&self, n: usize, rank: usize) -> Result<()> {
        let mut seen = ElemSet::EMPTY;
        for &(e, s) in &self.entries {
            if e >= n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if seen.contains(e) {
                return Err(Error::RepeatedElement(e));
            }
            if s == Sign::Zero {
                return Err(Error::PartialSignature { got: self.len(), rank });
            }
            seen = seen.with(e);
        }
        if self.len() != rank {
            return Err(Error::PartialSignature { got: self.len(), rank });
        }
        Ok(())
    }
}

impl fmt::Display for LexSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LexSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `base` extended by `signature`; the new element is `base.n()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    pub extended: Chirotope,
    pub base: Chirotope,
    pub signature: LexSignature,
}

impl ExtensionResult {
    pub fn new_element(&self) -> usize {
        self.base.n()
    }
}

/// The lexicographic extension `χ[a₁^{s₁}, …, a_r^{s_r}]`.
///
/// On a basis `B' ∪ {p}` the sign is `s_i · χ(B', a_i)` with `i` minimal such
/// that `a_i ∉ B'`. The signature must be full length.
pub fn lex_extend(chi: &Chirotope, sig: &LexSignature) -> Result<ExtensionResult> {
    let (n, r) = (chi.n(), chi.rank());
    sig.check(n, r)?;
    if n + 1 > 64 {
        return Err(Error::TooManyElements(n + 1));
    }
    let extended = Chirotope::from_fn(n + 1, r, |b| {
        if !b.contains(n) {
            return chi.sign_of(b);
        }
        let rest = b.without(n);
        let &(a, s) = sig
            .entries
            .iter()
            .find(|(a, _)| !rest.contains(*a))
            .expect("a full signature always has an entry off an (r-1)-set");
        s * chi.eval_split(rest, ElemSet::singleton(a))
    })?;
    Ok(ExtensionResult { extended, base: chi.clone(), signature: sig.clone() })
}

/// The cocircuit signature `σ(C) = s_i C(a_i)`, `i` minimal with `C(a_i) ≠ 0`,
/// over the stored cocircuit representatives of `chi` (hyperplanes in colex
/// order). Computed from cocircuits alone.
pub fn signature_of_extension(chi: &Chirotope, sig: &LexSignature) -> Vec<(SignedSet, Sign)> {
    chi.cocircuits()
        .into_iter()
        .map(|c| {
            let v = sig
                .entries
                .iter()
                .find_map(|&(a, s)| {
                    let ca = c.get(a);
                    (ca != Sign::Zero).then_some(s * ca)
                })
                .unwrap_or(Sign::Zero);
            (c, v)
        })
        .collect()
}

/// Named pass/fail outcomes of a batch of identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<(String, bool)>,
}

impl IdentityReport {
    pub fn record(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str())
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }

    /// `Err` naming the first failed identity.
    pub fn into_result(self) -> Result<IdentityReport> {
        let first = self.failures().next().map(String::from);
        match first {
            Some(name) => Err(Error::Verification(name)),
            None => Ok(self),
        }
    }
}

/// `true` when relabeling `lhs` by `perm` gives `rhs` up to a global sign.
pub fn isomorphic_via(lhs: &Chirotope, rhs: &Chirotope, perm: &[usize]) -> bool {
    match lhs.relabel(perm) {
        Ok(x) => x.eq_up_to_sign(rhs),
        Err(_) => false,
    }
}

/// Checks the contraction identities of a lexicographic extension
/// `M̃ = M[p]`, `p = [a₁^{s₁}, …, a_r^{s_r}]`:
///
/// * `M̃/p ≃ (M/a₁)[a₂^{-s₁s₂}, …, a_r^{-s₁s_r}]` with `a₁` sent to the
///   extending element and every other label fixed,
/// * `M̃/a_i = (M/a_i)[signature without a_i]`,
/// * `M̃/e = (M/e)[a₁^{s₁}, …, a_{r-1}^{s_{r-1}}]` for `e` off the signature,
/// * `M/a₁ = (M̃∖p)/a₁ = (M̃∖a₁)/p`.
///
/// Equalities are sign-table equalities up to a global sign. Requires rank
/// at least 2.
pub fn contraction_identities_check(chi: &Chirotope, sig: &LexSignature) -> Result<IdentityReport> {
    let (n, r) = (chi.n(), chi.rank());
    if r < 2 {
        return Err(Error::InvalidRank { n, rank: r });
    }
    let ext = lex_extend(chi, sig)?.extended;
    let p = n;
    let (a1, s1) = sig.entries[0];
    let mut report = IdentityReport::default();

    // M̃/p.
    let lhs = ext.contract(ElemSet::singleton(p))?;
    let m_a1 = chi.minor(ElemSet::EMPTY, ElemSet::singleton(a1))?;
    let sig_p = LexSignature::new(
        sig.entries[1..]
            .iter()
            .map(|&(a, s)| (m_a1.new_label(a).unwrap(), -(s1 * s)))
            .collect(),
    );
    let rhs = lex_extend(&m_a1.result, &sig_p)?.extended;
    // φ: a₁ ↦ new element (n-1), e ↦ its label in M/a₁.
    let perm: Vec<usize> =
        (0..n).map(|e| if e == a1 { n - 1 } else { m_a1.new_label(e).unwrap() }).collect();
    report.record("contract p", isomorphic_via(&lhs, &rhs, &perm));

    // M̃/a_i for each signature element and M̃/e for the others.
    for e in 0..n {
        let lhs = ext.contract(ElemSet::singleton(e))?;
        let m_e = chi.minor(ElemSet::EMPTY, ElemSet::singleton(e))?;
        let reduced: Vec<(usize, Sign)> = if sig.elements().any(|a| a == e) {
            sig.entries.iter().filter(|x| x.0 != e).copied().collect()
        } else {
            sig.entries[..r - 1].to_vec()
        };
        let reduced = LexSignature::new(reduced).map(|a| m_e.new_label(a).unwrap());
        let rhs = lex_extend(&m_e.result, &reduced)?.extended;
        report.record(format!("contract {e}"), lhs.eq_up_to_sign(&rhs));
    }

    // M/a₁ = (M̃∖p)/a₁ = (M̃∖a₁)/p.
    let left = &m_a1.result;
    let middle = ext.minor(ElemSet::singleton(p), ElemSet::singleton(a1))?.result;
    let right = ext.minor(ElemSet::singleton(a1), ElemSet::singleton(p))?.result;
    report.record("delete p, contract a1", left.eq_up_to_sign(&middle));
    report.record("delete a1, contract p", left.eq_up_to_sign(&right));
    Ok(report)
}

/// The all-positive signature `[0⁺, 1⁺, …, (k-1)⁺]`.
pub fn ascending_positive(k: usize) -> LexSignature {
    LexSignature::new((0..k).map(|e| (e, Sign::Pos)).collect())
}

/// A signature on the given elements with the given signs.
pub fn signature(elems: &[usize], signs: &[Sign]) -> LexSignature {
    debug_assert_eq!(elems.len(), signs.len());
    LexSignature::new(elems.iter().copied().zip(signs.iter().copied()).collect())
}
