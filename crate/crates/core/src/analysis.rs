//! Faces, facets, neighborliness and balancedness of uniform chirotopes.
//!
//! A subset `R` is a face of an acyclic chirotope `P` iff the contraction
//! `P/R` is acyclic, and `P` is acyclic iff no circuit is nonnegative.

use crate::flag::Flag;
use crate::{Chirotope, ElemSet, Error, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Facets of an acyclic chirotope, sorted by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetList {
    pub n: usize,
    pub facets: Vec<ElemSet>,
}

impl FacetList {
    pub fn new(n: usize, mut facets: Vec<ElemSet>) -> FacetList {
        facets.sort();
        facets.dedup();
        FacetList { n, facets }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn containing(&self, set: ElemSet) -> impl Iterator<Item = ElemSet> + '_ {
        self.facets.iter().copied().filter(move |f| set.is_subset(*f))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub acyclic: bool,
    pub neighborly: bool,
    pub balanced: bool,
    pub discrepancy: usize,
}

pub fn is_acyclic(chi: &Chirotope) -> bool {
    chi.circuits().iter().all(|x| !x.minus.is_empty())
}

/// `true` iff `R` is a face. Requires `|R| < rank`.
pub fn is_face(chi: &Chirotope, r: ElemSet) -> Result<bool> {
    if r.len() >= chi.rank() {
        return Err(Error::ContractTooLarge { contract: r.len(), rank: chi.rank() });
    }
    if r.is_empty() {
        return Ok(is_acyclic(chi));
    }
    Ok(is_acyclic(&chi.contract(r)?))
}

/// Zero sets of the one-signed cocircuits.
pub fn facets(chi: &Chirotope) -> FacetList {
    let f = chi
        .cocircuits()
        .into_iter()
        .filter(|c| c.plus.is_empty() || c.minus.is_empty())
        .map(|c| c.zero_set())
        .collect();
    FacetList::new(chi.n(), f)
}

/// Maximum of `||C⁺| - |C⁻||` over all cocircuits.
pub fn discrepancy(chi: &Chirotope) -> usize {
    chi.cocircuits().iter().map(|c| c.discrepancy()).max().unwrap_or(0)
}

/// Maximum discrepancy over all circuits, the discrepancy of the dual.
pub fn circuit_discrepancy(chi: &Chirotope) -> usize {
    chi.circuits().iter().map(|c| c.discrepancy()).max().unwrap_or(0)
}

/// Every cocircuit is halving. For a uniform chirotope a cocircuit has
/// `n - r + 1` support elements, so this is discrepancy at most one.
pub fn is_balanced(chi: &Chirotope) -> bool {
    let k = chi.n() - chi.rank() + 1;
    let (lo, hi) = (k / 2, k.div_ceil(2));
    chi.cocircuits().iter().all(|c| {
        let p = c.plus.len();
        let m = c.minus.len();
        (lo..=hi).contains(&p) && (lo..=hi).contains(&m)
    })
}

/// Neighborliness straight from the definition: acyclic, and every `R` with
/// `1 ≤ |R| ≤ ⌊(r-1)/2⌋` is a face.
pub fn is_neighborly_by_faces(chi: &Chirotope) -> bool {
    if !is_acyclic(chi) {
        return false;
    }
    let m = (chi.rank() - 1) / 2;
    (1..=m).all(|k| {
        crate::combin::subsets(chi.n(), k).all(|r| is_face(chi, r).expect("|R| < rank"))
    })
}

/// Neighborliness through the dual: `P` is neighborly iff every circuit of
/// `P` is halving. Agrees with [`is_neighborly_by_faces`].
pub fn is_neighborly(chi: &Chirotope) -> bool {
    chi.rank() == chi.n() || circuit_discrepancy(chi) <= 1
}

pub fn classify(chi: &Chirotope) -> Classification {
    let discrepancy = discrepancy(chi);
    Classification {
        acyclic: is_acyclic(chi),
        neighborly: is_neighborly_by_faces(chi),
        balanced: is_balanced(chi),
        discrepancy,
    }
}

/// All `F` with `|F| = size` whose contraction is neighborly.
pub fn universal_faces(chi: &Chirotope, size: usize) -> Vec<ElemSet> {
    if size >= chi.rank() {
        return Vec::new();
    }
    crate::combin::subsets(chi.n(), size)
        .filter(|&f| size == 0 || is_neighborly(&chi.contract(f).expect("|F| < rank")))
        .collect()
}

/// All universal flags `T₁ ⊂ … ⊂ T_m`, `m = ⌊(r-1)/2⌋`, of a neighborly
/// chirotope: a universal edge `{x, y}` followed by the universal flags of
/// the contraction by it. Each level is `(min, max)` of its edge, unsplit.
/// For `m = 0` the single empty flag is returned.
pub fn universal_flags(chi: &Chirotope) -> Vec<Flag> {
    let m = (chi.rank() - 1) / 2;
    if m == 0 {
        return vec![Flag::universal(Vec::new()).expect("empty flag")];
    }
    let mut out = Vec::new();
    for edge in universal_faces(chi, 2) {
        let minor = chi.minor(ElemSet::EMPTY, edge).expect("edge smaller than rank");
        let v = edge.to_vec();
        let head = Flag::universal(vec![crate::flag::Level {
            x: v[0],
            y: v[1],
            split: crate::flag::SplitKind::None,
        }])
        .expect("distinct edge");
        for sub in universal_flags(&minor.result) {
            out.push(sub.map(|e| minor.survivors[e]).lifted(&head));
        }
    }
    out
}
