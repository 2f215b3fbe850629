//! Seeded random instances: signatures, chirotopes, point configurations,
//! neighborly polytopes and balanced chirotopes.

use neighborly_core::enumeration::split_variants;
use neighborly_core::realization::PointConfig;
use neighborly_core::{
    chirotope_of_points, cyclic, gale_sew, lex_extend, sew, stc, universal_flags, Chirotope, ElemSet, Flag,
    GaleStep, LexSignature, Sign,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// `len` distinct elements of `0..n` in random order with random signs.
pub fn signature(rng: &mut impl Rng, n: usize, len: usize) -> LexSignature {
    let mut elems: Vec<usize> = (0..n).collect();
    elems.shuffle(rng);
    LexSignature::new(elems.into_iter().take(len).map(|e| (e, sign(rng))).collect())
}

pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn subset(rng: &mut impl Rng, from: ElemSet, k: usize) -> ElemSet {
    let mut v = from.to_vec();
    v.shuffle(rng);
    v.into_iter().take(k).collect()
}

/// A uniform chirotope grown from a basis by random lexicographic
/// extensions, then randomly relabeled and reoriented.
pub fn chirotope(rng: &mut impl Rng, n: usize, r: usize) -> Chirotope {
    let mut chi = Chirotope::all_positive(r, r).expect("rank within bounds");
    while chi.n() < n {
        let sig = signature(rng, chi.n(), r);
        chi = lex_extend(&chi, &sig).expect("full signature").extended;
    }
    let k = rng.gen_range(0..=n);
    let flips = subset(rng, chi.ground(), k);
    chi.relabel_reorient(&permutation(rng, n), flips).expect("permutation")
}

fn integer_config(rows: &[Vec<i64>]) -> Option<PointConfig> {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let cfg = PointConfig::from_integers(&refs).ok()?;
    chirotope_of_points(&cfg).is_ok().then_some(cfg)
}

/// `n` integer points in general position in `d`-space.
pub fn points(rng: &mut impl Rng, n: usize, d: usize) -> PointConfig {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        if let Some(cfg) = integer_config(&rows) {
            return cfg;
        }
    }
}

/// `n ≥ d + 1` points in general and convex position, `d ≥ 2`: integer
/// points on the paraboloid `x_d = |x|²`.
pub fn convex_points(rng: &mut impl Rng, n: usize, d: usize) -> PointConfig {
    assert!(d >= 2);
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                let mut x: Vec<i64> = (0..d - 1).map(|_| rng.gen_range(-12..=12)).collect();
                x.push(x.iter().map(|v| v * v).sum());
                x
            })
            .collect();
        if let Some(cfg) = integer_config(&rows) {
            return cfg;
        }
    }
}

/// A universal flag of `p` with random splits.
pub fn split_universal_flag(rng: &mut impl Rng, p: &Chirotope) -> Option<Flag> {
    let flags = universal_flags(p);
    let base = flags.choose(rng)?;
    split_variants(base).choose(rng).cloned()
}

/// A neighborly `d`-polytope with `n` vertices: `C(d + 2, d)` sewn through
/// random split universal flags.
pub fn neighborly(rng: &mut impl Rng, d: usize, n: usize) -> Chirotope {
    let mut p = cyclic(d + 2, d).expect("d >= 1");
    while p.n() < n {
        let flag = split_universal_flag(rng, &p).expect("neighborly polytopes have universal flags");
        p = sew(&p, &flag).expect("universal flags consist of faces").extended;
    }
    p
}

/// A balanced chirotope of rank `r` on `n ≡ r + 1 (mod 2)` elements:
/// `stc(r)` Gale sewn with random steps.
pub fn balanced(rng: &mut impl Rng, r: usize, n: usize) -> Chirotope {
    let mut m = stc(r).expect("r >= 1");
    while m.n() < n {
        let step = GaleStep::new(signature(rng, m.n(), r));
        m = gale_sew(&m, &step).expect("Gale sewing keeps balancedness");
    }
    m
}
