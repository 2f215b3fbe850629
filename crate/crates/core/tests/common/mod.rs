#![allow(dead_code)]

use neighborly_core::realization::PointConfig;
use neighborly_core::{chirotope_of_points, lex_extend, Chirotope, ElemSet, LexSignature, Sign};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// `len` distinct elements of `0..n` in random order with random signs.
pub fn random_signature(rng: &mut impl Rng, n: usize, len: usize) -> LexSignature {
    let mut elems: Vec<usize> = (0..n).collect();
    elems.shuffle(rng);
    LexSignature::new(elems.into_iter().take(len).map(|e| (e, random_sign(rng))).collect())
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_subset(rng: &mut impl Rng, from: ElemSet, k: usize) -> ElemSet {
    let mut v = from.to_vec();
    v.shuffle(rng);
    v.into_iter().take(k).collect()
}

/// A uniform chirotope grown from a basis by random lexicographic
/// extensions, then randomly relabeled and reoriented.
pub fn random_chirotope(rng: &mut impl Rng, n: usize, r: usize) -> Chirotope {
    let mut chi = Chirotope::all_positive(r, r).unwrap();
    while chi.n() < n {
        let sig = random_signature(rng, chi.n(), r);
        chi = lex_extend(&chi, &sig).unwrap().extended;
    }
    let k = rng.gen_range(0..=n);
    let flips = random_subset(rng, chi.ground(), k);
    chi.relabel_reorient(&random_permutation(rng, n), flips).unwrap()
}

/// `n` integer points in general position in `d`-space.
pub fn random_points(rng: &mut impl Rng, n: usize, d: usize) -> PointConfig {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let cfg = PointConfig::from_integers(&refs).unwrap();
        if chirotope_of_points(&cfg).is_ok() {
            return cfg;
        }
    }
}

/// `n` points in general and convex position: integer points of the
/// paraboloid `x_d = |x|²`.
pub fn random_convex_points(rng: &mut impl Rng, n: usize, d: usize) -> PointConfig {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                let mut x: Vec<i64> = (0..d - 1).map(|_| rng.gen_range(-12..=12)).collect();
                x.push(x.iter().map(|v| v * v).sum());
                x
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let cfg = PointConfig::from_integers(&refs).unwrap();
        if chirotope_of_points(&cfg).is_ok() {
            return cfg;
        }
    }
}
