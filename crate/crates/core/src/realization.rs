//! Exact rational realizations: determinants, realized lexicographic
//! extensions, Gale transforms and lexicographic subdivisions.
//!
//! Points are stored as homogeneous vectors; affine inputs get a leading 1.

use crate::combin::{subsets, subsets_of};
use crate::extension::{lex_extend, LexSignature};
use crate::{Chirotope, ElemSet, Error, Result, Sign};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Upper bound on the number of halvings of `ε` before giving up.
pub const MAX_HALVINGS: usize = 256;

/// An ordered configuration of homogeneous rational vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    pub points: Vec<Vec<BigRational>>,
}

impl PointConfig {
    /// Rejects ragged or empty-width input.
    pub fn new(points: Vec<Vec<BigRational>>) -> Result<PointConfig> {
        let w = points.first().map_or(0, |p| p.len());
        if w == 0 || points.iter().any(|p| p.len() != w) {
            return Err(Error::OutOfRange("vectors must share a positive length".into()));
        }
        Ok(PointConfig { points })
    }

    /// Affine points `x ∈ Qᵈ` as vectors `(1, x)`.
    pub fn from_affine(rows: Vec<Vec<BigRational>>) -> Result<PointConfig> {
        PointConfig::new(
            rows.into_iter()
                .map(|r| core::iter::once(BigRational::one()).chain(r).collect())
                .collect(),
        )
    }

    /// Affine points from integer coordinates.
    pub fn from_integers(rows: &[&[i64]]) -> Result<PointConfig> {
        PointConfig::from_affine(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// `(1, t, t², …, t^d)` for `t = 1, …, n`.
    pub fn moment_curve(n: usize, d: usize) -> PointConfig {
        let points = (1..=n)
            .map(|t| {
                let t = BigInt::from(t);
                (0..=d).map(|k| BigRational::from_integer(num_traits::pow(t.clone(), k))).collect()
            })
            .collect();
        PointConfig { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Vector length, the rank of a spanning configuration.
    pub fn rank(&self) -> usize {
        self.points[0].len()
    }

    /// The points listed in `order`.
    pub fn permuted(&self, order: &[usize]) -> PointConfig {
        PointConfig { points: order.iter().map(|&i| self.points[i].clone()).collect() }
    }

    fn rows(&self, set: ElemSet) -> Vec<&[BigRational]> {
        set.iter().map(|i| self.points[i].as_slice()).collect()
    }
}

/// A polyhedral subdivision given by the vertex sets of its maximal cells,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subdivision {
    pub cells: Vec<ElemSet>,
}

impl Subdivision {
    pub fn new(mut cells: Vec<ElemSet>) -> Subdivision {
        cells.sort();
        cells.dedup();
        Subdivision { cells }
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn det_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sign of the determinant of square rational rows.
pub fn det_sign(rows: &[&[BigRational]]) -> Sign {
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let d = det_integer(m);
    if d.is_zero() {
        Sign::Zero
    } else if d.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Exact rational determinant.
pub fn det(rows: &[&[BigRational]]) -> BigRational {
    let scale = rows.iter().fold(BigRational::one(), |acc, r| {
        let l = r.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
        acc * BigRational::from_integer(l)
    });
    let m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    BigRational::from_integer(det_integer(m)) / scale
}

/// The chirotope of maximal minors. Rejects vanishing minors.
pub fn chirotope_of_points(cfg: &PointConfig) -> Result<Chirotope> {
    let (n, r) = (cfg.len(), cfg.rank());
    let mut zero = None;
    let chi = Chirotope::from_fn(n, r, |b| {
        let s = det_sign(&cfg.rows(b));
        if s == Sign::Zero {
            zero.get_or_insert(b);
            Sign::Pos
        } else {
            s
        }
    })?;
    match zero {
        Some(b) => Err(Error::NotUniform(format!("vanishing minor on {b}"))),
        None => Ok(chi),
    }
}

/// `s₁v_{a₁} + ε s₂v_{a₂} + ε² s₃v_{a₃} + …`.
pub fn perturbed_vector(cfg: &PointConfig, sig: &LexSignature, eps: &BigRational) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); cfg.rank()];
    let mut w = BigRational::one();
    for &(a, s) in &sig.entries {
        let c = if s == Sign::Neg { -w.clone() } else { w.clone() };
        for (x, y) in v.iter_mut().zip(&cfg.points[a]) {
            *x += &c * y;
        }
        w *= eps;
    }
    v
}

/// `ε = 1/K` for `K = 2, 4, 8, …` until `accept(ε)` holds.
fn adaptive_eps(mut accept: impl FnMut(&BigRational) -> Result<bool>) -> Result<BigRational> {
    let mut k = BigInt::from(2);
    for _ in 0..MAX_HALVINGS {
        let eps = BigRational::new(BigInt::one(), k.clone());
        if accept(&eps)? {
            return Ok(eps);
        }
        k *= 2;
    }
    Err(Error::Verification(format!("no admissible epsilon after {MAX_HALVINGS} halvings")))
}

/// Appends the vector realizing `lex_extend(χ(cfg), sig)`, together with the
/// `ε` that was accepted.
pub fn realize_lex_extension_with_eps(
    cfg: &PointConfig,
    sig: &LexSignature,
) -> Result<(PointConfig, BigRational)> {
    let target = lex_extend(&chirotope_of_points(cfg)?, sig)?.extended;
    let mut found = None;
    let eps = adaptive_eps(|eps| {
        let mut ext = cfg.clone();
        ext.points.push(perturbed_vector(cfg, sig, eps));
        let ok = chirotope_of_points(&ext).is_ok_and(|c| c == target);
        if ok {
            found = Some(ext);
        }
        Ok(ok)
    })?;
    Ok((found.expect("set on acceptance"), eps))
}

pub fn realize_lex_extension(cfg: &PointConfig, sig: &LexSignature) -> Result<PointConfig> {
    Ok(realize_lex_extension_with_eps(cfg, sig)?.0)
}

/// A basis of the kernel of the `r × n` matrix whose columns are the vectors
/// of `cfg`, as `n` vectors of length `n - r`: a Gale transform. Requires a
/// spanning configuration.
pub fn gale_transform(cfg: &PointConfig) -> Result<PointConfig> {
    let (n, r) = (cfg.len(), cfg.rank());
    // Row-reduce the r × n matrix A with A[i][j] = cfg[j][i].
    let mut a: Vec<Vec<BigRational>> =
        (0..r).map(|i| (0..n).map(|j| cfg.points[j][i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..r).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[row].clone();
        for (i, line) in a.iter_mut().enumerate() {
            if i != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == r {
            break;
        }
    }
    if pivots.len() != r {
        return Err(Error::Degenerate);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // Kernel vector for free column f: x_f = 1, x_{pivot_i} = -a[i][f].
    let mut out = vec![vec![BigRational::zero(); free.len()]; n];
    for (k, &f) in free.iter().enumerate() {
        out[f][k] = BigRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            out[p][k] = -a[i][f].clone();
        }
    }
    PointConfig::new(out)
}

/// Projection of the span of `set` onto coordinates where it stays
/// injective: `rank(set)` column indices.
fn spanning_columns(cfg: &PointConfig, set: ElemSet) -> Vec<usize> {
    let rows = cfg.rows(set);
    let mut chosen: Vec<usize> = Vec::new();
    // Greedy: add a column if it raises the rank of the selected columns.
    for c in 0..cfg.rank() {
        let mut trial = chosen.clone();
        trial.push(c);
        if column_rank(&rows, &trial) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

fn column_rank(rows: &[&[BigRational]], cols: &[usize]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let (top, below) = m.split_at_mut(i);
                for (x, p) in below[0][c..].iter_mut().zip(&top[rank][c..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Orientation of `pts` (exactly `cols.len()` of them) in the coordinates `cols`.
fn orient(cfg: &PointConfig, pts: &[usize], cols: &[usize]) -> Sign {
    let rows: Vec<Vec<BigRational>> =
        pts.iter().map(|&i| cols.iter().map(|&c| cfg.points[i][c].clone()).collect()).collect();
    let refs: Vec<&[BigRational]> = rows.iter().map(|r| r.as_slice()).collect();
    det_sign(&refs)
}

/// Facets of `conv(set)` inside its own span, for points in general position:
/// each facet is an independent set of `k - 1` points, `k = rank(set)`, with
/// the remaining points strictly on one side. Returned with that side's sign
/// measured as `orient(H, q)`.
fn hull_facets(cfg: &PointConfig, set: ElemSet, cols: &[usize]) -> Vec<(ElemSet, Sign)> {
    let k = cols.len();
    let mut out = Vec::new();
    for h in subsets_of(set, k - 1) {
        let mut side = Sign::Zero;
        let mut ok = true;
        let mut pts = h.to_vec();
        pts.push(0);
        for q in set.difference(h) {
            *pts.last_mut().unwrap() = q;
            let s = orient(cfg, &pts, cols);
            if s == Sign::Zero || (side != Sign::Zero && s != side) {
                ok = false;
                break;
            }
            side = s;
        }
        if ok && side != Sign::Zero {
            out.push((h, side));
        }
    }
    out
}

fn check_vertices(cfg: &PointConfig, sig: &LexSignature) -> Result<()> {
    let mut seen = ElemSet::EMPTY;
    for e in sig.elements() {
        if e >= cfg.len() {
            return Err(Error::ElementOutOfRange { element: e, n: cfg.len() });
        }
        if seen.contains(e) {
            return Err(Error::RepeatedElement(e));
        }
        seen = seen.with(e);
    }
    Ok(())
}

/// The lexicographic subdivision on `[v₁^{s₁}, …, v_k^{s_k}]` of a point
/// configuration in convex and general position (`s = +` pushes, `s = -`
/// pulls). Entries may be partial; unlisted points stay unrefined.
pub fn lex_subdivision(cfg: &PointConfig, sig: &LexSignature) -> Result<Subdivision> {
    check_vertices(cfg, sig)?;
    let all = ElemSet::full(cfg.len());
    Ok(Subdivision::new(lex_cells(cfg, all, &sig.entries)))
}

fn lex_cells(cfg: &PointConfig, set: ElemSet, sig: &[(usize, Sign)]) -> Vec<ElemSet> {
    let cols = spanning_columns(cfg, set);
    let k = cols.len();
    let pos = sig.iter().position(|&(v, _)| set.contains(v));
    let (Some(i), true) = (pos, set.len() > k) else {
        return vec![set];
    };
    let (v, s) = sig[i];
    let rest = &sig[i + 1..];
    match s {
        Sign::Neg => hull_facets(cfg, set, &cols)
            .into_iter()
            .filter(|(h, _)| !h.contains(v))
            .map(|(h, _)| h.with(v))
            .collect(),
        _ => {
            let smaller = set.without(v);
            let mut cells = lex_cells(cfg, smaller, rest);
            let mut pts: Vec<usize>;
            for (h, side) in hull_facets(cfg, smaller, &cols) {
                pts = h.to_vec();
                pts.push(v);
                if orient(cfg, &pts, &cols) == -side {
                    cells.push(h.with(v));
                }
            }
            cells
        }
    }
}

/// The lifted configuration: `(v_i, -s_i ε^{i-1})` for signature entries,
/// `(v_i, 0)` for the others, and the apex `(0, …, 0, 1)` last.
pub fn lifted_config(cfg: &PointConfig, sig: &LexSignature, eps: &BigRational) -> PointConfig {
    let mut heights = vec![BigRational::zero(); cfg.len()];
    let mut w = BigRational::one();
    for &(a, s) in &sig.entries {
        heights[a] = if s == Sign::Neg { w.clone() } else { -w.clone() };
        w *= eps;
    }
    let mut points: Vec<Vec<BigRational>> = cfg
        .points
        .iter()
        .zip(heights)
        .map(|(p, h)| p.iter().cloned().chain(core::iter::once(h)).collect())
        .collect();
    let mut apex = vec![BigRational::zero(); cfg.rank() + 1];
    *apex.last_mut().unwrap() = BigRational::one();
    points.push(apex);
    PointConfig { points }
}

/// Sign pattern of every maximal minor of the lifted configuration in the
/// limit `ε → 0⁺`. Expanding along the lifting column, each minor is a
/// polynomial in `ε`; its limit sign is that of the lowest-order nonzero
/// coefficient. The apex contributes at degree 0, like `a₁`.
fn limit_minor_signs(cfg: &PointConfig, sig: &LexSignature) -> Vec<Sign> {
    let n = cfg.len();
    let r = cfg.rank() + 1;
    let mut height = vec![None; n + 1];
    for (i, &(a, s)) in sig.entries.iter().enumerate() {
        height[a] = Some((i, s == Sign::Neg));
    }
    height[n] = Some((0, true));
    subsets(n + 1, r)
        .map(|b| {
            let elems = b.to_vec();
            let mut coeffs: Vec<(usize, BigRational)> = Vec::new();
            for (j, &e) in elems.iter().enumerate() {
                let Some((deg, positive)) = height[e] else { continue };
                // The apex has no base coordinates: minors containing it vanish.
                if e != n && b.contains(n) {
                    continue;
                }
                let others: Vec<&[BigRational]> =
                    elems.iter().filter(|&&x| x != e).map(|&x| cfg.points[x].as_slice()).collect();
                let mut term = det(&others);
                if positive != (j + r - 1).is_multiple_of(2) {
                    term = -term;
                }
                match coeffs.iter_mut().find(|(d, _)| *d == deg) {
                    Some((_, c)) => *c += term,
                    None => coeffs.push((deg, term)),
                }
            }
            coeffs.sort_by_key(|(d, _)| *d);
            coeffs.iter().find(|(_, c)| !c.is_zero()).map_or(Sign::Zero, |(_, c)| rational_sign(c))
        })
        .collect()
}

fn rational_sign(x: &BigRational) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Lower cells of the lifted polytope: the facets that avoid the apex.
///
/// The minor signs are first computed in the limit `ε → 0⁺`; `ε = 1/K`
/// is then halved until every numerical minor has its limit sign, and the
/// facets are read off that exact configuration.
pub fn lift_and_lower_faces(cfg: &PointConfig, sig: &LexSignature) -> Result<Subdivision> {
    check_vertices(cfg, sig)?;
    let limit = limit_minor_signs(cfg, sig);
    let n = cfg.len();
    let r = cfg.rank() + 1;
    let eps = adaptive_eps(|eps| {
        let lifted = lifted_config(cfg, sig, eps);
        Ok(subsets(n + 1, r).zip(&limit).all(|(b, &s)| det_sign(&lifted.rows(b)) == s))
    })?;
    let lifted = lifted_config(cfg, sig, &eps);
    Ok(Subdivision::new(lower_facets(&lifted, n)))
}

/// Facets of a spanning vector configuration that do not contain `apex`,
/// as maximal zero sets of nonnegative covectors spanned by hyperplanes.
fn lower_facets(cfg: &PointConfig, apex: usize) -> Vec<ElemSet> {
    let all = ElemSet::full(cfg.len());
    let r = cfg.rank();
    let cols: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    for h in subsets_of(all.without(apex), r - 1) {
        let mut pts = h.to_vec();
        pts.push(apex);
        if orient(cfg, &pts, &cols) == Sign::Zero {
            continue;
        }
        let mut zero = h;
        let mut side = Sign::Zero;
        let mut ok = true;
        for q in all.difference(h) {
            *pts.last_mut().unwrap() = q;
            match orient(cfg, &pts, &cols) {
                Sign::Zero => zero = zero.with(q),
                s if side == Sign::Zero || s == side => side = s,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && !zero.contains(apex) {
            out.push(zero);
        }
    }
    out
}

/// `|det|` summed over the simplices of a pulling triangulation of
/// `conv(set)` from its smallest point; `d!` times the volume.
pub fn hull_volume(cfg: &PointConfig, set: ElemSet) -> BigRational {
    let cols: Vec<usize> = (0..cfg.rank()).collect();
    let v0 = set.min().expect("nonempty");
    let mut total = BigRational::zero();
    if set.len() == cfg.rank() {
        return det(&cfg.rows(set)).abs();
    }
    for (h, _) in hull_facets(cfg, set, &cols) {
        if !h.contains(v0) {
            total += det(&cfg.rows(h.with(v0))).abs();
        }
    }
    total
}

/// Cells cover the hull exactly: the volumes add up.
pub fn volumes_match(cfg: &PointConfig, sub: &Subdivision) -> bool {
    let hull = hull_volume(cfg, ElemSet::full(cfg.len()));
    let sum = sub.cells.iter().fold(BigRational::zero(), |acc, &c| acc + hull_volume(cfg, c));
    hull == sum
}

/// No two cells overlap improperly: there is no circuit `Z` of the points
/// with `Z⁺` in one cell and `Z⁻` in another.
pub fn cells_intersect_properly(cfg: &PointConfig, sub: &Subdivision) -> Result<bool> {
    let chi = chirotope_of_points(cfg)?;
    let circuits = chi.circuits();
    for (i, &a) in sub.cells.iter().enumerate() {
        for &b in &sub.cells[i + 1..] {
            for z in &circuits {
                let hit = |p: ElemSet, m: ElemSet| p.is_subset(a) && m.is_subset(b);
                if hit(z.plus, z.minus) || hit(z.minus, z.plus) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::facets;
    use crate::extension::signature;
    use crate::Sign::{Neg, Pos};

    fn pentagon() -> PointConfig {
        PointConfig::from_integers(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2]]).unwrap()
    }

    #[test]
    fn moment_curve_is_alternating() {
        for (n, d) in [(5, 2), (7, 4), (8, 3)] {
            let chi = chirotope_of_points(&PointConfig::moment_curve(n, d)).unwrap();
            assert_eq!(chi, Chirotope::all_positive(n, d + 1).unwrap());
        }
    }

    #[test]
    fn pentagon_facets_are_its_edges() {
        let chi = chirotope_of_points(&pentagon()).unwrap();
        let f = facets(&chi);
        assert_eq!(f.len(), 5);
        for i in 0..5 {
            assert!(f.facets.contains(&ElemSet::from_slice(&[i, (i + 1) % 5])));
        }
    }

    #[test]
    fn swapping_two_points_flips_affected_bases() {
        let cfg = PointConfig::moment_curve(5, 2);
        let swapped = cfg.permuted(&[1, 0, 2, 3, 4]);
        let a = chirotope_of_points(&cfg).unwrap();
        let b = chirotope_of_points(&swapped).unwrap();
        assert_eq!(a.relabel(&[1, 0, 2, 3, 4]).unwrap(), b);
    }

    #[test]
    fn determinant_values() {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        let m = [vec![r(2), r(1)], vec![r(1), r(3)]];
        let refs: Vec<&[BigRational]> = m.iter().map(|x| x.as_slice()).collect();
        assert_eq!(det(&refs), r(5));
        assert_eq!(det_sign(&refs), Pos);
    }

    #[test]
    fn gale_transform_realizes_dual() {
        let cfg = PointConfig::moment_curve(6, 2);
        let g = gale_transform(&cfg).unwrap();
        let chi = chirotope_of_points(&cfg).unwrap();
        assert!(chirotope_of_points(&g).unwrap().eq_up_to_sign(&chi.dual()));
    }

    #[test]
    fn realized_extension_matches() {
        let cfg = pentagon();
        let sig = signature(&[0, 3, 1], &[Pos, Neg, Pos]);
        let (ext, eps) = realize_lex_extension_with_eps(&cfg, &sig).unwrap();
        let target = lex_extend(&chirotope_of_points(&cfg).unwrap(), &sig).unwrap().extended;
        assert_eq!(chirotope_of_points(&ext).unwrap(), target);
        let mut half = cfg.clone();
        half.points.push(perturbed_vector(&cfg, &sig, &(eps / BigRational::from_integer(2.into()))));
        assert_eq!(chirotope_of_points(&half).unwrap(), target);
    }

    #[test]
    fn pentagon_lexicographic_triangulation() {
        // [a₁⁺, a₄⁻] with a_i = i - 1.
        let cfg = pentagon();
        let sub = lex_subdivision(&cfg, &signature(&[0, 3], &[Pos, Neg])).unwrap();
        let expected = Subdivision::new(vec![
            ElemSet::from_slice(&[0, 1, 4]),
            ElemSet::from_slice(&[1, 2, 3]),
            ElemSet::from_slice(&[1, 3, 4]),
        ]);
        assert_eq!(sub, expected);
        assert!(volumes_match(&cfg, &sub));
        assert!(cells_intersect_properly(&cfg, &sub).unwrap());
        let lifted = lift_and_lower_faces(&cfg, &signature(&[0, 3], &[Neg, Pos])).unwrap();
        assert_eq!(lifted, expected);
    }

    #[test]
    fn pulling_one_vertex_makes_a_fan() {
        let cfg = pentagon();
        let sub = lex_subdivision(&cfg, &signature(&[2], &[Neg])).unwrap();
        assert_eq!(sub.cells.len(), 3);
        assert!(sub.cells.iter().all(|c| c.contains(2)));
    }

    #[test]
    fn pushing_a_square_vertex() {
        let sq = PointConfig::from_integers(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap();
        let sub = lex_subdivision(&sq, &signature(&[0], &[Pos])).unwrap();
        assert_eq!(sub.cells, [ElemSet::from_slice(&[0, 1, 3]), ElemSet::from_slice(&[1, 2, 3])]);
        let sub = lex_subdivision(&sq, &LexSignature::new(Vec::new())).unwrap();
        assert_eq!(sub.cells, [ElemSet::full(4)]);
        assert!(lex_subdivision(&sq, &signature(&[7], &[Pos])).is_err());
    }

    #[test]
    fn lifting_agrees_with_recursion_in_three_space() {
        let cfg = PointConfig::moment_curve(6, 3);
        for elems in [[0, 2, 4, 5], [5, 1, 3, 0], [2, 3, 0, 1]] {
            for mask in 0..16u32 {
                let signs: Vec<Sign> = (0..4).map(|i| Sign::from_parity(mask >> i & 1 == 1)).collect();
                let sig = signature(&elems, &signs);
                let rec = lex_subdivision(&cfg, &sig.negated()).unwrap();
                assert_eq!(lift_and_lower_faces(&cfg, &sig).unwrap(), rec, "{sig}");
                assert!(volumes_match(&cfg, &rec));
                assert!(cells_intersect_properly(&cfg, &rec).unwrap());
            }
        }
    }
}
