//! Families of neighborly polytopes up to combinatorial type, labeled
//! counts, and the lower bounds on the number of neighborly polytopes.

use crate::analysis::{facets, is_neighborly, universal_flags};
use crate::canon::{canonical_type, CombType};
use crate::combin::{for_each_arrangement, permutations, subsets};
use crate::constructions::{cyclic, gale_extend, sewing_signature, stc, GaleStep};
use crate::extension::{lex_extend, LexSignature};
use crate::flag::{Flag, Level, SplitKind};
use crate::{Chirotope, Error, Result, Sign};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Runs independent jobs. Results come back in input order.
pub trait Executor: Sync {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send;
}

/// Runs every job on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_iter().map(f).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Sewing from cyclic polytopes through universal flags only.
    S,
    /// Sewing from a simplex and cyclic polytopes through flags that contain
    /// a universal subflag.
    E,
    /// Vertex deletions of members of `E` with extra vertices.
    O,
    /// Duals of Gale sewn balanced chirotopes.
    G,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::S, Family::E, Family::O, Family::G];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::S => "S",
            Family::E => "E",
            Family::O => "O",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "S" | "s" => Ok(Family::S),
            "E" | "e" => Ok(Family::E),
            "O" | "o" => Ok(Family::O),
            "G" | "g" => Ok(Family::G),
            _ => Err(Error::OutOfRange(format!("unknown family {s:?}"))),
        }
    }
}

/// Default number of extra sewings explored for `O`.
pub const DEFAULT_BUDGET: usize = 2;
/// Largest polytope dimension accepted by [`enumerate_family`].
pub const MAX_DIM: usize = 8;

/// Largest vertex count reached during enumeration in dimension `d`,
/// extra sewings included. Sewing closures grow by roughly two orders of
/// magnitude per vertex beyond this point.
pub fn max_vertices(d: usize) -> usize {
    if d <= 4 {
        d + 7
    } else {
        d + 5
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    /// Polytope dimension; the chirotopes have rank `dim + 1`.
    pub dim: usize,
    pub vertices: usize,
    /// Extra sewings before deletion, used by `O` only.
    pub budget: usize,
}

impl FamilySpec {
    pub fn new(family: Family, dim: usize, vertices: usize) -> FamilySpec {
        FamilySpec { family, dim, vertices, budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(self, budget: usize) -> FamilySpec {
        FamilySpec { budget, ..self }
    }

    /// Rank of the dual, `n - d - 1`.
    pub fn dual_rank(&self) -> usize {
        self.vertices - self.dim - 1
    }

    pub fn validate(&self) -> Result<()> {
        let (d, n) = (self.dim, self.vertices);
        if d < 2 || n <= d {
            return Err(Error::OutOfRange(format!("need n > d >= 2, got d = {d}, n = {n}")));
        }
        if d % 2 == 1 {
            return Err(Error::OutOfRange(format!("dimension {d} is odd; only even dimensions are enumerated")));
        }
        let top = if self.family == Family::O { n + self.budget } else { n };
        if d > MAX_DIM {
            return Err(Error::OutOfRange(format!("dimension {d} exceeds the enumeration limit {MAX_DIM}")));
        }
        if top > max_vertices(d) {
            let what = if self.family == Family::O { "vertices before deletion" } else { "vertices" };
            return Err(Error::OutOfRange(format!(
                "{top} {what} exceeds the enumeration limit {} in dimension {d}",
                max_vertices(d)
            )));
        }
        Ok(())
    }
}

/// Distinct combinatorial types with one representative chirotope each.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeSet {
    pub types: BTreeMap<CombType, Chirotope>,
}

impl TypeSet {
    /// Keeps the smallest representative so the result is independent of
    /// insertion order.
    pub fn insert(&mut self, ty: CombType, chi: Chirotope) {
        match self.types.get_mut(&ty) {
            Some(old) if *old <= chi => {}
            Some(old) => *old = chi,
            None => {
                self.types.insert(ty, chi);
            }
        }
    }

    pub fn insert_polytope(&mut self, chi: Chirotope) {
        self.insert(canonical_type(&facets(&chi)), chi);
    }

    pub fn extend(&mut self, other: TypeSet) {
        for (t, c) in other.types {
            self.insert(t, c);
        }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn keys(&self) -> BTreeSet<CombType> {
        self.types.keys().cloned().collect()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Chirotope> {
        self.types.values()
    }
}

/// The canonical types of a family, with representative polytopes.
pub fn enumerate_family<X: Executor>(spec: &FamilySpec, exec: &X) -> Result<TypeSet> {
    spec.validate()?;
    let (d, n) = (spec.dim, spec.vertices);
    match spec.family {
        Family::G => gale_family(d, n, exec),
        Family::S => Ok(sewing_closure(d, n, FlagMode::Universal, exec)?.pop().unwrap_or_default()),
        Family::E => Ok(sewing_closure(d, n, FlagMode::Split, exec)?.pop().unwrap_or_default()),
        Family::O => omitted_family(d, n, spec.budget, exec),
    }
}

/// Every Gale sewing step on a chirotope with `n` elements of rank `r`.
pub fn all_gale_steps(n: usize, r: usize) -> Vec<GaleStep> {
    let mut out = Vec::new();
    for_each_arrangement(n, r, |elems| {
        for mask in 0..1u32 << r {
            let entries = elems.iter().enumerate().map(|(i, &a)| (a, Sign::from_parity(mask >> i & 1 == 1)));
            out.push(GaleStep::new(LexSignature::new(entries.collect())));
        }
    });
    out
}

/// Balanced chirotopes reached from `stc(r)` by `m` Gale sewing steps,
/// deduplicated by the type of their dual after every step. Dual ranks are
/// odd, where neighborly chirotopes are determined by their face lattice.
pub fn gale_frontiers<X: Executor>(r: usize, m: usize, exec: &X) -> Result<Vec<TypeSet>> {
    let seed = stc(r)?;
    let mut first = TypeSet::default();
    first.insert(canonical_type(&facets(&seed.dual())), seed);
    let mut levels = vec![first];
    for _ in 0..m {
        let frontier: Vec<Chirotope> = levels.last().unwrap().representatives().cloned().collect();
        let jobs: Vec<(Chirotope, GaleStep)> = frontier
            .iter()
            .flat_map(|chi| all_gale_steps(chi.n(), r).into_iter().map(move |s| (chi.clone(), s)))
            .collect();
        let results = exec.run(jobs, |(chi, step)| {
            let next = gale_extend(&chi, &step)?;
            let ty = canonical_type(&facets(&next.dual()));
            Ok::<_, Error>((ty, next))
        });
        let mut level = TypeSet::default();
        for res in results {
            let (ty, chi) = res?;
            level.insert(ty, chi);
        }
        levels.push(level);
    }
    Ok(levels)
}

fn gale_family<X: Executor>(d: usize, n: usize, exec: &X) -> Result<TypeSet> {
    let r = n - d - 1;
    let m = d / 2;
    let last = gale_frontiers(r, m, exec)?.pop().unwrap_or_default();
    let mut out = TypeSet::default();
    for (ty, chi) in last.types {
        out.insert(ty, chi.dual());
    }
    Ok(out)
}

/// Which flags a sewing closure admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlagMode {
    /// Universal flags exactly.
    Universal,
    /// Universal flags with any one-element split below each level.
    Split,
}

/// Every split variant of an unsplit universal flag.
pub fn split_variants(flag: &Flag) -> Vec<Flag> {
    let base = flag.levels();
    let mut out = Vec::new();
    let total = 3usize.pow(base.len() as u32);
    for code in 0..total {
        let mut c = code;
        let levels: Vec<Level> = base
            .iter()
            .map(|l| {
                let split = SplitKind::ALL[c % 3];
                c /= 3;
                Level { split, ..*l }
            })
            .collect();
        out.push(Flag::universal(levels).expect("levels of a valid flag"));
    }
    out
}

/// Sewing closure in dimension `d` (rank `d + 1`), indexed by vertex count:
/// entry `k` holds polytopes with `d + 1 + k` vertices, the last one `n`.
/// `E` starts from the simplex; both modes add every cyclic polytope.
pub fn sewing_closure<X: Executor>(d: usize, n: usize, mode: FlagMode, exec: &X) -> Result<Vec<TypeSet>> {
    let mut levels = Vec::new();
    let mut start = TypeSet::default();
    start.insert_polytope(cyclic(d + 1, d)?);
    levels.push(start);
    for k in d + 2..=n {
        let prev: Vec<Chirotope> = levels.last().unwrap().representatives().cloned().collect();
        let results = exec.run(prev, |p| sew_all(&p, mode));
        let mut level = TypeSet::default();
        level.insert_polytope(cyclic(k, d)?);
        for res in results {
            level.extend(res);
        }
        levels.push(level);
    }
    Ok(levels)
}

/// Types of every polytope sewn onto `p` through the flags admitted by
/// `mode`. Universal faces pass the face test by construction, and split
/// faces are subsets of them, so the sewing signature is applied directly.
pub fn sew_all(p: &Chirotope, mode: FlagMode) -> TypeSet {
    let mut out = TypeSet::default();
    for flag in universal_flags(p) {
        let variants = match mode {
            FlagMode::Universal => vec![flag],
            FlagMode::Split => split_variants(&flag),
        };
        for v in variants {
            let sewn = lex_extend(p, &sewing_signature(p, &v)).expect("valid sewing signature").extended;
            out.insert_polytope(sewn);
        }
    }
    out
}

fn omitted_family<X: Executor>(d: usize, n: usize, budget: usize, exec: &X) -> Result<TypeSet> {
    let levels = sewing_closure(d, n + budget, FlagMode::Split, exec)?;
    let mut out = TypeSet::default();
    for (k, level) in levels.iter().enumerate() {
        let size = d + 1 + k;
        if size < n {
            continue;
        }
        let reps: Vec<Chirotope> = level.representatives().cloned().collect();
        let results = exec.run(reps, |p| deletions(&p, size - n));
        for res in results {
            out.extend(res?);
        }
    }
    Ok(out)
}

/// Types of the neighborly polytopes obtained by deleting `k` vertices.
pub fn deletions(p: &Chirotope, k: usize) -> Result<TypeSet> {
    let mut out = TypeSet::default();
    for s in subsets(p.n(), k) {
        let q = p.delete(s)?;
        if is_neighborly(&q) {
            out.insert_polytope(q);
        }
    }
    Ok(out)
}

/// Inclusions between families at one parameter pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub dim: usize,
    pub vertices: usize,
    pub budget: usize,
    /// Sizes of S, E, O, G.
    pub sizes: [usize; 4],
    /// S ⊆ E, E ⊆ O, O ⊆ G.
    pub inclusions: [bool; 3],
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.inclusions.iter().all(|&b| b)
    }
}

impl fmt::Display for ContainmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [s, e, o, g] = self.sizes;
        let rel = |b: bool| if b { "<=" } else { "!<=" };
        write!(
            f,
            "d={} n={} budget={}: S({s}) {} E({e}) {} O({o}) {} G({g})",
            self.dim,
            self.vertices,
            self.budget,
            rel(self.inclusions[0]),
            rel(self.inclusions[1]),
            rel(self.inclusions[2])
        )
    }
}

pub fn containment_check<X: Executor>(d: usize, n: usize, budget: usize, exec: &X) -> Result<ContainmentReport> {
    let mut sets = Vec::new();
    for fam in Family::ALL {
        let spec = FamilySpec::new(fam, d, n).with_budget(budget);
        sets.push(enumerate_family(&spec, exec)?.keys());
    }
    let inc = |a: usize, b: usize| sets[a].is_subset(&sets[b]);
    Ok(ContainmentReport {
        dim: d,
        vertices: n,
        budget,
        sizes: [sets[0].len(), sets[1].len(), sets[2].len(), sets[3].len()],
        inclusions: [inc(0, 1), inc(1, 2), inc(2, 3)],
    })
}

/// Distinct sign tables among all `2^r · n!/(n-r)!` full signatures.
pub fn brute_lex_extension_count(m: &Chirotope) -> Result<usize> {
    let r = m.rank();
    let mut seen = BTreeSet::new();
    let mut err = None;
    for_each_arrangement(m.n(), r, |elems| {
        for mask in 0..1u32 << r {
            let sig = LexSignature::new(
                elems.iter().enumerate().map(|(i, &a)| (a, Sign::from_parity(mask >> i & 1 == 1))).collect(),
            );
            match lex_extend(m, &sig) {
                Ok(ext) => {
                    seen.insert(ext.extended);
                }
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(seen.len()),
    }
}

/// Labeled balanced chirotopes of rank `r` on `r + 3` elements, counted as
/// the distinct duals of all labelings of a convex `(r+3)`-gon, up to
/// global sign.
pub fn labeled_corank3_count(r: usize) -> Result<usize> {
    if !(1..=5).contains(&r) {
        return Err(Error::OutOfRange(format!("rank {r} outside 1..=5")));
    }
    let polygon = Chirotope::all_positive(r + 3, 3)?;
    let mut seen = BTreeSet::new();
    for perm in permutations(r + 3) {
        seen.insert(polygon.relabel(&perm)?.dual().normalized());
    }
    Ok(seen.len())
}

/// The inseparability graph on the elements, with edges `(p, q)`, `p < q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InseparabilityGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub shape: GraphShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphShape {
    Complete,
    Cycle,
    /// Disjoint paths, isolated vertices included.
    Chains,
    Other,
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphShape::Complete => "complete",
            GraphShape::Cycle => "cycle",
            GraphShape::Chains => "chains",
            GraphShape::Other => "other",
        })
    }
}

impl InseparabilityGraph {
    /// The shape the graph must have for a uniform chirotope of this rank.
    pub fn expected(n: usize, r: usize) -> &'static [GraphShape] {
        if r <= 1 || r + 1 >= n {
            &[GraphShape::Complete]
        } else if r == 2 || r + 2 == n {
            &[GraphShape::Cycle]
        } else {
            &[GraphShape::Cycle, GraphShape::Chains]
        }
    }

    pub fn matches_expectation(&self, r: usize) -> bool {
        InseparabilityGraph::expected(self.n, r).contains(&self.shape)
    }
}

pub fn shape_of(n: usize, edges: &[(usize, usize)]) -> GraphShape {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    if edges.len() == n * (n - 1) / 2 {
        return GraphShape::Complete;
    }
    let connected = {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    if n >= 3 && connected && deg.iter().all(|&d| d == 2) {
        GraphShape::Cycle
    } else if deg.iter().all(|&d| d <= 2) && edges.len() + components(n, edges) == n {
        GraphShape::Chains
    } else {
        GraphShape::Other
    }
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

pub fn inseparability_graph(m: &Chirotope) -> InseparabilityGraph {
    let mut edges: Vec<(usize, usize)> = m.inseparable_pairs().into_iter().map(|(p, q, _)| (p, q)).collect();
    edges.dedup();
    let shape = shape_of(m.n(), &edges);
    InseparabilityGraph { n: m.n(), edges, shape }
}

fn factorial_big(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(0.0);
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// `2 · n!/(n-r+1)!`: distinct labeled lexicographic extensions of a
/// balanced chirotope of rank `r` on `n` elements, lower bound. Rank 0 has
/// exactly one extension.
pub fn lle_bound(n: usize, r: usize) -> BigUint {
    if r == 0 {
        return BigUint::one();
    }
    if r > n + 1 {
        return BigUint::zero();
    }
    BigUint::from(2u32) * factorial_big(n) / factorial_big(n + 1 - r)
}

/// `2^{r-1} · n!/((n-1)(n-r)!)`, the sharper lower bound.
pub fn lle_bound_sharp(n: usize, r: usize) -> BigUint {
    if r == 0 || r > n || n < 2 {
        return BigUint::zero();
    }
    (BigUint::one() << (r - 1)) * factorial_big(n) / (factorial_big(n - r) * BigUint::from(n - 1))
}

/// `∏_{i=1}^{m} (r+2i)!/(2i)!`.
pub fn product_bound(r: usize, m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * factorial_big(r + 2 * i) / factorial_big(2 * i))
}

/// The recursion `L(m) = L(m-1) · (r+2m)/2 · lle(r+2m-1, r)`, `L(0) = 1`,
/// with the extension count bounded by [`lle_bound`]. Every step divides
/// exactly.
pub fn recursive_bound(r: usize, m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| {
        acc * BigUint::from(r + 2 * k) * lle_bound(r + 2 * k - 1, r) / BigUint::from(2u32)
    })
}

/// `((r+d)/2)² ln(r+d) − (r/2)² ln r − (d/2)² ln d − 3rd/4`, with `0 ln 0 = 0`.
pub fn ln_closed_form(r: usize, d: usize) -> f64 {
    let xlnx = |a: f64, b: f64| if b == 0.0 { 0.0 } else { a * libm::log(b) };
    let (r, d) = (r as f64, d as f64);
    xlnx(((r + d) / 2.0) * ((r + d) / 2.0), r + d)
        - xlnx((r / 2.0) * (r / 2.0), r)
        - xlnx((d / 2.0) * (d / 2.0), d)
        - 3.0 * r * d / 4.0
}

/// `d(n-1)/2 · (ln(n-1) − 3/2)`.
pub fn ln_corollary(n: usize, d: usize) -> f64 {
    (d * (n - 1)) as f64 / 2.0 * (libm::log((n - 1) as f64) - 1.5)
}

/// `d(n-d-1)/2 · (ln(n-1) − 3/2)`: what the closed form yields after
/// bounding `r` and `d` by `n - 1`. The displayed corollary has the larger
/// exponent `d(n-1)/2` and is not implied by the product bound everywhere.
pub fn ln_corollary_derived(n: usize, d: usize) -> f64 {
    (d * (n - d - 1)) as f64 / 2.0 * (libm::log((n - 1) as f64) - 1.5)
}

/// Absolute slack allowed when comparing logarithms.
pub const LN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry {
    pub id: &'static str,
    pub exact: Option<BigUint>,
    pub ln: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub m: usize,
    pub entries: Vec<BoundEntry>,
    /// Brute-force labeled count, where one is computed.
    pub brute: Option<BigUint>,
    pub checks: Vec<(String, bool)>,
    /// Comparisons that are reported but not required to hold.
    pub info: Vec<(String, bool)>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Lower bounds on labeled neighborly `d`-polytopes with `n` vertices.
///
/// For `d = 2m` the product and the recursion coincide; for `d = 2m+1` both
/// carry the extra factor `∏_{j=0}^{r} (2+2m+j)`.
pub fn eval_bounds(n: usize, d: usize) -> Result<BoundReport> {
    if d < 2 || n <= d {
        return Err(Error::OutOfRange(format!("need n > d >= 2, got n = {n}, d = {d}")));
    }
    let r = n - d - 1;
    let m = d / 2;
    let odd = |x: BigUint| {
        if d % 2 == 1 {
            (0..=r).fold(x, |acc, j| acc * BigUint::from(2 + 2 * m + j))
        } else {
            x
        }
    };
    let product = odd(product_bound(r, m));
    let recursive = odd(recursive_bound(r, m));
    let ln_product = ln_big(&product);
    let closed = ln_closed_form(r, d);
    let mut entries = vec![
        BoundEntry { id: "recursive", exact: Some(recursive.clone()), ln: ln_big(&recursive) },
        BoundEntry { id: "product", exact: Some(product.clone()), ln: ln_product },
        BoundEntry { id: "closed-form", exact: None, ln: closed },
    ];
    let mut checks = vec![(String::from("product >= closed-form"), ln_product + LN_TOLERANCE >= closed)];
    // With r = 0 the simplex is the only polytope and the recursion degenerates.
    if r > 0 {
        checks.push((String::from("recursive = product"), recursive == product));
    }
    let mut info = Vec::new();
    if n > 2 * d {
        let cor = ln_corollary(n, d);
        let derived = ln_corollary_derived(n, d);
        entries.push(BoundEntry { id: "corollary", exact: None, ln: cor });
        entries.push(BoundEntry { id: "corollary-derived", exact: None, ln: derived });
        checks.push((String::from("closed-form >= corollary-derived"), closed + LN_TOLERANCE >= derived));
        checks.push((String::from("product >= corollary-derived"), ln_product + LN_TOLERANCE >= derived));
        info.push((String::from("closed-form >= corollary"), closed + LN_TOLERANCE >= cor));
        info.push((String::from("product >= corollary"), ln_product + LN_TOLERANCE >= cor));
    }
    let brute = if d == 2 && (1..=4).contains(&r) {
        Some(BigUint::from(labeled_corank3_count(r)?))
    } else {
        None
    };
    if let Some(b) = &brute {
        checks.push((String::from("brute >= product"), *b >= product));
    }
    Ok(BoundReport { n, d, r, m, entries, brute, checks, info })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_balanced;
    use crate::combin::factorial;

    #[test]
    fn gale_steps_are_all_signed_arrangements() {
        assert_eq!(all_gale_steps(4, 3).len(), 24 * 8);
    }

    #[test]
    fn split_variants_cover_all_patterns() {
        let f = Flag::universal(vec![
            Level { x: 0, y: 1, split: SplitKind::None },
            Level { x: 2, y: 3, split: SplitKind::None },
        ])
        .unwrap();
        let v = split_variants(&f);
        assert_eq!(v.len(), 9);
        assert_eq!(v.iter().filter(|f| f.len() == 4).count(), 4);
    }

    #[test]
    fn family_spec_envelope() {
        assert!(FamilySpec::new(Family::G, 4, 9).validate().is_ok());
        assert!(FamilySpec::new(Family::G, 3, 9).validate().is_err());
        assert!(FamilySpec::new(Family::E, 4, 4).validate().is_err());
        assert!(FamilySpec::new(Family::O, 6, 10).validate().is_err());
        assert!(FamilySpec::new(Family::O, 6, 10).with_budget(1).validate().is_ok());
        assert!(FamilySpec::new(Family::O, 4, 9).validate().is_ok());
    }

    #[test]
    fn hexagon_family_in_the_plane() {
        for fam in Family::ALL {
            let t = enumerate_family(&FamilySpec::new(fam, 2, 6), &Sequential).unwrap();
            assert_eq!(t.len(), 1, "{fam}");
        }
    }

    #[test]
    fn rank_one_has_two_extensions() {
        let m = Chirotope::all_positive(3, 1).unwrap();
        assert_eq!(brute_lex_extension_count(&m).unwrap(), 2);
    }

    #[test]
    fn corank_three_counts() {
        for r in 2..=3 {
            let expected = factorial(r as u64 + 2) as usize / 2;
            assert_eq!(labeled_corank3_count(r).unwrap(), expected);
        }
    }

    #[test]
    fn extension_count_bounds_on_balanced_corank_two() {
        // n - r - 1 = 2 is even.
        let m = Chirotope::all_positive(5, 3).unwrap().dual();
        assert!(is_balanced(&m));
        let count = BigUint::from(brute_lex_extension_count(&m).unwrap());
        assert!(count >= lle_bound(5, 2));
        assert!(count >= lle_bound_sharp(5, 2));
    }

    #[test]
    fn inseparability_shapes() {
        let g = inseparability_graph(&Chirotope::all_positive(6, 2).unwrap());
        assert_eq!(g.shape, GraphShape::Cycle);
        let g = inseparability_graph(&Chirotope::all_positive(6, 5).unwrap());
        assert_eq!(g.shape, GraphShape::Complete);
        assert_eq!(shape_of(4, &[(0, 1), (2, 3)]), GraphShape::Chains);
        assert_eq!(shape_of(4, &[(0, 1), (1, 2), (0, 2)]), GraphShape::Other);
    }

    #[test]
    fn product_at_rank_three_one_step() {
        assert_eq!(product_bound(3, 1), BigUint::from(60u32));
        assert_eq!(recursive_bound(3, 1), BigUint::from(60u32));
    }

    #[test]
    fn bounds_are_consistent() {
        for d in 2..=10 {
            for n in d + 1..=40 {
                let rep = eval_bounds(n, d).unwrap();
                assert!(rep.passed(), "n={n} d={d}: {:?}", rep.checks);
            }
        }
    }

    #[test]
    fn corollary_below_closed_form_in_low_dimension() {
        for d in 2..=4 {
            let n = 2 * d + 1;
            assert!(ln_corollary(n, d) <= ln_closed_form(n - d - 1, d));
        }
        // The corollary is not dominated by the closed form everywhere.
        assert!(ln_corollary(11, 5) > ln_closed_form(5, 5));
    }

    #[test]
    fn closed_form_at_equal_rank_and_dimension() {
        // (2d)^{d²} / (d^{d²/4} · d^{d²/4} · e^{3d²/4}) in log form.
        for d in [2usize, 4, 6] {
            let df = d as f64;
            let direct = df * df * libm::log(2.0 * df) - df * df / 2.0 * libm::log(df) - 0.75 * df * df;
            assert!((ln_closed_form(d, d) - direct).abs() < 1e-9);
        }
    }
}
