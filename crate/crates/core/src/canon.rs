//! Canonical forms of vertex–facet incidences.
//!
//! Individualization–refinement over the bipartite vertex/facet incidence:
//! colors are refined to an equitable partition, then every vertex of the
//! first smallest non-singleton cell is individualized in turn until the partition is
//! discrete. Each leaf is a relabeling together with the trace of partition
//! invariants along its path; the canonical form is the relabeled facet list
//! of the leaf with the smallest `(trace, form)`. Everything is computed from
//! the incidence structure alone, so isomorphic inputs produce the same set
//! of leaves.
//!
//! Two leaves with equal forms differ by an automorphism. Children of a node
//! that are swapped by a known automorphism fixing the node's path have
//! isomorphic subtrees, so only one per orbit is explored. A subtree whose
//! trace already exceeds the best trace, and departs from the first path's
//! trace, holds neither a better leaf nor an automorphism of the first leaf.
//! The group order is the product of the orbit sizes of the first child
//! along the first path.

use crate::analysis::FacetList;
use crate::ElemSet;
use alloc::vec;
use alloc::vec::Vec;

/// A combinatorial type: facets as bitmasks under the canonical labeling,
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombType {
    pub n: usize,
    pub facets: Vec<u64>,
    pub automorphisms: u64,
}

impl CombType {
    /// Facets as sorted vertex lists, lines sorted lexicographically.
    pub fn lines(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.facets.iter().map(|&m| ElemSet(m).to_vec()).collect();
        out.sort();
        out
    }

    pub fn facet_list(&self) -> FacetList {
        FacetList::new(self.n, self.facets.iter().map(|&m| ElemSet(m)).collect())
    }
}

fn mix(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Order-sensitive hash of a sequence; callers sort first when the sequence
/// stands for a multiset.
fn hash_seq(seed: u64, xs: &[u64]) -> u64 {
    xs.iter().fold(mix(seed.wrapping_add(0x9e37_79b9_7f4a_7c15)), |h, &x| mix(h ^ x).wrapping_add(x))
}

struct Incidence {
    n: usize,
    facets: Vec<u64>,
    /// `of_vertex[v]`: indices of the facets containing `v`.
    of_vertex: Vec<Vec<usize>>,
}

/// Replaces each key by its rank among the distinct keys.
fn rank_keys(keys: &[u64]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<u64> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect();
    (ranks, sorted.len())
}

/// Leaves seen so far and the automorphisms they revealed.
struct SearchState {
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex permutations.
    generators: Vec<Vec<usize>>,
    group_order: u64,
}

struct Leaf {
    trace: Vec<u64>,
    form: Vec<u64>,
    labels: Vec<u32>,
}

impl SearchState {
    /// `γ = a⁻¹ ∘ b` for two leaves with the same form.
    fn record(&mut self, a: &[u32], b: &[u32]) {
        let mut inv = vec![0usize; a.len()];
        for (u, &c) in a.iter().enumerate() {
            inv[c as usize] = u;
        }
        let g: Vec<usize> = b.iter().map(|&c| inv[c as usize]).collect();
        if g.iter().enumerate().any(|(u, &x)| u != x) && !self.generators.contains(&g) {
            self.generators.push(g);
        }
    }

    fn leaf(&mut self, leaf: Leaf) {
        if let Some(first) = &self.first {
            if first.trace == leaf.trace && first.form == leaf.form {
                let l = first.labels.clone();
                self.record(&l, &leaf.labels);
            }
        }
        if let Some(best) = &self.best {
            match (&leaf.trace, &leaf.form).cmp(&(&best.trace, &best.form)) {
                core::cmp::Ordering::Greater => return,
                core::cmp::Ordering::Equal => {
                    let l = best.labels.clone();
                    self.record(&l, &leaf.labels);
                    return;
                }
                core::cmp::Ordering::Less => {}
            }
        }
        if self.first.is_none() {
            self.first = Some(Leaf { trace: leaf.trace.clone(), form: leaf.form.clone(), labels: leaf.labels.clone() });
        }
        self.best = Some(leaf);
    }

    /// `true` when no leaf below a node with this trace can matter.
    fn prunable(&self, trace: &[u64]) -> bool {
        let (Some(first), Some(best)) = (&self.first, &self.best) else { return false };
        let beyond_best = trace > best.trace.as_slice();
        let off_first = first.trace.get(..trace.len()) != Some(trace);
        beyond_best && off_first
    }

    /// Orbit representatives under the generators fixing `path` pointwise.
    fn orbits(&self, n: usize, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if path.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (u, &gu) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, u), find(&mut parent, gu));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..n).map(|u| find(&mut parent, u)).collect()
    }
}

impl Incidence {
    /// Refines to a stable partition. Colors are ranks of hashes of the
    /// previous color and the multiset of incident facet colors, so they are
    /// label-independent and the partition never coarsens.
    fn refine(&self, colors: Vec<u32>) -> (Vec<u32>, u64) {
        let mut cells = count_distinct(&colors);
        let mut colors = colors;
        let mut buf: Vec<u64> = Vec::new();
        let mut rounds = 0u64;
        loop {
            let fcol: Vec<u64> = self
                .facets
                .iter()
                .map(|&f| {
                    buf.clear();
                    buf.extend(ElemSet(f).iter().map(|v| u64::from(colors[v])));
                    buf.sort_unstable();
                    hash_seq(1, &buf)
                })
                .collect();
            let vkeys: Vec<u64> = (0..self.n)
                .map(|v| {
                    buf.clear();
                    buf.extend(self.of_vertex[v].iter().map(|&f| fcol[f]));
                    buf.sort_unstable();
                    hash_seq(u64::from(colors[v]), &buf)
                })
                .collect();
            let (next, count) = rank_keys(&vkeys);
            colors = next;
            rounds += 1;
            if count == cells {
                let mut sizes = vec![0u64; count];
                for &c in &colors {
                    sizes[c as usize] += 1;
                }
                return (colors, hash_seq(rounds, &sizes));
            }
            cells = count;
        }
    }

    fn search(&self, colors: Vec<u32>, path: &mut Vec<usize>, trace: &mut Vec<u64>, on_first: bool, st: &mut SearchState) {
        let (colors, inv) = self.refine(colors);
        trace.push(inv);
        if !on_first && st.prunable(trace) {
            trace.pop();
            return;
        }
        let mut counts = vec![0usize; self.n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = (0..self.n).filter(|&c| counts[c] > 1).min_by_key(|&c| counts[c]);
        let Some(target) = target else {
            let form = self.relabeled(&colors);
            st.leaf(Leaf { trace: trace.clone(), form, labels: colors });
            trace.pop();
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if colors[v] as usize != target {
                continue;
            }
            if !explored.is_empty() {
                let orbit = st.orbits(self.n, path);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            let split: Vec<u32> =
                colors.iter().enumerate().map(|(u, &c)| 2 * c + u32::from(u != v)).collect();
            path.push(v);
            self.search(split, path, trace, on_first && explored.is_empty(), st);
            path.pop();
            explored.push(v);
        }
        if on_first {
            let orbit = st.orbits(self.n, path);
            let v1 = explored[0];
            st.group_order *= orbit.iter().filter(|&&o| o == orbit[v1]).count() as u64;
        }
        trace.pop();
    }

    fn relabeled(&self, perm: &[u32]) -> Vec<u64> {
        let mut out: Vec<u64> =
            self.facets.iter().map(|&f| ElemSet(f).map(|v| perm[v] as usize).bits()).collect();
        out.sort_unstable();
        out
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// The canonical combinatorial type of a facet list.
pub fn canonical_type(fl: &FacetList) -> CombType {
    let n = fl.n;
    let facets: Vec<u64> = fl.facets.iter().map(|f| f.bits()).collect();
    let mut of_vertex = vec![Vec::new(); n];
    for (i, &f) in facets.iter().enumerate() {
        for v in ElemSet(f) {
            of_vertex[v].push(i);
        }
    }
    let inc = Incidence { n, facets, of_vertex };
    let mut st = SearchState { first: None, best: None, generators: Vec::new(), group_order: 1 };
    if n > 0 {
        inc.search(vec![0; n], &mut Vec::new(), &mut Vec::new(), true, &mut st);
    }
    let facets = st.best.map(|l| l.form).unwrap_or_default();
    CombType { n, facets, automorphisms: st.group_order }
}
