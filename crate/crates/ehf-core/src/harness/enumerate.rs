//! Graph and tree family enumeration.
//!
//! Three modes: every labeled graph on `n` vertices, one representative per
//! isomorphism class, or a seeded random sample. All three are deterministic;
//! two runs with the same [`EnumerationSpec`] yield the same stream in the
//! same order.

use crate::detect::is_even_hole_free;
use crate::graph::{Graph, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Exhausting all labeled graphs is practical up to this order (2^21 graphs).
pub const LABELED_MAX: usize = 7;
/// One-per-class enumeration is practical up to this order (274668 classes).
pub const CANONICAL_MAX: usize = 9;
/// Unlabeled tree enumeration works through Prüfer sequences, practical up
/// to this many vertices (9^7 sequences).
pub const TREE_MAX: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    AllLabeled,
    CanonicalOnly,
    RandomSample { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    EvenHoleFree,
    Connected,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::EvenHoleFree => is_even_hole_free(g),
            Filter::Connected => {
                g.n() == 0 || g.components_within(g.vertices()).len() == 1
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerationSpec {
    pub n: usize,
    pub mode: Mode,
    pub filter: Option<Filter>,
}

impl EnumerationSpec {
    pub fn labeled(n: usize) -> Self {
        EnumerationSpec {
            n,
            mode: Mode::AllLabeled,
            filter: None,
        }
    }

    pub fn canonical(n: usize) -> Self {
        EnumerationSpec {
            n,
            mode: Mode::CanonicalOnly,
            filter: None,
        }
    }

    pub fn sample(n: usize, count: usize, seed: u64) -> Self {
        EnumerationSpec {
            n,
            mode: Mode::RandomSample { count, seed },
            filter: None,
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = Some(filter);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationError {
    BoundExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnumerationError::BoundExceeded { what, n, max } => {
                write!(f, "{what} enumeration is capped at n = {max}, asked for {n}")
            }
        }
    }
}

impl std::error::Error for EnumerationError {}

/// Number of edge masks on `n` labeled vertices.
pub fn labeled_mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Decode an edge mask. Bit `k` of `mask` is pair `k` in the order
/// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... — the same column-major upper
/// triangle the canonical code uses.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub struct GraphStream {
    inner: StreamKind,
}

enum StreamKind {
    Labeled {
        n: usize,
        next: u64,
        end: u64,
        filter: Option<Filter>,
    },
    Ready {
        graphs: std::vec::IntoIter<Graph>,
    },
    Random {
        n: usize,
        rng: Box<ChaCha8Rng>,
        remaining: usize,
        attempts_left: u64,
        filter: Option<Filter>,
    },
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            StreamKind::Labeled {
                n,
                next,
                end,
                filter,
            } => {
                while next < end {
                    let g = graph_from_mask(*n, *next);
                    *next += 1;
                    if filter.is_none_or(|f| f.accepts(&g)) {
                        return Some(g);
                    }
                }
                None
            }
            StreamKind::Ready { graphs } => graphs.next(),
            StreamKind::Random {
                n,
                rng,
                remaining,
                attempts_left,
                filter,
            } => {
                while *remaining > 0 && *attempts_left > 0 {
                    *attempts_left -= 1;
                    let g = random_graph(*n, rng);
                    if filter.is_none_or(|f| f.accepts(&g)) {
                        *remaining -= 1;
                        return Some(g);
                    }
                }
                None
            }
        }
    }
}

/// Enumerate graphs per the spec. The stream is deterministic. A rejection
/// filter on a random sample gives up after 10^7 consecutive misses rather
/// than spin forever.
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<GraphStream, EnumerationError> {
    let inner = match spec.mode {
        Mode::AllLabeled => {
            if spec.n > LABELED_MAX {
                return Err(EnumerationError::BoundExceeded {
                    what: "labeled",
                    n: spec.n,
                    max: LABELED_MAX,
                });
            }
            StreamKind::Labeled {
                n: spec.n,
                next: 0,
                end: labeled_mask_count(spec.n),
                filter: spec.filter,
            }
        }
        Mode::CanonicalOnly => {
            if spec.n > CANONICAL_MAX {
                return Err(EnumerationError::BoundExceeded {
                    what: "canonical",
                    n: spec.n,
                    max: CANONICAL_MAX,
                });
            }
            let mut reps = canonical_reps(spec.n);
            if let Some(f) = spec.filter {
                reps.retain(|g| f.accepts(g));
            }
            StreamKind::Ready {
                graphs: reps.into_iter(),
            }
        }
        Mode::RandomSample { count, seed } => StreamKind::Random {
            n: spec.n,
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            remaining: count,
            attempts_left: 10_000_000,
            filter: spec.filter,
        },
    };
    Ok(GraphStream { inner })
}

/// Packed upper-triangle code of `g` under the vertex order `perm`:
/// position `k` contributes `k` bits, adjacency to positions `0..k`, earlier
/// positions in higher bits. Maximizing this string over all orders gives a
/// canonical form, so two graphs on the same `n` get equal codes exactly
/// when they are isomorphic.
///
/// The search is branch and bound: orders are grown one vertex at a time,
/// candidates sorted most-adjacent-first, and a prefix strictly below the
/// incumbent's prefix is abandoned. 36 bits at n = 9 keeps the code in u64.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= CANONICAL_MAX, "codes are sized for n <= {CANONICAL_MAX}");
    if n < 2 {
        return 0;
    }
    let mut best: Vec<u64> = Vec::new(); // best prefix value per level, levels 1..n
    let mut chosen: Vec<usize> = Vec::with_capacity(n);

    fn descend(
        g: &Graph,
        chosen: &mut Vec<usize>,
        used: u64,
        prefix: u64,
        best: &mut Vec<u64>,
    ) {
        let n = g.n();
        let k = chosen.len();
        if k == n {
            return;
        }
        let mut cands: Vec<(u64, usize)> = (0..n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| {
                let mut bits = 0u64;
                for (slot, &u) in chosen.iter().enumerate() {
                    if g.has_edge(u, v) {
                        bits |= 1 << (k - 1 - slot);
                    }
                }
                (bits, v)
            })
            .collect();
        cands.sort_unstable_by(|a, b| b.cmp(a));
        for (bits, v) in cands {
            let p = (prefix << k) | bits;
            match best.get(k) {
                Some(&b) if p < b => continue, // any completion loses
                Some(&b) if p > b => {
                    best[k] = p;
                    best.truncate(k + 1); // deeper incumbents came from a dead prefix
                }
                Some(_) => {}
                None => best.push(p),
            }
            chosen.push(v);
            descend(g, chosen, used | 1 << v, p, best);
            chosen.pop();
        }
    }

    descend(g, &mut chosen, 0, 0, &mut best);
    best[n - 1]
}

fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for u in 0..n {
        if mask >> u & 1 == 1 {
            h.add_edge(u, n);
        }
    }
    h
}

/// One representative per isomorphism class on `n` vertices, sorted by
/// canonical code. Built level by level: every class on `k` vertices arises
/// from some class on `k - 1` by adding one vertex, so augmenting each
/// representative with every attachment mask and deduplicating by code is
/// exhaustive.
pub fn canonical_reps(n: usize) -> Vec<Graph> {
    assert!(n <= CANONICAL_MAX);
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0..(1u64 << (k - 1)) {
                let h = extend(g, mask);
                seen.entry(canonical_code(&h)).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// All unlabeled trees on `1..=n` vertices, via Prüfer sequences deduplicated
/// by a rooted-at-the-centre subtree code. Deterministic order.
pub fn all_trees(n: usize) -> Result<Vec<Tree>, EnumerationError> {
    if n > TREE_MAX {
        return Err(EnumerationError::BoundExceeded {
            what: "tree",
            n,
            max: TREE_MAX,
        });
    }
    let mut out = Vec::new();
    let mut interner: HashMap<Vec<u32>, u32> = HashMap::new();
    for k in 1..=n {
        let mut seen: BTreeMap<(u32, u32), Tree> = BTreeMap::new();
        let mut consider = |edges: &[(usize, usize)]| {
            let t = Tree::new(edges.len() + 1, edges).expect("decoded edges form a tree");
            seen.entry(free_tree_key(&t, &mut interner)).or_insert(t);
        };
        match k {
            1 => consider(&[]),
            2 => consider(&[(0, 1)]),
            _ => {
                let mut seq = vec![0usize; k - 2];
                loop {
                    consider(&prufer_decode(k, &seq));
                    // odometer over sequences, most-significant digit last
                    let mut pos = 0;
                    while pos < seq.len() {
                        seq[pos] += 1;
                        if seq[pos] < k {
                            break;
                        }
                        seq[pos] = 0;
                        pos += 1;
                    }
                    if pos == seq.len() {
                        break;
                    }
                }
            }
        }
        out.extend(seen.into_values());
    }
    Ok(out)
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest current leaf, maintained with a scan pointer
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Key identifying the isomorphism class of a free tree: the interned
/// rooted-shape ids at its one or two centres, as an unordered pair. The
/// interner is shared across calls so ids are comparable between trees.
fn free_tree_key(t: &Tree, interner: &mut HashMap<Vec<u32>, u32>) -> (u32, u32) {
    let centres = tree_centres(t);
    let a = rooted_code(t, centres[0], interner);
    match centres.len() {
        1 => (a, u32::MAX),
        _ => {
            let b = rooted_code(t, centres[1], interner);
            (a.min(b), a.max(b))
        }
    }
}

fn tree_centres(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &u in t.neighbours(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    c.sort_unstable();
    c
}

fn rooted_code(t: &Tree, root: usize, interner: &mut HashMap<Vec<u32>, u32>) -> u32 {
    fn walk(
        t: &Tree,
        v: usize,
        parent: Option<usize>,
        interner: &mut HashMap<Vec<u32>, u32>,
    ) -> u32 {
        let mut kids: Vec<u32> = t
            .neighbours(v)
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| walk(t, u, Some(v), interner))
            .collect();
        kids.sort_unstable();
        let next = interner.len() as u32;
        *interner.entry(kids).or_insert(next)
    }
    walk(t, root, None, interner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn labeled_stream_counts() {
        let spec = EnumerationSpec::labeled(3);
        assert_eq!(enumerate_graphs(&spec).unwrap().count(), 8);
        let spec = EnumerationSpec::labeled(8);
        assert!(matches!(
            enumerate_graphs(&spec),
            Err(EnumerationError::BoundExceeded { max: 7, .. })
        ));
    }

    #[test]
    fn canonical_stream_counts() {
        assert_eq!(
            enumerate_graphs(&EnumerationSpec::canonical(4)).unwrap().count(),
            11
        );
        let filtered = EnumerationSpec::canonical(4).with_filter(Filter::EvenHoleFree);
        // the 4-cycle is the one class lost
        assert_eq!(enumerate_graphs(&filtered).unwrap().count(), 10);
        let connected = EnumerationSpec::canonical(4).with_filter(Filter::Connected);
        assert_eq!(enumerate_graphs(&connected).unwrap().count(), 6);
    }

    // unlabeled graph counts 1, 2, 4, 11, 34, 156, 1044 for n = 1..=7
    #[test]
    fn canonical_class_counts_match_the_known_table() {
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(canonical_reps(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_code_agrees_with_permutation_oracle() {
        // all labeled graphs on 4 vertices: code equality == isomorphism
        let graphs: Vec<Graph> = enumerate_graphs(&EnumerationSpec::labeled(4))
            .unwrap()
            .collect();
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    canonical_code(a) == canonical_code(b),
                    oracle::isomorphic(a, b),
                );
            }
        }
    }

    #[test]
    fn random_samples_are_reproducible_and_filterable() {
        let spec = EnumerationSpec::sample(6, 40, 99).with_filter(Filter::EvenHoleFree);
        let a: Vec<Graph> = enumerate_graphs(&spec).unwrap().collect();
        let b: Vec<Graph> = enumerate_graphs(&spec).unwrap().collect();
        assert_eq!(a.len(), 40);
        assert!(a == b);
        assert!(a.iter().all(is_even_hole_free));
        let other: Vec<Graph> = enumerate_graphs(&EnumerationSpec::sample(6, 40, 100))
            .unwrap()
            .collect();
        assert!(a != other);
    }

    // unlabeled tree counts 1, 1, 1, 2, 3, 6, 11, 23, 47 for n = 1..=9
    #[test]
    fn tree_counts_match_the_known_table() {
        let trees = all_trees(7).unwrap();
        let mut by_n = [0usize; 8];
        for t in &trees {
            by_n[t.n()] += 1;
        }
        assert_eq!(by_n[1..], [1, 1, 1, 2, 3, 6, 11]);
        assert!(all_trees(10).is_err());
    }
}
