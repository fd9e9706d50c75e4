//! Bitset graphs and primitive operations.
//!
//! Graphs are simple and undirected, with vertices `0..n`. Each adjacency row
//! is a single machine word, which caps `n` at [`MAX_VERTICES`] (64 by
//! default, 128 with the `wide` feature). Everything downstream works at desk
//! scale, so one word per row keeps the hot loops branch-free without any
//! allocation per query.

use std::fmt;

#[cfg(not(feature = "wide"))]
type Word = u64;
#[cfg(feature = "wide")]
type Word = u128;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = Word::BITS as usize;

/// A set of vertices, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Word);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices below `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(!0)
        } else {
            VertexSet((1 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in increasing order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter(Word);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// How one vertex set attaches to another.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyKind {
    /// Every cross pair is an edge (both sides nonempty).
    Complete,
    /// No cross pair is an edge (both sides nonempty).
    Anticomplete,
    /// Some cross pairs are edges and some are not.
    Mixed,
    /// At least one side is empty, so the set is complete and anticomplete
    /// at once.
    VacuouslyBoth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    TooManyVertices { n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the cap of {MAX_VERTICES}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} vertices exceeds cap {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete graph.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood.
    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbours of `v` inside `within`.
    #[inline]
    pub fn neighbours_in(&self, v: usize, within: VertexSet) -> VertexSet {
        self.adj[v].intersection(within)
    }

    /// Vertices of `within` with at least one neighbour in `of`.
    pub fn attachment(&self, of: VertexSet, within: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in within.iter() {
            if self.adj[v].intersects(of) {
                out.insert(v);
            }
        }
        out
    }

    /// Union of open neighbourhoods of `set`.
    pub fn neighbourhood_of_set(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out = out.union(self.adj[v]);
        }
        out.difference(set)
    }

    /// Induced subgraph on `keep`, relabelled by increasing vertex id.
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(old.len());
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, old)
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set of the ambient graph, ordered by smallest member. The empty
    /// set has no components.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within;
        while let Some(seed) = left.min() {
            let mut comp = VertexSet::singleton(seed);
            let mut frontier = VertexSet::singleton(seed);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersection(within));
                }
                next = next.difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            out.push(comp);
            left = left.difference(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for the empty set and for any set inducing a connected subgraph.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        self.components_within(set).len() <= 1
    }

    /// True iff every two distinct members of `set` are adjacent. Empty sets
    /// and singletons count as cliques.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        for v in set.iter() {
            if !set.without(v).is_subset_of(self.adj[v]) {
                return false;
            }
        }
        true
    }

    /// How `xs` attaches to `ys`. Overlapping sets are fine; adjacency is
    /// judged over all cross pairs of distinct vertices.
    pub fn adjacency_between(&self, xs: VertexSet, ys: VertexSet) -> AdjacencyKind {
        if xs.is_empty() || ys.is_empty() {
            return AdjacencyKind::VacuouslyBoth;
        }
        let mut seen_edge = false;
        let mut seen_nonedge = false;
        for x in xs.iter() {
            let want = ys.without(x);
            let have = self.adj[x].intersection(want);
            if !have.is_empty() {
                seen_edge = true;
            }
            if have != want {
                seen_nonedge = true;
            }
            if seen_edge && seen_nonedge {
                return AdjacencyKind::Mixed;
            }
        }
        match (seen_edge, seen_nonedge) {
            (true, false) => AdjacencyKind::Complete,
            (false, true) => AdjacencyKind::Anticomplete,
            // xs ⊆ {x} = ys for a single vertex: no cross pairs at all.
            (false, false) => AdjacencyKind::VacuouslyBoth,
            (true, true) => unreachable!(),
        }
    }

    pub fn is_complete_between(&self, xs: VertexSet, ys: VertexSet) -> bool {
        matches!(
            self.adjacency_between(xs, ys),
            AdjacencyKind::Complete | AdjacencyKind::VacuouslyBoth
        )
    }

    pub fn is_anticomplete_between(&self, xs: VertexSet, ys: VertexSet) -> bool {
        matches!(
            self.adjacency_between(xs, ys),
            AdjacencyKind::Anticomplete | AdjacencyKind::VacuouslyBoth
        )
    }

    /// Enumerate induced paths from `from` to `to` whose interior vertices
    /// all lie in `allowed`. See [`PathStream`].
    pub fn induced_paths<'g>(
        &'g self,
        from: usize,
        to: usize,
        allowed: VertexSet,
        budget: Budget,
    ) -> PathStream<'g> {
        PathStream::new(self, from, to, allowed, budget)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A sequence of distinct vertices. Whether it is a path/induced path of a
/// particular graph is checked against that graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn new(verts: Vec<usize>) -> Self {
        Path(verts)
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Vertices strictly between the ends. A single-vertex path has no
    /// interior.
    pub fn interior(&self) -> VertexSet {
        if self.0.len() <= 2 {
            VertexSet::EMPTY
        } else {
            self.0[1..self.0.len() - 1].iter().copied().collect()
        }
    }

    /// Distinct vertices, consecutive ones adjacent.
    pub fn is_path_of(&self, g: &Graph) -> bool {
        if self.0.is_empty() {
            return false;
        }
        if self.vertex_set().len() != self.0.len() {
            return false;
        }
        if self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// A path whose only edges are the consecutive ones.
    pub fn is_induced_path_of(&self, g: &Graph) -> bool {
        if !self.is_path_of(g) {
            return false;
        }
        for i in 0..self.0.len() {
            for j in i + 2..self.0.len() {
                if g.has_edge(self.0[i], self.0[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Distinct vertices forming an induced cycle of length >= 4 (a hole).
    pub fn is_hole_of(&self, g: &Graph) -> bool {
        let k = self.0.len();
        if k < 4 || !self.is_path_of(g) {
            return false;
        }
        if !g.has_edge(self.0[k - 1], self.0[0]) {
            return false;
        }
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if g.has_edge(self.0[i], self.0[j]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.0)
    }
}

/// Search budget for enumeration routines, counted in search-tree nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub Option<u64>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    pub fn nodes(n: u64) -> Self {
        Budget(Some(n))
    }
}

/// Depth-first enumeration of induced paths between two fixed ends.
///
/// Every emitted sequence is an induced path of the graph from `from` to
/// `to` whose interior lies in the allowed set, and each such path is emitted
/// exactly once, in depth-first order with neighbours explored in increasing
/// vertex order. When the node budget runs out the stream stops early and
/// [`PathStream::hit_budget`] reports it, so callers can tell truncation from
/// exhaustion.
pub struct PathStream<'g> {
    g: &'g Graph,
    to: usize,
    allowed: VertexSet,
    // Stack of (vertex, next candidate set) pairs; `path` mirrors the stack.
    stack: Vec<(usize, VertexSet)>,
    path: Vec<usize>,
    forbidden: Vec<VertexSet>,
    nodes: u64,
    limit: Option<u64>,
    hit_budget: bool,
    done: bool,
}

impl<'g> PathStream<'g> {
    fn new(g: &'g Graph, from: usize, to: usize, allowed: VertexSet, budget: Budget) -> Self {
        let done = from >= g.n() || to >= g.n() || from == to;
        let candidates = if done {
            VertexSet::EMPTY
        } else {
            g.neighbours(from).intersection(allowed.with(to))
        };
        PathStream {
            g,
            to,
            allowed,
            stack: vec![(from, candidates)],
            path: vec![from],
            forbidden: vec![VertexSet::EMPTY],
            nodes: 0,
            limit: budget.0,
            hit_budget: false,
            done,
        }
    }

    /// True once the stream has stopped early because the budget ran out.
    pub fn hit_budget(&self) -> bool {
        self.hit_budget
    }

    pub fn nodes_visited(&self) -> u64 {
        self.nodes
    }
}

impl<'g> Iterator for PathStream<'g> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.stack.len();
            if depth == 0 {
                self.done = true;
                return None;
            }
            let (cur, cands) = self.stack[depth - 1];
            let Some(next) = cands.min() else {
                self.stack.pop();
                self.path.pop();
                self.forbidden.pop();
                continue;
            };
            self.stack[depth - 1].1.remove(next);

            if let Some(limit) = self.limit {
                if self.nodes >= limit {
                    self.hit_budget = true;
                    self.done = true;
                    return None;
                }
            }
            self.nodes += 1;

            // `next` extends the induced path: it is a neighbour of `cur`
            // not adjacent (or equal) to anything earlier.
            if self.forbidden[depth - 1].contains(next) {
                continue;
            }
            if next == self.to {
                let mut verts = self.path.clone();
                verts.push(next);
                return Some(Path(verts));
            }
            let forbid = self.forbidden[depth - 1]
                .union(self.g.neighbours(cur))
                .with(cur);
            let cands = self
                .g
                .neighbours(next)
                .intersection(self.allowed.with(self.to))
                .difference(forbid);
            self.path.push(next);
            self.forbidden.push(forbid);
            self.stack.push((next, cands));
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeError {
    NotConnected,
    HasCycle,
    BadVertex { vertex: usize, n: usize },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TreeError::NotConnected => write!(f, "edge set does not connect all vertices"),
            TreeError::HasCycle => write!(f, "edge set contains a cycle"),
            TreeError::BadVertex { vertex, n } => {
                write!(f, "tree vertex {vertex} out of range for {n} vertices")
            }
        }
    }
}

impl std::error::Error for TreeError {}

/// A tree over abstract vertex ids `0..n`. Edges are stored with the smaller
/// endpoint first, sorted, so edge indices are stable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::NotConnected);
        }
        if edges.len() != n - 1 {
            if edges.len() + 1 < n {
                return Err(TreeError::NotConnected);
            }
            return Err(TreeError::HasCycle);
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::BadVertex {
                    vertex: u.max(v),
                    n,
                });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        // n-1 edges, so connectivity implies acyclicity.
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        if count != n {
            return Err(TreeError::NotConnected);
        }
        Ok(Tree {
            n,
            edges: norm,
            adj,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Proper 2-colouring with vertex 0 coloured false. Unique up to swap.
    pub fn bipartition(&self) -> Vec<bool> {
        let mut colour = vec![false; self.n];
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    colour[v] = !colour[u];
                    stack.push(v);
                }
            }
        }
        colour
    }

    /// Distance matrix by BFS from every vertex.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let mut dist = vec![vec![usize::MAX; self.n]; self.n];
        for s in 0..self.n {
            dist[s][s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[s][v] == usize::MAX {
                        dist[s][v] = dist[s][u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.min(), Some(0));
        assert_eq!(VertexSet::full(4).to_vec(), vec![0, 1, 2, 3]);
        assert!(VertexSet::EMPTY.min().is_none());
    }

    #[test]
    fn induced_keeps_edges() {
        let g = Graph::complete(4);
        let (h, map) = g.induced([1, 2, 3].into_iter().collect());
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(map, vec![1, 2, 3]);

        let (h, _) = Graph::cycle(5).induced([0, 1, 3].into_iter().collect());
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn components_of_path_minus_middle() {
        let g = Graph::path(5);
        let within = g.vertices().without(2);
        let comps = g.components_within(within);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![3, 4]);
        assert!(g.components_within(VertexSet::EMPTY).is_empty());
        assert!(g.is_connected_set(VertexSet::EMPTY));
    }

    #[test]
    fn adjacency_between_kinds() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let ab: VertexSet = [0, 1].into_iter().collect();
        let cd: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(g.adjacency_between(ab, cd), AdjacencyKind::Complete);
        assert_eq!(g.adjacency_between(ab, ab), AdjacencyKind::Anticomplete);
        assert_eq!(
            g.adjacency_between(VertexSet::EMPTY, cd),
            AdjacencyKind::VacuouslyBoth
        );
        let g2 = Graph::from_edges(4, &[(0, 2), (1, 3)]);
        assert_eq!(g2.adjacency_between(ab, cd), AdjacencyKind::Mixed);
        // A single shared vertex has no cross pairs.
        let v0 = VertexSet::singleton(0);
        assert_eq!(g.adjacency_between(v0, v0), AdjacencyKind::VacuouslyBoth);
    }

    #[test]
    fn clique_checks() {
        let g = Graph::complete(5);
        assert!(g.is_clique(g.vertices()));
        assert!(g.is_clique(VertexSet::EMPTY));
        assert!(g.is_clique(VertexSet::singleton(2)));
        let h = Graph::cycle(4);
        assert!(!h.is_clique([0, 1, 2].into_iter().collect()));
        assert!(h.is_clique([0, 1].into_iter().collect()));
    }

    #[test]
    fn induced_paths_in_c5() {
        let g = Graph::cycle(5);
        let paths: Vec<Path> = g
            .induced_paths(0, 2, g.vertices(), Budget::UNLIMITED)
            .collect();
        // 0-1-2 and 0-4-3-2.
        assert_eq!(paths.len(), 2);
        assert!(paths.contains(&Path(vec![0, 1, 2])));
        assert!(paths.contains(&Path(vec![0, 4, 3, 2])));
        for p in &paths {
            assert!(p.is_induced_path_of(&g));
        }
    }

    #[test]
    fn induced_paths_respect_allowed_set() {
        let g = Graph::cycle(5);
        let allowed = g.vertices().without(1);
        let paths: Vec<Path> = g.induced_paths(0, 2, allowed, Budget::UNLIMITED).collect();
        assert_eq!(paths, vec![Path(vec![0, 4, 3, 2])]);
    }

    #[test]
    fn induced_paths_k23_both_sides() {
        // K_{2,3}: parts {0,1} and {2,3,4}. Induced 0-1 paths have length 2.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let paths: Vec<Path> = g
            .induced_paths(0, 1, g.vertices(), Budget::UNLIMITED)
            .collect();
        assert_eq!(paths.len(), 3);
        for p in &paths {
            assert_eq!(p.len(), 2);
        }
    }

    #[test]
    fn path_stream_budget_is_distinguishable() {
        let g = Graph::complete(8);
        let mut stream = g.induced_paths(0, 7, g.vertices(), Budget::nodes(3));
        let got: Vec<Path> = stream.by_ref().collect();
        assert!(stream.hit_budget());
        // Direct edge plus nothing else at this budget.
        assert!(got.len() <= 3);

        let mut all = g.induced_paths(0, 7, g.vertices(), Budget::UNLIMITED);
        let got: Vec<Path> = all.by_ref().collect();
        assert!(!all.hit_budget());
        // In a complete graph the only induced path between two vertices is
        // the edge itself.
        assert_eq!(got, vec![Path(vec![0, 7])]);
    }

    #[test]
    fn no_paths_between_equal_ends() {
        let g = Graph::cycle(4);
        let paths: Vec<Path> = g
            .induced_paths(1, 1, g.vertices(), Budget::UNLIMITED)
            .collect();
        assert!(paths.is_empty());
    }

    #[test]
    fn hole_recognition() {
        let g = Graph::cycle(6);
        assert!(Path(vec![0, 1, 2, 3, 4, 5]).is_hole_of(&g));
        assert!(!Path(vec![0, 1, 2, 3]).is_hole_of(&g));
        let k4 = Graph::complete(4);
        assert!(!Path(vec![0, 1, 2, 3]).is_hole_of(&k4));
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).is_ok());
        assert_eq!(
            Tree::new(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(TreeError::HasCycle)
        );
        assert_eq!(
            Tree::new(4, &[(0, 1), (0, 1), (2, 3)]),
            Err(TreeError::NotConnected)
        );
        let t = Tree::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(t.leaves(), vec![1, 2, 4]);
        assert_eq!(t.degree(0), 3);
        let d = t.distances();
        assert_eq!(d[1][4], 3);
    }
}
