//! Strip systems indexed by a tree J, cross-edges, and locality.
//!
//! A system assigns a strip candidate M_e to every edge of J and a hub M_u to
//! every vertex, subject to five structural conditions checked literally by
//! [`validate_jstrip`]. A cross-edge ab attaches to the hub union of one side
//! of a leaf partition (α, β) each; [`validate_cross_edge`] checks those four
//! conditions. The model instance is the line graph of a tree with two extra
//! vertices wired to leaf edges, produced by [`build_extended_tree_line_graph`].

use crate::graph::{Graph, Tree, VertexSet};
use crate::strips::strip::{validate_strip, Strip, StripCheck, StripError};
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct JStripSystem {
    pub j: Tree,
    /// Indexed like `j.edges()`.
    pub m_edge: Vec<VertexSet>,
    /// Indexed by vertex of J.
    pub m_vertex: Vec<VertexSet>,
}

impl JStripSystem {
    /// V(M): every vertex carried by some edge set.
    pub fn vertex_union(&self) -> VertexSet {
        self.m_edge
            .iter()
            .fold(VertexSet::EMPTY, |acc, m| acc.union(*m))
    }

    /// The strip triple of edge `idx`, A-side at the lower-numbered J end.
    pub fn strip_of_edge(&self, idx: usize) -> Strip {
        let (u, v) = self.j.edges()[idx];
        let m = self.m_edge[idx];
        let a = m.intersection(self.m_vertex[u]);
        let b = m.intersection(self.m_vertex[v]);
        Strip::new(a, b, m.difference(self.m_vertex[u].union(self.m_vertex[v])))
    }

    pub fn hub_union(&self, vs: VertexSet) -> VertexSet {
        vs.iter()
            .fold(VertexSet::EMPTY, |acc, u| acc.union(self.m_vertex[u]))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "j": {
                "n": self.j.n(),
                "edges": self.j.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
            },
            "m_edge": self.m_edge.iter().map(|m| m.to_vec()).collect::<Vec<_>>(),
            "m_vertex": self.m_vertex.iter().map(|m| m.to_vec()).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JStripFailure {
    /// Two edge sets share a vertex.
    EdgeSetsOverlap { e1: usize, e2: usize, witness: usize },
    /// Some hub vertex lies in no incident edge set.
    HubNotCovered { u: usize, witness: usize },
    /// An edge set fails the strip preconditions.
    BadStrip { e: usize, error: StripError },
    /// An edge set has vertices on no rung.
    StripNotCovered { e: usize, uncovered: VertexSet },
    /// Edge between the sets of two disjoint J-edges.
    DisjointEdgesTouch { e1: usize, e2: usize, witness: (usize, usize) },
    /// Missing edge inside the required complete pair at a shared J-vertex.
    SharedHubIncomplete { e1: usize, e2: usize, witness: (usize, usize) },
    /// Edge between two sets sharing a J-vertex, outside the hub core.
    SharedHubStrayEdge { e1: usize, e2: usize, witness: (usize, usize) },
}

/// The five structural conditions, in definition order; first failure wins.
pub fn validate_jstrip(g: &Graph, sys: &JStripSystem) -> Result<(), JStripFailure> {
    let ne = sys.j.edges().len();
    for e1 in 0..ne {
        for e2 in e1 + 1..ne {
            let shared = sys.m_edge[e1].intersection(sys.m_edge[e2]);
            if let Some(w) = shared.min() {
                return Err(JStripFailure::EdgeSetsOverlap { e1, e2, witness: w });
            }
        }
    }
    for u in 0..sys.j.n() {
        let mut incident = VertexSet::EMPTY;
        for (idx, &(x, y)) in sys.j.edges().iter().enumerate() {
            if x == u || y == u {
                incident = incident.union(sys.m_edge[idx]);
            }
        }
        if let Some(w) = sys.m_vertex[u].difference(incident).min() {
            return Err(JStripFailure::HubNotCovered { u, witness: w });
        }
    }
    for e in 0..ne {
        match validate_strip(g, &sys.strip_of_edge(e), false) {
            Err(error) => return Err(JStripFailure::BadStrip { e, error }),
            Ok(StripCheck::Uncovered(uncovered)) => {
                return Err(JStripFailure::StripNotCovered { e, uncovered })
            }
            Ok(StripCheck::Covered) => {}
        }
    }
    for e1 in 0..ne {
        for e2 in e1 + 1..ne {
            let (u1, v1) = sys.j.edges()[e1];
            let (u2, v2) = sys.j.edges()[e2];
            let shared = [u1, v1]
                .iter()
                .find(|&&x| x == u2 || x == v2)
                .copied();
            match shared {
                None => {
                    if let Some(w) = first_edge_between(g, sys.m_edge[e1], sys.m_edge[e2]) {
                        return Err(JStripFailure::DisjointEdgesTouch { e1, e2, witness: w });
                    }
                }
                Some(u) => {
                    let core1 = sys.m_edge[e1].intersection(sys.m_vertex[u]);
                    let core2 = sys.m_edge[e2].intersection(sys.m_vertex[u]);
                    for x in sys.m_edge[e1].iter() {
                        for y in sys.m_edge[e2].iter() {
                            let in_core = core1.contains(x) && core2.contains(y);
                            let adj = g.has_edge(x, y);
                            if in_core && !adj {
                                return Err(JStripFailure::SharedHubIncomplete {
                                    e1,
                                    e2,
                                    witness: (x, y),
                                });
                            }
                            if !in_core && adj {
                                return Err(JStripFailure::SharedHubStrayEdge {
                                    e1,
                                    e2,
                                    witness: (x, y),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn first_edge_between(g: &Graph, xs: VertexSet, ys: VertexSet) -> Option<(usize, usize)> {
    for x in xs.iter() {
        if let Some(y) = g.neighbours(x).intersection(ys).min() {
            return Some((x, y));
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct CrossEdgeContext {
    pub system: JStripSystem,
    pub a: usize,
    pub b: usize,
    /// Leaf vertices of J whose hubs attach to `a`.
    pub alpha: VertexSet,
    /// Leaf vertices of J whose hubs attach to `b`.
    pub beta: VertexSet,
    /// Set only by searches whose exhaustive certification completed.
    pub certified_optimal: bool,
}

impl CrossEdgeContext {
    pub fn vertex_union(&self) -> VertexSet {
        self.system.vertex_union()
    }

    /// Common neighbours of the two special vertices.
    pub fn common_neighbours(&self, g: &Graph) -> VertexSet {
        g.neighbours(self.a).intersection(g.neighbours(self.b))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "system": self.system.to_json(),
            "a": self.a,
            "b": self.b,
            "alpha": self.alpha.to_vec(),
            "beta": self.beta.to_vec(),
            "certified_optimal": self.certified_optimal,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossEdgeFailure {
    /// α, β must partition the leaves of J exactly.
    PartitionMismatch,
    NotAnEdge,
    TooFewJVertices,
    DegreeTwoJVertex { v: usize },
    /// Some J-vertex sees two leaves on the same side.
    LeafQuotaExceeded { s: usize, in_alpha: bool },
    /// a or b occurs inside an edge set.
    SpecialVertexInSystem { vertex: usize, e: usize },
    /// a (resp. b) misses a hub vertex it should be complete to.
    MissingHubEdge { special: usize, witness: usize },
    /// a (resp. b) has a neighbour in V(M) outside its hub union.
    StrayHubEdge { special: usize, witness: usize },
}

/// The four cross-edge conditions, checked in definition order.
pub fn validate_cross_edge(g: &Graph, ctx: &CrossEdgeContext) -> Result<(), CrossEdgeFailure> {
    let sys = &ctx.system;
    let leaves: VertexSet = sys.j.leaves().into_iter().collect();
    if ctx.alpha.intersects(ctx.beta) || ctx.alpha.union(ctx.beta) != leaves {
        return Err(CrossEdgeFailure::PartitionMismatch);
    }
    if ctx.a == ctx.b || ctx.a >= g.n() || ctx.b >= g.n() || !g.has_edge(ctx.a, ctx.b) {
        return Err(CrossEdgeFailure::NotAnEdge);
    }
    if sys.j.n() < 3 {
        return Err(CrossEdgeFailure::TooFewJVertices);
    }
    for v in 0..sys.j.n() {
        if sys.j.degree(v) == 2 {
            return Err(CrossEdgeFailure::DegreeTwoJVertex { v });
        }
    }
    for s in 0..sys.j.n() {
        let nbrs: VertexSet = sys.j.neighbours(s).iter().copied().collect();
        if nbrs.intersection(ctx.alpha).len() > 1 {
            return Err(CrossEdgeFailure::LeafQuotaExceeded { s, in_alpha: true });
        }
        if nbrs.intersection(ctx.beta).len() > 1 {
            return Err(CrossEdgeFailure::LeafQuotaExceeded { s, in_alpha: false });
        }
    }
    for (e, m) in sys.m_edge.iter().enumerate() {
        for special in [ctx.a, ctx.b] {
            if m.contains(special) {
                return Err(CrossEdgeFailure::SpecialVertexInSystem { vertex: special, e });
            }
        }
    }
    let vm = sys.vertex_union();
    for (special, side) in [(ctx.a, ctx.alpha), (ctx.b, ctx.beta)] {
        let hub = sys.hub_union(side);
        let seen = g.neighbours(special).intersection(vm);
        if let Some(w) = hub.difference(seen).min() {
            return Err(CrossEdgeFailure::MissingHubEdge { special, witness: w });
        }
        if let Some(w) = seen.difference(hub).min() {
            return Err(CrossEdgeFailure::StrayHubEdge { special, witness: w });
        }
    }
    Ok(())
}

/// X must live inside V(M) ∪ {a, b}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutsideDomain(pub VertexSet);

/// The three-clause locality test: X inside one edge set, inside one hub, or
/// one special vertex plus part of a matching leaf hub on its own side.
pub fn is_local(x: VertexSet, ctx: &CrossEdgeContext) -> Result<bool, OutsideDomain> {
    let sys = &ctx.system;
    let domain = sys.vertex_union().with(ctx.a).with(ctx.b);
    let stray = x.difference(domain);
    if !stray.is_empty() {
        return Err(OutsideDomain(stray));
    }
    if sys.m_edge.iter().any(|m| x.is_subset_of(*m)) {
        return Ok(true);
    }
    if sys.m_vertex.iter().any(|m| x.is_subset_of(*m)) {
        return Ok(true);
    }
    let has_a = x.contains(ctx.a);
    let has_b = x.contains(ctx.b);
    if has_a && !has_b {
        let rest = x.without(ctx.a);
        if ctx.alpha.iter().any(|u| rest.is_subset_of(sys.m_vertex[u])) {
            return Ok(true);
        }
    }
    if has_b && !has_a {
        let rest = x.without(ctx.b);
        if ctx.beta.iter().any(|u| rest.is_subset_of(sys.m_vertex[u])) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// First (by vertex order) two-element non-local subset of X. None when X is
/// local or contains both special vertices; a valid context guarantees a pair
/// exists otherwise.
pub fn nonlocal_pair(
    x: VertexSet,
    ctx: &CrossEdgeContext,
) -> Result<Option<(usize, usize)>, OutsideDomain> {
    if is_local(x, ctx)? || (x.contains(ctx.a) && x.contains(ctx.b)) {
        return Ok(None);
    }
    let verts = x.to_vec();
    for (i, &p) in verts.iter().enumerate() {
        for &q in &verts[i + 1..] {
            if !is_local(VertexSet::singleton(p).with(q), ctx)? {
                return Ok(Some((p, q)));
            }
        }
    }
    Ok(None)
}

/// The shape of a tree: branch vertices (degree ≠ 2) joined by an edge per
/// branch. `branch_vertex[j]` is the original vertex behind shape vertex `j`;
/// `branch_edges[i]` lists the tree's edge indices along shape edge `i`.
#[derive(Clone, Debug)]
pub struct Shape {
    pub j: Tree,
    pub branch_vertex: Vec<usize>,
    pub branch_edges: Vec<Vec<usize>>,
}

pub fn shape_of(t: &Tree) -> Shape {
    let branch_vertex: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) != 2).collect();
    let id_of = |v: usize| branch_vertex.binary_search(&v).ok();
    let mut j_edges = Vec::new();
    let mut branches = Vec::new();
    for &u in &branch_vertex {
        for &first in t.neighbours(u) {
            // Walk away from u through degree-2 vertices to the far branch end.
            let mut prev = u;
            let mut cur = first;
            let mut edges = vec![t.edge_index(u, first).unwrap()];
            while t.degree(cur) == 2 {
                let next = *t
                    .neighbours(cur)
                    .iter()
                    .find(|&&w| w != prev)
                    .unwrap();
                edges.push(t.edge_index(cur, next).unwrap());
                prev = cur;
                cur = next;
            }
            if u < cur {
                j_edges.push((id_of(u).unwrap(), id_of(cur).unwrap()));
                branches.push(edges);
            }
        }
    }
    let j = Tree::new(branch_vertex.len(), &j_edges).expect("branch graph of a tree is a tree");
    let mut branch_edges = vec![Vec::new(); j_edges.len()];
    for (&(u, v), edges) in j_edges.iter().zip(branches) {
        branch_edges[j.edge_index(u, v).unwrap()] = edges;
    }
    Shape {
        j,
        branch_vertex,
        branch_edges,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeLineGraphError {
    TooFewVertices,
    TooFewLeaves,
    /// More than one component of T−v misses the given side.
    UnbalancedVertexCut { vertex: usize, side_a: bool },
}

/// The built graph plus the strip system it induces. Vertex `i` stands for
/// `tree.edges()[i]`; the two special vertices come last.
#[derive(Clone, Debug)]
pub struct TreeLineGraph {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    pub context: CrossEdgeContext,
    /// Original tree vertex behind each J vertex.
    pub branch_vertex: Vec<usize>,
}

/// Line graph of `t` plus two vertices a, b joined to each other, with a
/// complete to the leaf edges on side A and b to those on side B.
/// The returned context (shape of t; branch edge sets; incident-edge hubs) is
/// a seed: it always satisfies the five system conditions, but the cross-edge
/// conditions and even-hole-freeness depend on the bipartition, which
/// [`assess_bipartition`] grades separately.
pub fn build_extended_tree_line_graph(
    t: &Tree,
    side_a: VertexSet,
) -> Result<TreeLineGraph, TreeLineGraphError> {
    if t.n() < 3 {
        return Err(TreeLineGraphError::TooFewVertices);
    }
    let leaves = t.leaves();
    if leaves.len() < 3 {
        return Err(TreeLineGraphError::TooFewLeaves);
    }
    let full = VertexSet::full(t.n());
    let side_b = full.difference(side_a);
    // At most one component of T−v may miss either side.
    let t_graph = Graph::from_edges(t.n(), t.edges());
    for v in 0..t.n() {
        let rest = full.without(v);
        for (side, is_a) in [(side_a, true), (side_b, false)] {
            let blank = t_graph
                .components_within(rest)
                .into_iter()
                .filter(|c| !c.intersects(side))
                .count();
            if blank > 1 {
                return Err(TreeLineGraphError::UnbalancedVertexCut { vertex: v, side_a: is_a });
            }
        }
    }

    let m = t.edges().len();
    let a = m;
    let b = m + 1;
    let mut graph = Graph::empty(m + 2);
    for i in 0..m {
        for k in i + 1..m {
            let (u1, v1) = t.edges()[i];
            let (u2, v2) = t.edges()[k];
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                graph.add_edge(i, k);
            }
        }
    }
    graph.add_edge(a, b);
    for &leaf in &leaves {
        let other = t.neighbours(leaf)[0];
        let edge = t.edge_index(leaf, other).unwrap();
        if side_a.contains(leaf) {
            graph.add_edge(a, edge);
        } else {
            graph.add_edge(b, edge);
        }
    }

    let shape = shape_of(t);
    let m_edge: Vec<VertexSet> = shape
        .branch_edges
        .iter()
        .map(|edges| edges.iter().copied().collect())
        .collect();
    let m_vertex: Vec<VertexSet> = shape
        .branch_vertex
        .iter()
        .map(|&u| {
            (0..m)
                .filter(|&i| t.edges()[i].0 == u || t.edges()[i].1 == u)
                .collect()
        })
        .collect();
    let mut alpha = VertexSet::EMPTY;
    let mut beta = VertexSet::EMPTY;
    for (j_id, &tv) in shape.branch_vertex.iter().enumerate() {
        if t.degree(tv) == 1 {
            if side_a.contains(tv) {
                alpha.insert(j_id);
            } else {
                beta.insert(j_id);
            }
        }
    }
    Ok(TreeLineGraph {
        graph,
        a,
        b,
        context: CrossEdgeContext {
            system: JStripSystem {
                j: shape.j,
                m_edge,
                m_vertex,
            },
            a,
            b,
            alpha,
            beta,
            certified_optimal: false,
        },
        branch_vertex: shape.branch_vertex,
    })
}

/// How a leaf bipartition behaves beyond the builder's own preconditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartitionQuality {
    /// Leaves on one side pairwise at even distance, cross pairs odd. Exactly
    /// the condition under which the built graph has no even hole: every hole
    /// uses a special vertex, and its length is a leaf distance plus one (one
    /// special vertex) or plus two (both).
    pub parity_ok: bool,
    /// No tree vertex starts branches to two same-side leaves, so the seed
    /// context meets the per-vertex leaf quota.
    pub leaf_quota_ok: bool,
}

impl BipartitionQuality {
    pub fn both(&self) -> bool {
        self.parity_ok && self.leaf_quota_ok
    }
}

pub fn assess_bipartition(t: &Tree, side_a: VertexSet) -> BipartitionQuality {
    let dist = t.distances();
    let leaves = t.leaves();
    let mut parity_ok = true;
    for (i, &u) in leaves.iter().enumerate() {
        for &v in &leaves[i + 1..] {
            let same = side_a.contains(u) == side_a.contains(v);
            if (dist[u][v] % 2 == 0) != same {
                parity_ok = false;
            }
        }
    }
    let shape = shape_of(t);
    let mut leaf_quota_ok = true;
    for s in 0..shape.j.n() {
        let mut in_a = 0;
        let mut in_b = 0;
        for &w in shape.j.neighbours(s) {
            let tv = shape.branch_vertex[w];
            if t.degree(tv) == 1 {
                if side_a.contains(tv) {
                    in_a += 1;
                } else {
                    in_b += 1;
                }
            }
        }
        if in_a > 1 || in_b > 1 {
            leaf_quota_ok = false;
        }
    }
    BipartitionQuality {
        parity_ok,
        leaf_quota_ok,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::detect::{find_extended_near_prism, is_even_hole_free};

    fn spider_legs_two() -> Tree {
        // Centre 0, legs 0-1-2, 0-3-4, 0-5-6.
        Tree::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn shape_of_spider() {
        let t = spider_legs_two();
        let shape = shape_of(&t);
        assert_eq!(shape.branch_vertex, vec![0, 2, 4, 6]);
        assert_eq!(shape.j.edges(), &[(0, 1), (0, 2), (0, 3)]);
        for edges in &shape.branch_edges {
            assert_eq!(edges.len(), 2);
        }
    }

    #[test]
    fn spider_builds_even_hole_free_but_fails_leaf_quota() {
        let t = spider_legs_two();
        // Proper two-colouring puts every leaf on the centre's side.
        let side_a = VertexSet::singleton(0).with(2).with(4).with(6);
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        assert_eq!(built.graph.n(), 8);
        assert!(is_even_hole_free(&built.graph));
        assert_eq!(validate_jstrip(&built.graph, &built.context.system), Ok(()));
        // The centre reaches all three leaves, so one side holds two of them.
        assert_eq!(
            validate_cross_edge(&built.graph, &built.context),
            Err(CrossEdgeFailure::LeafQuotaExceeded { s: 0, in_alpha: true })
        );
        let q = assess_bipartition(&t, side_a);
        assert!(q.parity_ok && !q.leaf_quota_ok);
    }

    fn double_star() -> Tree {
        // Centres 0,1; leaves 2,3 at 0 and 4,5 at 1.
        Tree::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn double_star_cross_split_contains_extended_near_prism() {
        let t = double_star();
        // One leaf of each centre per side.
        let side_a = VertexSet::singleton(2).with(4);
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        assert_eq!(built.graph.n(), 7);
        assert_eq!(validate_jstrip(&built.graph, &built.context.system), Ok(()));
        assert_eq!(validate_cross_edge(&built.graph, &built.context), Ok(()));
        assert!(find_extended_near_prism(&built.graph, Some((built.a, built.b))).is_some());
        // ... at the price of a four-hole through the shared middle edge.
        assert!(!is_even_hole_free(&built.graph));
        let q = assess_bipartition(&t, side_a);
        assert!(!q.parity_ok && q.leaf_quota_ok);
    }

    #[test]
    fn double_star_proper_colouring_is_rejected_by_the_cut_condition() {
        let t = double_star();
        // Parities alternate, yet both leaves under centre 0 land on side B:
        // removing 0 leaves two components with no side-A vertex.
        let side_a = VertexSet::singleton(0).with(4).with(5);
        assert_eq!(
            build_extended_tree_line_graph(&t, side_a).unwrap_err(),
            TreeLineGraphError::UnbalancedVertexCut { vertex: 0, side_a: true }
        );
        let q = assess_bipartition(&t, side_a);
        assert!(q.parity_ok && !q.leaf_quota_ok);
    }

    pub(crate) fn balanced_tree() -> (Tree, VertexSet) {
        // 0 and 1 adjacent; 0 carries leaf 2 and the branch 0-3-4;
        // 1 carries the branch 1-5-6 and leaf 7. Leaf split {2,6} | {4,7}
        // keeps same-side leaf distances even and cross distances odd.
        let t = Tree::new(
            8,
            &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 5), (5, 6), (1, 7)],
        )
        .unwrap();
        (t, VertexSet::singleton(1).with(2).with(3).with(6))
    }

    #[test]
    fn balanced_instance_passes_everything() {
        let (t, side_a) = balanced_tree();
        let q = assess_bipartition(&t, side_a);
        assert!(q.both());
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        assert_eq!(built.graph.n(), 9);
        assert!(is_even_hole_free(&built.graph));
        assert_eq!(validate_jstrip(&built.graph, &built.context.system), Ok(()));
        assert_eq!(validate_cross_edge(&built.graph, &built.context), Ok(()));
        assert!(find_extended_near_prism(&built.graph, Some((built.a, built.b))).is_some());

        let ctx = &built.context;
        assert_eq!(ctx.system.j.edges(), &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let sets: Vec<Vec<usize>> = ctx.system.m_edge.iter().map(|m| m.to_vec()).collect();
        assert_eq!(
            sets,
            vec![vec![0], vec![1], vec![2, 5], vec![3, 6], vec![4]]
        );
        assert_eq!(ctx.alpha.to_vec(), vec![2, 4]);
        assert_eq!(ctx.beta.to_vec(), vec![3, 5]);
        assert_eq!(built.graph.neighbours(built.a).to_vec(), vec![1, 6, 8]);
        assert_eq!(built.graph.neighbours(built.b).to_vec(), vec![4, 5, 7]);
    }

    #[test]
    fn builder_precondition_errors() {
        let path = Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            build_extended_tree_line_graph(&path, VertexSet::singleton(0)).unwrap_err(),
            TreeLineGraphError::TooFewLeaves
        );
        let tiny = Tree::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            build_extended_tree_line_graph(&tiny, VertexSet::EMPTY).unwrap_err(),
            TreeLineGraphError::TooFewVertices
        );
        // Short spider with both short-leg leaves on one side: removing the
        // centre leaves two components with no A-side vertex.
        let t = Tree::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let side_a = VertexSet::singleton(3).with(4);
        assert_eq!(
            build_extended_tree_line_graph(&t, side_a).unwrap_err(),
            TreeLineGraphError::UnbalancedVertexCut { vertex: 0, side_a: true }
        );
    }

    #[test]
    fn moving_a_vertex_between_edge_sets_fails_validation() {
        let (t, side_a) = balanced_tree();
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        let mut sys = built.context.system.clone();
        // Vertex 5 belongs to the branch set {2,5}; push it into {3,6}. Its
        // hub then sits in no incident edge set.
        sys.m_edge[2].remove(5);
        sys.m_edge[3].insert(5);
        assert_eq!(
            validate_jstrip(&built.graph, &sys),
            Err(JStripFailure::HubNotCovered { u: 3, witness: 5 })
        );
    }

    #[test]
    fn locality_clauses() {
        let (t, side_a) = balanced_tree();
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        let ctx = &built.context;
        // Inside one branch set.
        assert_eq!(is_local(ctx.system.m_edge[2], ctx), Ok(true));
        // The two special vertices together are never local.
        assert_eq!(
            is_local(VertexSet::singleton(ctx.a).with(ctx.b), ctx),
            Ok(false)
        );
        // a plus part of the hub of an α-leaf.
        let alpha_leaf = ctx.alpha.min().unwrap();
        let x = VertexSet::singleton(ctx.a).union(ctx.system.m_vertex[alpha_leaf]);
        assert_eq!(is_local(x, ctx), Ok(true));
        // a plus a β hub is not.
        let beta_leaf = ctx.beta.min().unwrap();
        let y = VertexSet::singleton(ctx.a).union(ctx.system.m_vertex[beta_leaf]);
        assert_eq!(is_local(y, ctx), Ok(false));
        // a next to an arbitrary hub member: vertex 0 is in the hub of the
        // non-leaf 1, not of any α leaf.
        assert_eq!(is_local(VertexSet::singleton(0).with(ctx.a), ctx), Ok(false));
        // Vertices outside V(M) ∪ {a, b} are reported, not coerced.
        assert_eq!(
            is_local(VertexSet::singleton(20), ctx),
            Err(OutsideDomain(VertexSet::singleton(20)))
        );
    }

    #[test]
    fn nonlocal_pair_finds_disjoint_branch_pair() {
        let (t, side_a) = balanced_tree();
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        let ctx = &built.context;
        // Vertex 1 sits in branch set {1} (edge 0-2 of J), vertex 3 in {3,6}
        // (edge 1-4): the J-edges are disjoint, so the pair is not local.
        let x = VertexSet::singleton(1).with(3).with(0);
        assert_eq!(nonlocal_pair(x, ctx), Ok(Some((1, 3))));
        // Any subset of a hub is local, so no pair exists.
        assert_eq!(nonlocal_pair(ctx.system.m_vertex[0], ctx), Ok(None));
        // Both specials present: not handled here.
        let both = VertexSet::singleton(ctx.a).with(ctx.b).with(1).with(3);
        assert_eq!(nonlocal_pair(both, ctx), Ok(None));
    }

    #[test]
    fn locality_is_downward_monotone_on_the_balanced_instance() {
        let (t, side_a) = balanced_tree();
        let built = build_extended_tree_line_graph(&t, side_a).unwrap();
        let ctx = &built.context;
        // All subsets of a few local templates stay local.
        let templates = [
            ctx.system.m_edge[3],
            ctx.system.m_vertex[1],
            VertexSet::singleton(ctx.a).union(ctx.system.m_vertex[ctx.alpha.min().unwrap()]),
        ];
        for tpl in templates {
            let members: Vec<usize> = tpl.to_vec();
            for mask in 0..(1u32 << members.len()) {
                let sub: VertexSet = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                assert_eq!(is_local(sub, ctx), Ok(true));
            }
        }
    }
}
