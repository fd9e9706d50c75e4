//! Checkers for what a maximal cross-edge system forces on the rest of the
//! graph: where outside components may attach, how the common neighbours of
//! the special pair behave, and the sharpened picture when an end of the
//! cross-edge is splendid. Each checker recomputes its own data from the
//! graph and reports pass/fail rather than assuming anything.
//!
//! A failed check on a context that is only locally maximal is not evidence
//! of anything; the `caveat` flag marks that situation on every report.

use serde_json::{json, Value};

use crate::cutsets::{is_splendid, SplendidVerdict};
use crate::detect::is_even_hole_free;
use crate::graph::{Graph, Path, VertexSet};
use crate::strips::jstrip::{is_local, CrossEdgeContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallSubgraphError {
    NotConnected,
    /// F meets Z, V(M) or the special pair; carries the overlap.
    Overlap(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalityVerdict {
    /// Empty F says nothing.
    Inapplicable,
    Checked(SmallSubgraphCheck),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallSubgraphCheck {
    /// Members of V(M) with a neighbour in F.
    pub x: VertexSet,
    /// Whether both a and b have a neighbour in F.
    pub both_ends: bool,
    pub ok: bool,
    /// The hosting J-leaf in the both-ends case.
    pub leaf: Option<usize>,
    pub caveat: bool,
}

fn j_leaves(ctx: &CrossEdgeContext) -> Vec<usize> {
    (0..ctx.system.j.n())
        .filter(|&v| ctx.system.j.degree(v) == 1)
        .collect()
}

fn hosting_leaf(ctx: &CrossEdgeContext, x: VertexSet) -> Option<usize> {
    j_leaves(ctx)
        .into_iter()
        .find(|&t| x.is_subset_of(ctx.system.m_vertex[t]))
}

/// Decide where a connected outside subgraph F attaches to V(M): local when
/// F misses one of a,b, inside a single leaf hub when F sees both.
pub fn classify_small_subgraph(
    g: &Graph,
    ctx: &CrossEdgeContext,
    f: VertexSet,
) -> Result<LocalityVerdict, SmallSubgraphError> {
    if f.is_empty() {
        return Ok(LocalityVerdict::Inapplicable);
    }
    let z = ctx.common_neighbours(g);
    let forbidden = z
        .union(ctx.vertex_union())
        .with(ctx.a)
        .with(ctx.b)
        .intersection(f);
    if !forbidden.is_empty() {
        return Err(SmallSubgraphError::Overlap(forbidden));
    }
    if g.components_within(f).len() != 1 {
        return Err(SmallSubgraphError::NotConnected);
    }
    let x = g.attachment(f, ctx.vertex_union());
    let both_ends = g.neighbours(ctx.a).intersects(f) && g.neighbours(ctx.b).intersects(f);
    let (ok, leaf) = if both_ends {
        let leaf = hosting_leaf(ctx, x);
        (leaf.is_some(), leaf)
    } else {
        (is_local(x, ctx).expect("x lies in V(M)"), None)
    };
    Ok(LocalityVerdict::Checked(SmallSubgraphCheck {
        x,
        both_ends,
        ok,
        leaf,
        caveat: !ctx.certified_optimal,
    }))
}

/// Path from y avoiding all neighbours of s except y itself, reaching a
/// V(M)-vertex outside N[s].
fn s_external(g: &Graph, s: usize, vm: VertexSet, y: usize) -> bool {
    let allowed = g.vertices().difference(g.neighbours(s)).without(s);
    let target = vm.difference(g.closed_neighbours(s));
    let mut seen = g.neighbours(y).intersection(allowed);
    loop {
        if seen.intersects(target) {
            return true;
        }
        let grown = seen.union(g.neighbourhood_of_set(seen).intersection(allowed));
        if grown == seen {
            return false;
        }
        seen = grown;
    }
}

/// Common neighbours of the special pair that can escape past both of their
/// closed neighbourhoods into V(M).
pub fn major_vertices(g: &Graph, ctx: &CrossEdgeContext) -> VertexSet {
    let vm = ctx.vertex_union();
    ctx.common_neighbours(g)
        .iter()
        .filter(|&y| s_external(g, ctx.a, vm, y) && s_external(g, ctx.b, vm, y))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueCheck {
    pub set: VertexSet,
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
    pub caveat: bool,
}

impl CliqueCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "set": self.set.to_vec(),
            "ok": self.ok,
            "witness": self.witness.map(|(u, v)| vec![u, v]),
            "caveat": self.caveat,
        })
    }
}

/// The major vertices must be pairwise adjacent.
pub fn check_major_clique(g: &Graph, ctx: &CrossEdgeContext) -> CliqueCheck {
    let set = major_vertices(g, ctx);
    let mut witness = None;
    'scan: for u in set.iter() {
        for v in set.iter() {
            if u < v && !g.has_edge(u, v) {
                witness = Some((u, v));
                break 'scan;
            }
        }
    }
    CliqueCheck {
        set,
        ok: witness.is_none(),
        witness,
        caveat: !ctx.certified_optimal,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCheck {
    pub component: VertexSet,
    pub x: VertexSet,
    pub ok: bool,
    pub leaf: Option<usize>,
    pub caveat: bool,
}

impl ComponentCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "component": self.component.to_vec(),
            "x": self.x.to_vec(),
            "ok": self.ok,
            "leaf": self.leaf,
            "caveat": self.caveat,
        })
    }
}

/// Outside components seen by a non-major common neighbour must attach
/// inside a single leaf hub. One entry per component that qualifies.
pub fn check_funnies(g: &Graph, ctx: &CrossEdgeContext) -> Vec<ComponentCheck> {
    let vm = ctx.vertex_union();
    let z = ctx.common_neighbours(g);
    let zy = z.difference(major_vertices(g, ctx));
    let rest = g
        .vertices()
        .difference(vm)
        .difference(z)
        .without(ctx.a)
        .without(ctx.b);
    let caveat = !ctx.certified_optimal;
    g.components_within(rest)
        .into_iter()
        .filter(|&c| g.neighbourhood_of_set(c).intersects(zy))
        .map(|c| {
            let x = g.attachment(c, vm);
            let leaf = hosting_leaf(ctx, x);
            ComponentCheck {
                component: c,
                x,
                ok: leaf.is_some(),
                leaf,
                caveat,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallComponentCheck {
    pub component: VertexSet,
    pub x: VertexSet,
    /// a has no neighbour in the component.
    pub a_clear: bool,
    /// b or a non-major common neighbour sees the component.
    pub touches: bool,
    pub containment_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementReport {
    pub beta_shadow_ok: bool,
    pub beta_shadow_witness: Option<usize>,
    pub alpha_edges_ok: bool,
    /// (J-edge index, vertex shared by both end hubs).
    pub alpha_edge_witness: Option<(usize, usize)>,
    pub components: Vec<SmallComponentCheck>,
    pub caveat: bool,
}

impl RefinementReport {
    pub fn all_ok(&self) -> bool {
        self.beta_shadow_ok
            && self.alpha_edges_ok
            && self
                .components
                .iter()
                .all(|c| c.a_clear && c.containment_ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta_shadow_ok": self.beta_shadow_ok,
            "beta_shadow_witness": self.beta_shadow_witness,
            "alpha_edges_ok": self.alpha_edges_ok,
            "alpha_edge_witness": self.alpha_edge_witness.map(|(e, v)| vec![e, v]),
            "components": self.components.iter().map(|c| json!({
                "component": c.component.to_vec(),
                "x": c.x.to_vec(),
                "a_clear": c.a_clear,
                "touches": c.touches,
                "containment_ok": c.containment_ok,
            })).collect::<Vec<_>>(),
            "caveat": self.caveat,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplendidRefinements {
    /// The end a of the cross-edge is not splendid; carries the verdict.
    Inapplicable(SplendidVerdict),
    Checked(RefinementReport),
}

fn beta_hub_union(ctx: &CrossEdgeContext) -> VertexSet {
    ctx.beta
        .iter()
        .fold(VertexSet::EMPTY, |acc, t| acc.union(ctx.system.m_vertex[t]))
}

/// V(M)-vertices seen by non-major common neighbours must sit in b-side
/// leaf hubs.
fn beta_shadow(g: &Graph, ctx: &CrossEdgeContext, zy: VertexSet) -> (bool, Option<usize>) {
    let shadow = g.attachment(zy, ctx.vertex_union());
    let stray = shadow.difference(beta_hub_union(ctx));
    (stray.is_empty(), stray.iter().next())
}

/// Edges of J ending in an a-side leaf must have disjoint end hubs.
fn alpha_edge_overlap(ctx: &CrossEdgeContext) -> Option<(usize, usize)> {
    for (ei, &(s, t)) in ctx.system.j.edges().iter().enumerate() {
        for (hub_s, hub_t) in [(s, t), (t, s)] {
            if ctx.alpha.contains(hub_t) {
                let shared = ctx.system.m_vertex[hub_s].intersection(ctx.system.m_vertex[hub_t]);
                if let Some(v) = shared.iter().next() {
                    return Some((ei, v));
                }
            }
        }
    }
    None
}

/// The sharpened attachment picture available when a is splendid: a sees no
/// outside component, non-major common neighbours shadow only b-side leaf
/// hubs, a-side branches have clean ends, and each outside component attaches
/// inside one carrier or one hub, pushed to a b-side leaf hub as soon as b or
/// a non-major common neighbour sees the component.
pub fn check_splendid_refinements(g: &Graph, ctx: &CrossEdgeContext) -> SplendidRefinements {
    let verdict = is_splendid(g, ctx.a);
    if !verdict.ok {
        return SplendidRefinements::Inapplicable(verdict);
    }
    let vm = ctx.vertex_union();
    let z = ctx.common_neighbours(g);
    let zy = z.difference(major_vertices(g, ctx));
    let (beta_shadow_ok, beta_shadow_witness) = beta_shadow(g, ctx, zy);
    let alpha_edge_witness = alpha_edge_overlap(ctx);
    let rest = g
        .vertices()
        .difference(vm)
        .difference(z)
        .without(ctx.a)
        .without(ctx.b);
    let components = g
        .components_within(rest)
        .into_iter()
        .map(|c| {
            let x = g.attachment(c, vm);
            let reach = g.neighbourhood_of_set(c);
            let touches = reach.contains(ctx.b) || reach.intersects(zy);
            let containment_ok = if touches {
                ctx.beta
                    .iter()
                    .any(|t| x.is_subset_of(ctx.system.m_vertex[t]))
            } else {
                ctx.system.m_edge.iter().any(|me| x.is_subset_of(*me))
                    || (0..ctx.system.j.n())
                        .filter(|jv| !ctx.alpha.contains(*jv))
                        .any(|jv| x.is_subset_of(ctx.system.m_vertex[jv]))
            };
            SmallComponentCheck {
                component: c,
                x,
                a_clear: !g.neighbours(ctx.a).intersects(c),
                touches,
                containment_ok,
            }
        })
        .collect();
    SplendidRefinements::Checked(RefinementReport {
        beta_shadow_ok,
        beta_shadow_witness,
        alpha_edges_ok: alpha_edge_witness.is_none(),
        alpha_edge_witness,
        components,
        caveat: !ctx.certified_optimal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewPyrPrecondition {
    NotAHole,
    SpecialOnHole,
    SpecialsAdjacent,
    TooFewNeighbours,
    EndsNotCovered,
    HasEvenHole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewPyrCheck {
    Inapplicable(SkewPyrPrecondition),
    Checked {
        ok: bool,
        a_trace: VertexSet,
        b_trace: VertexSet,
    },
}

/// Two nonadjacent vertices off a hole, each with three or more neighbours
/// on it and both complete to one designated hole edge, must occupy the two
/// three-vertex windows around that edge, one each.
pub fn check_skewpyr(g: &Graph, hole: &Path, a: usize, b: usize) -> SkewPyrCheck {
    use SkewPyrPrecondition::*;
    if !hole.is_hole_of(g) {
        return SkewPyrCheck::Inapplicable(NotAHole);
    }
    let hs = &hole.0;
    let n = hs.len();
    let hset: VertexSet = hs.iter().copied().collect();
    if a == b || hset.contains(a) || hset.contains(b) {
        return SkewPyrCheck::Inapplicable(SpecialOnHole);
    }
    if g.has_edge(a, b) {
        return SkewPyrCheck::Inapplicable(SpecialsAdjacent);
    }
    let a_trace = g.neighbours(a).intersection(hset);
    let b_trace = g.neighbours(b).intersection(hset);
    if a_trace.len() < 3 || b_trace.len() < 3 {
        return SkewPyrCheck::Inapplicable(TooFewNeighbours);
    }
    let ends: VertexSet = [hs[0], hs[n - 1]].into_iter().collect();
    if !ends.is_subset_of(a_trace) || !ends.is_subset_of(b_trace) {
        return SkewPyrCheck::Inapplicable(EndsNotCovered);
    }
    if !is_even_hole_free(g) {
        return SkewPyrCheck::Inapplicable(HasEvenHole);
    }
    let low: VertexSet = [hs[n - 2], hs[n - 1], hs[0]].into_iter().collect();
    let high: VertexSet = [hs[n - 1], hs[0], hs[1]].into_iter().collect();
    let ok = (a_trace == low && b_trace == high) || (a_trace == high && b_trace == low);
    SkewPyrCheck::Checked { ok, a_trace, b_trace }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::Budget;
    use crate::strips::jstrip::tests::balanced_tree;
    use crate::strips::jstrip::{build_extended_tree_line_graph, TreeLineGraph};
    use crate::strips::tree_search::search_tree_strip_system;
    use crate::graph::Tree;

    fn balanced() -> TreeLineGraph {
        let (t, side_a) = balanced_tree();
        build_extended_tree_line_graph(&t, side_a).unwrap()
    }

    /// Every leaf branch of length two; the a-end comes out splendid.
    pub(crate) fn long_alpha() -> TreeLineGraph {
        let t = Tree::new(9, &[(0, 8), (8, 1), (0, 2), (2, 3), (0, 4), (1, 5), (5, 6), (1, 7)])
            .unwrap();
        let side_a: VertexSet = [0usize, 1, 3, 6].into_iter().collect();
        build_extended_tree_line_graph(&t, side_a).unwrap()
    }

    /// Length-two branches on both sides, so every leaf hub is disjoint from
    /// the opposite hub of its branch.
    fn long_both() -> TreeLineGraph {
        let t = Tree::new(
            11,
            &[
                (0, 8),
                (8, 1),
                (0, 2),
                (2, 3),
                (0, 4),
                (4, 9),
                (1, 5),
                (5, 6),
                (1, 7),
                (7, 10),
            ],
        )
        .unwrap();
        let side_a: VertexSet = [3usize, 6].into_iter().collect();
        build_extended_tree_line_graph(&t, side_a).unwrap()
    }

    fn extend(base: &TreeLineGraph, n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for (u, v) in base.graph.edges() {
            g.add_edge(u, v);
        }
        for &(u, v) in extra {
            g.add_edge(u, v);
        }
        g
    }

    fn optimal_ctx(g: &Graph, a: usize, b: usize) -> CrossEdgeContext {
        let out = search_tree_strip_system(g, a, b, Budget::UNLIMITED)
            .found()
            .unwrap();
        assert!(out.context.certified_optimal);
        out.context
    }

    #[test]
    fn pendant_attachment_is_local() {
        let built = balanced();
        let g = extend(&built, 10, &[(9, 0)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert_eq!(ctx.vertex_union(), VertexSet::full(7));
        let verdict = classify_small_subgraph(&g, &ctx, VertexSet::singleton(9)).unwrap();
        match verdict {
            LocalityVerdict::Checked(c) => {
                assert_eq!(c.x, VertexSet::singleton(0));
                assert!(!c.both_ends);
                assert!(c.ok);
                assert!(!c.caveat);
            }
            LocalityVerdict::Inapplicable => panic!("pendant should be checked"),
        }
    }

    #[test]
    fn component_touching_both_ends_lands_in_a_leaf_hub() {
        let built = balanced();
        // 9 sees a and hub vertex 1; 11 sees b; odd path between them.
        let g = extend(
            &built,
            12,
            &[(9, built.a), (9, 1), (9, 10), (10, 11), (11, built.b)],
        );
        let f: VertexSet = [9usize, 10, 11].into_iter().collect();
        let verdict = classify_small_subgraph(&g, &built.context, f).unwrap();
        match verdict {
            LocalityVerdict::Checked(c) => {
                assert!(c.both_ends);
                assert_eq!(c.x, VertexSet::singleton(1));
                assert!(c.ok);
                let leaf = c.leaf.unwrap();
                assert!(c.x.is_subset_of(built.context.system.m_vertex[leaf]));
                assert!(c.caveat, "builder context is not certified");
            }
            LocalityVerdict::Inapplicable => panic!("three-vertex F should be checked"),
        }
    }

    #[test]
    fn degenerate_small_subgraphs_are_rejected() {
        let built = balanced();
        let g = extend(&built, 11, &[(9, 0), (10, 4)]);
        let ctx = &built.context;
        assert_eq!(
            classify_small_subgraph(&g, ctx, VertexSet::EMPTY).unwrap(),
            LocalityVerdict::Inapplicable
        );
        assert_eq!(
            classify_small_subgraph(&g, ctx, VertexSet::singleton(0)),
            Err(SmallSubgraphError::Overlap(VertexSet::singleton(0)))
        );
        let split: VertexSet = [9usize, 10].into_iter().collect();
        assert_eq!(
            classify_small_subgraph(&g, ctx, split),
            Err(SmallSubgraphError::NotConnected)
        );
    }

    #[test]
    fn direct_witness_makes_a_common_neighbour_major() {
        let built = balanced();
        let g = extend(&built, 10, &[(9, built.a), (9, built.b), (9, 0)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert_eq!(ctx.common_neighbours(&g), VertexSet::singleton(9));
        assert_eq!(major_vertices(&g, &ctx), VertexSet::singleton(9));
        let clique = check_major_clique(&g, &ctx);
        assert!(clique.ok);
        assert_eq!(clique.set, VertexSet::singleton(9));
    }

    #[test]
    fn common_neighbour_without_escape_is_not_major() {
        let built = balanced();
        let g = extend(&built, 10, &[(9, built.a), (9, built.b)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert_eq!(ctx.common_neighbours(&g), VertexSet::singleton(9));
        assert_eq!(major_vertices(&g, &ctx), VertexSet::EMPTY);
    }

    #[test]
    fn nonadjacent_majors_are_reported() {
        let built = balanced();
        let both = [
            (9, built.a),
            (9, built.b),
            (9, 0),
            (10, built.a),
            (10, built.b),
            (10, 0),
        ];
        let g = extend(&built, 11, &both);
        let ctx = optimal_ctx(&g, built.a, built.b);
        let report = check_major_clique(&g, &ctx);
        assert!(!report.ok);
        assert_eq!(report.witness, Some((9, 10)));
        // Joining the pair restores the clique conclusion.
        let mut g2 = g.clone();
        g2.add_edge(9, 10);
        let ctx2 = optimal_ctx(&g2, built.a, built.b);
        let report2 = check_major_clique(&g2, &ctx2);
        assert!(report2.ok);
        assert_eq!(report2.set.len(), 2);
    }

    #[test]
    fn funnies_checks_components_seen_by_non_majors() {
        let built = balanced();
        let g = extend(&built, 11, &[(9, built.a), (9, built.b), (10, 9), (10, 1)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        let reports = check_funnies(&g, &ctx);
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.component, VertexSet::singleton(10));
        assert_eq!(r.x, VertexSet::singleton(1));
        assert!(r.ok);
        assert!(r.x.is_subset_of(ctx.system.m_vertex[r.leaf.unwrap()]));
        assert!(!r.caveat);
    }

    #[test]
    fn funnies_ignores_components_nobody_in_z_sees() {
        let built = balanced();
        let g = extend(&built, 10, &[(9, 0)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert!(check_funnies(&g, &ctx).is_empty());
    }

    #[test]
    fn refinements_need_a_splendid_end() {
        let built = balanced();
        let refinements = check_splendid_refinements(&built.graph, &built.context);
        match refinements {
            SplendidRefinements::Inapplicable(v) => {
                assert!(!v.ok);
            }
            SplendidRefinements::Checked(_) => panic!("short leaf branches spoil the a-end"),
        }
    }

    #[test]
    fn refinements_pass_on_the_long_alpha_instance() {
        let built = long_alpha();
        let ctx = optimal_ctx(&built.graph, built.a, built.b);
        match check_splendid_refinements(&built.graph, &ctx) {
            SplendidRefinements::Checked(r) => {
                assert!(r.all_ok());
                assert!(r.components.is_empty());
                assert!(!r.caveat);
            }
            SplendidRefinements::Inapplicable(v) => panic!("a should be splendid: {:?}", v),
        }
    }

    #[test]
    fn quiet_component_may_sit_in_a_carrier() {
        let built = long_alpha();
        let g = extend(&built, 11, &[(10, 1)]);
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert_eq!(ctx.vertex_union(), VertexSet::full(8));
        match check_splendid_refinements(&g, &ctx) {
            SplendidRefinements::Checked(r) => {
                assert!(r.beta_shadow_ok && r.alpha_edges_ok);
                assert_eq!(r.components.len(), 1);
                let c = &r.components[0];
                assert!(c.a_clear && !c.touches && c.containment_ok);
                assert_eq!(c.x, VertexSet::singleton(1));
            }
            SplendidRefinements::Inapplicable(v) => panic!("a should be splendid: {:?}", v),
        }
    }

    #[test]
    fn touched_component_is_pushed_to_a_b_side_leaf_hub() {
        let built = long_both();
        // 12 joins the leaf hub carrying 9 (it reaches 4 across that branch
        // and 9 inside it); 13 hangs off 12 and b and stays outside.
        let g = extend(
            &built,
            14,
            &[(12, built.b), (12, 9), (12, 4), (12, 13), (13, built.b)],
        );
        let ctx = optimal_ctx(&g, built.a, built.b);
        assert!(ctx.vertex_union().contains(12));
        assert!(!ctx.vertex_union().contains(13));
        match check_splendid_refinements(&g, &ctx) {
            SplendidRefinements::Checked(r) => {
                assert!(r.all_ok());
                assert_eq!(r.components.len(), 1);
                let c = &r.components[0];
                assert_eq!(c.component, VertexSet::singleton(13));
                assert!(c.touches);
                assert!(c.containment_ok);
                assert!(!r.caveat);
            }
            SplendidRefinements::Inapplicable(v) => panic!("a should be splendid: {:?}", v),
        }
    }

    #[test]
    fn clause_helpers_detect_violations_directly() {
        // The balanced instance has a length-one a-side branch, so that
        // branch's two hubs share their single carrier vertex.
        let built = balanced();
        let (ei, v) = alpha_edge_overlap(&built.context).unwrap();
        let (s, t) = built.context.system.j.edges()[ei];
        assert!(built.context.alpha.contains(s) || built.context.alpha.contains(t));
        assert!(built.context.system.m_edge[ei].contains(v));
        // On the long instance the hubs are clean, and a doctored shadow set
        // pointing at an a-side hub vertex is flagged with that witness.
        let long = long_alpha();
        assert_eq!(alpha_edge_overlap(&long.context), None);
        let mut g = Graph::empty(11);
        for (u, v) in long.graph.edges() {
            g.add_edge(u, v);
        }
        g.add_edge(10, 6);
        let (ok, witness) = beta_shadow(&g, &long.context, VertexSet::singleton(10));
        assert!(!ok);
        assert_eq!(witness, Some(6));
        let mut g2 = Graph::empty(11);
        for (u, v) in long.graph.edges() {
            g2.add_edge(u, v);
        }
        g2.add_edge(10, 1);
        let (ok2, _) = beta_shadow(&g2, &long.context, VertexSet::singleton(10));
        assert!(ok2);
    }

    fn skew_instance() -> Graph {
        let mut g = Graph::empty(7);
        for (u, v) in Graph::cycle(5).edges() {
            g.add_edge(u, v);
        }
        for v in [4, 0, 1] {
            g.add_edge(5, v);
        }
        for v in [3, 4, 0] {
            g.add_edge(6, v);
        }
        g
    }

    #[test]
    fn skew_pair_on_a_five_hole_occupies_both_windows() {
        let g = skew_instance();
        assert!(is_even_hole_free(&g));
        let hole = Path(vec![0, 1, 2, 3, 4]);
        match check_skewpyr(&g, &hole, 5, 6) {
            SkewPyrCheck::Checked { ok, a_trace, b_trace } => {
                assert!(ok);
                assert_eq!(a_trace, [4usize, 0, 1].into_iter().collect());
                assert_eq!(b_trace, [3usize, 4, 0].into_iter().collect());
            }
            SkewPyrCheck::Inapplicable(p) => panic!("preconditions hold: {:?}", p),
        }
        // Roles also pass when the arguments are swapped.
        match check_skewpyr(&g, &hole, 6, 5) {
            SkewPyrCheck::Checked { ok, .. } => assert!(ok),
            SkewPyrCheck::Inapplicable(p) => panic!("preconditions hold: {:?}", p),
        }
    }

    #[test]
    fn skew_preconditions_are_reported_in_order() {
        let g = skew_instance();
        let hole = Path(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            check_skewpyr(&g, &Path(vec![0, 1, 2, 3]), 5, 6),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::NotAHole)
        );
        assert_eq!(
            check_skewpyr(&g, &hole, 0, 6),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::SpecialOnHole)
        );
        let mut adj = g.clone();
        adj.add_edge(5, 6);
        assert_eq!(
            check_skewpyr(&adj, &hole, 5, 6),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::SpecialsAdjacent)
        );
        let mut sparse = g.clone();
        sparse.remove_edge(6, 3);
        assert_eq!(
            check_skewpyr(&sparse, &hole, 5, 6),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::TooFewNeighbours)
        );
        // Reading the hole from a different starting point moves the
        // designated edge to one the pair does not cover.
        assert_eq!(
            check_skewpyr(&g, &Path(vec![1, 2, 3, 4, 0]), 5, 6),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::EndsNotCovered)
        );
        let mut even = Graph::empty(8);
        for (u, v) in Graph::cycle(6).edges() {
            even.add_edge(u, v);
        }
        for v in [5, 0, 1] {
            even.add_edge(6, v);
        }
        for v in [4, 5, 0] {
            even.add_edge(7, v);
        }
        assert_eq!(
            check_skewpyr(&even, &Path(vec![0, 1, 2, 3, 4, 5]), 6, 7),
            SkewPyrCheck::Inapplicable(SkewPyrPrecondition::HasEvenHole)
        );
    }
}
