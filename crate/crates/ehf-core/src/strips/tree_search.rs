//! Two-stage search for strip systems with a fixed cross-edge: first the
//! largest indexing tree J realizable as an induced extended tree line-graph
//! ending at ab, then an inclusion-maximal vertex set carrying some system on
//! that J. Certification is exhaustive when the budget allows and falls back
//! to a fixed move-set otherwise.

use crate::detect::find_extended_near_prism;
use crate::graph::{Budget, Graph, Tree, VertexSet};
use crate::strips::jstrip::{
    shape_of, validate_cross_edge, validate_jstrip, CrossEdgeContext, JStripSystem,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    NoneExists,
    Budget,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_none_exists(&self) -> bool {
        matches!(self, Search::NoneExists)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Exhaustive search completed: no valid system on a maximum-size J has a
    /// strictly larger vertex set.
    Optimal,
    /// Budget ran out first; the system is stable under the move set only.
    LocallyMaximal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub certification: Certification,
    /// Single-vertex placements probed on the final system, all invalid.
    pub add_vertex_probes: usize,
    /// Whole-component interior absorptions probed, all invalid.
    pub absorb_probes: usize,
}

#[derive(Clone, Debug)]
pub struct TreeSearchOutcome {
    pub context: CrossEdgeContext,
    pub report: MaximalityReport,
}

pub(crate) struct Ticker {
    used: u64,
    limit: Option<u64>,
}

impl Ticker {
    pub(crate) fn new(budget: Budget) -> Self {
        Ticker {
            used: 0,
            limit: budget.0,
        }
    }

    /// False once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        match self.limit {
            Some(l) => self.used <= l,
            None => true,
        }
    }
}

struct BudgetHit;

fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn extend(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| g.neighbours(u).intersection(p).len())
            .unwrap();
        for v in p.difference(g.neighbours(pivot)).iter() {
            extend(
                g,
                r.with(v),
                p.intersection(g.neighbours(v)),
                x.intersection(g.neighbours(v)),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by_key(|c| c.to_vec());
    out
}

/// Interpret `h` as the line graph of a tree: h-vertices become tree edges.
/// Returns the tree and the edge index carried by each h-vertex, or None when
/// no tree explains the adjacency. Maximal cliques of such a graph are the
/// edge-stars of the tree's internal vertices, so each h-vertex lies in at
/// most two of them and two cliques overlap in at most one vertex.
fn tree_edge_model(h: &Graph) -> Option<(Tree, Vec<usize>)> {
    if h.n() == 0 || h.components().len() != 1 {
        return None;
    }
    let cliques = maximal_cliques(h);
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (ci, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            membership[v].push(ci);
            if membership[v].len() > 2 {
                return None;
            }
        }
    }
    for i in 0..cliques.len() {
        for k in i + 1..cliques.len() {
            if cliques[i].intersection(cliques[k]).len() > 1 {
                return None;
            }
        }
    }
    let mut n_nodes = cliques.len();
    let mut ends = Vec::with_capacity(h.n());
    for v in 0..h.n() {
        match membership[v].as_slice() {
            [q1, q2] => ends.push((*q1, *q2)),
            // A vertex in one clique is a pendant edge: give it a fresh leaf.
            [q] => {
                ends.push((*q, n_nodes));
                n_nodes += 1;
            }
            _ => return None,
        }
    }
    let t = Tree::new(n_nodes, &ends).ok()?;
    for i in 0..h.n() {
        for k in i + 1..h.n() {
            let (a1, b1) = ends[i];
            let (a2, b2) = ends[k];
            let share = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
            if share != h.has_edge(i, k) {
                return None;
            }
        }
    }
    let idx = ends
        .iter()
        .map(|&(u, v)| t.edge_index(u, v).unwrap())
        .collect();
    Some((t, idx))
}

/// Try to read G[w ∪ {a,b}] as an extended tree line-graph whose cross-edge
/// is ab, returning the induced system when every check passes.
fn candidate_from_vertices(g: &Graph, a: usize, b: usize, w: VertexSet) -> Option<CrossEdgeContext> {
    let (h, verts) = g.induced(w);
    let (t, edge_idx) = tree_edge_model(&h)?;
    let mut carrier = vec![usize::MAX; t.edges().len()];
    for (hv, &ei) in edge_idx.iter().enumerate() {
        carrier[ei] = verts[hv];
    }
    // Leaf edges must attach to exactly one of a,b; everything else to neither.
    let na = g.neighbours(a).intersection(w);
    let nb = g.neighbours(b).intersection(w);
    let mut to_a = VertexSet::EMPTY;
    let mut to_b = VertexSet::EMPTY;
    for &leaf in &t.leaves() {
        let other = t.neighbours(leaf)[0];
        let x = carrier[t.edge_index(leaf, other).unwrap()];
        match (na.contains(x), nb.contains(x)) {
            (true, false) => to_a.insert(x),
            (false, true) => to_b.insert(x),
            _ => return None,
        }
    }
    if na != to_a || nb != to_b {
        return None;
    }
    let shape = shape_of(&t);
    let m_edge: Vec<VertexSet> = shape
        .branch_edges
        .iter()
        .map(|edges| edges.iter().map(|&ei| carrier[ei]).collect())
        .collect();
    let m_vertex: Vec<VertexSet> = shape
        .branch_vertex
        .iter()
        .map(|&tv| {
            t.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(p, q))| p == tv || q == tv)
                .map(|(ei, _)| carrier[ei])
                .collect()
        })
        .collect();
    let mut alpha = VertexSet::EMPTY;
    let mut beta = VertexSet::EMPTY;
    for (jid, &tv) in shape.branch_vertex.iter().enumerate() {
        if t.degree(tv) == 1 {
            let other = t.neighbours(tv)[0];
            let x = carrier[t.edge_index(tv, other).unwrap()];
            if to_a.contains(x) {
                alpha.insert(jid);
            } else {
                beta.insert(jid);
            }
        }
    }
    let ctx = CrossEdgeContext {
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
    };
    validate_jstrip(g, &ctx.system).ok()?;
    validate_cross_edge(g, &ctx).ok()?;
    Some(ctx)
}

/// All candidates attaining the maximum number of J-edges, by subset scan.
fn scan_best_candidates(
    g: &Graph,
    a: usize,
    b: usize,
    ticker: &mut Ticker,
) -> Result<Vec<CrossEdgeContext>, BudgetHit> {
    let others: Vec<usize> = g.vertices().without(a).without(b).to_vec();
    let mut best: Vec<CrossEdgeContext> = Vec::new();
    let mut best_edges = 0;
    for mask in 0u128..(1u128 << others.len()) {
        if !ticker.tick() {
            return Err(BudgetHit);
        }
        if mask.count_ones() < 5 {
            continue;
        }
        let w: VertexSet = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if let Some(ctx) = candidate_from_vertices(g, a, b, w) {
            let ne = ctx.system.j.edges().len();
            if ne > best_edges {
                best_edges = ne;
                best.clear();
            }
            if ne == best_edges {
                best.push(ctx);
            }
        }
    }
    Ok(best)
}

/// Membership of one vertex: which J-edge carries it and which end hubs it
/// joins (neither flag set means strip interior).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    edge: usize,
    lower: bool,
    upper: bool,
}

struct Assigner<'g> {
    g: &'g Graph,
    j: Tree,
    alpha: VertexSet,
    beta: VertexSet,
    a: usize,
    b: usize,
    /// Vertices to place; the first `required` of them may not stay outside.
    vars: Vec<usize>,
    required: usize,
    slots: Vec<Slot>,
}

impl<'g> Assigner<'g> {
    fn new(
        g: &'g Graph,
        j: Tree,
        alpha: VertexSet,
        beta: VertexSet,
        a: usize,
        b: usize,
        required: VertexSet,
    ) -> Self {
        let mut vars = required.to_vec();
        for v in g.vertices().without(a).without(b).difference(required).iter() {
            vars.push(v);
        }
        let mut slots = Vec::new();
        for edge in 0..j.edges().len() {
            for (lower, upper) in [(false, false), (true, false), (false, true), (true, true)] {
                slots.push(Slot { edge, lower, upper });
            }
        }
        Assigner {
            g,
            j,
            alpha,
            beta,
            a,
            b,
            vars,
            required: required.len(),
            slots,
        }
    }

    /// Whether a slot makes its vertex part of an α-leaf hub / β-leaf hub,
    /// which is exactly what forces adjacency to a / b.
    fn needs(&self, s: Slot) -> (bool, bool) {
        let (u, v) = self.j.edges()[s.edge];
        let na = (s.lower && self.alpha.contains(u)) || (s.upper && self.alpha.contains(v));
        let nb = (s.lower && self.beta.contains(u)) || (s.upper && self.beta.contains(v));
        (na, nb)
    }

    fn compatible_pair(&self, x: usize, s: Slot, y: usize, t: Slot) -> bool {
        if s.edge == t.edge {
            return true;
        }
        let (u1, v1) = self.j.edges()[s.edge];
        let (u2, v2) = self.j.edges()[t.edge];
        let adj = self.g.has_edge(x, y);
        let shared = if u1 == u2 || u1 == v2 {
            Some(u1)
        } else if v1 == u2 || v1 == v2 {
            Some(v1)
        } else {
            None
        };
        match shared {
            None => !adj,
            Some(c) => {
                let xc = if u1 == c { s.lower } else { s.upper };
                let yc = if u2 == c { t.lower } else { t.upper };
                adj == (xc && yc)
            }
        }
    }

    fn search(&self, ticker: &mut Ticker) -> Result<Option<CrossEdgeContext>, BudgetHit> {
        let mut assign: Vec<Option<Slot>> = vec![None; self.vars.len()];
        self.extend(0, &mut assign, ticker)
    }

    fn extend(
        &self,
        i: usize,
        assign: &mut Vec<Option<Slot>>,
        ticker: &mut Ticker,
    ) -> Result<Option<CrossEdgeContext>, BudgetHit> {
        if !ticker.tick() {
            return Err(BudgetHit);
        }
        if i == self.vars.len() {
            return Ok(self.finish(assign));
        }
        let x = self.vars[i];
        if i >= self.required {
            assign[i] = None;
            if let Some(ctx) = self.extend(i + 1, assign, ticker)? {
                return Ok(Some(ctx));
            }
        }
        let adj_a = self.g.has_edge(x, self.a);
        let adj_b = self.g.has_edge(x, self.b);
        for &s in &self.slots {
            let (na, nb) = self.needs(s);
            if na != adj_a || nb != adj_b {
                continue;
            }
            let ok = (0..i).all(|k| match assign[k] {
                Some(t) => self.compatible_pair(x, s, self.vars[k], t),
                None => true,
            });
            if !ok {
                continue;
            }
            assign[i] = Some(s);
            if let Some(ctx) = self.extend(i + 1, assign, ticker)? {
                return Ok(Some(ctx));
            }
        }
        assign[i] = None;
        Ok(None)
    }

    fn finish(&self, assign: &[Option<Slot>]) -> Option<CrossEdgeContext> {
        let ne = self.j.edges().len();
        let mut m_edge = vec![VertexSet::EMPTY; ne];
        let mut m_vertex = vec![VertexSet::EMPTY; self.j.n()];
        for (i, slot) in assign.iter().enumerate() {
            if let Some(s) = slot {
                let x = self.vars[i];
                m_edge[s.edge].insert(x);
                let (u, v) = self.j.edges()[s.edge];
                if s.lower {
                    m_vertex[u].insert(x);
                }
                if s.upper {
                    m_vertex[v].insert(x);
                }
            }
        }
        let ctx = CrossEdgeContext {
            system: JStripSystem {
                j: self.j.clone(),
                m_edge,
                m_vertex,
            },
            a: self.a,
            b: self.b,
            alpha: self.alpha,
            beta: self.beta,
            certified_optimal: false,
        };
        validate_jstrip(self.g, &ctx.system).ok()?;
        validate_cross_edge(self.g, &ctx).ok()?;
        Some(ctx)
    }
}

/// Single-vertex placements that keep the current system valid: each result
/// is (vertex, edge, lower-hub, upper-hub). Empty on any maximal system.
pub fn single_vertex_extensions(
    g: &Graph,
    ctx: &CrossEdgeContext,
) -> Vec<(usize, usize, bool, bool)> {
    let vm = ctx.vertex_union();
    let mut out = Vec::new();
    for x in g.vertices().difference(vm).without(ctx.a).without(ctx.b).iter() {
        for e in 0..ctx.system.j.edges().len() {
            for (lower, upper) in [(false, false), (true, false), (false, true), (true, true)] {
                let mut trial = ctx.clone();
                trial.system.m_edge[e].insert(x);
                let (u, v) = trial.system.j.edges()[e];
                if lower {
                    trial.system.m_vertex[u].insert(x);
                }
                if upper {
                    trial.system.m_vertex[v].insert(x);
                }
                if validate_jstrip(g, &trial.system).is_ok()
                    && validate_cross_edge(g, &trial).is_ok()
                {
                    out.push((x, e, lower, upper));
                }
            }
        }
    }
    out
}

/// Absorptions of one whole outside component into one strip interior that
/// keep the system valid. Empty on any maximal system.
pub fn component_absorptions(g: &Graph, ctx: &CrossEdgeContext) -> Vec<(VertexSet, usize)> {
    let vm = ctx.vertex_union();
    let rest = g.vertices().difference(vm).without(ctx.a).without(ctx.b);
    let mut out = Vec::new();
    for comp in g.components_within(rest) {
        for e in 0..ctx.system.j.edges().len() {
            let mut trial = ctx.clone();
            trial.system.m_edge[e] = trial.system.m_edge[e].union(comp);
            if validate_jstrip(g, &trial.system).is_ok() && validate_cross_edge(g, &trial).is_ok() {
                out.push((comp, e));
            }
        }
    }
    out
}

fn probe_counts(g: &Graph, ctx: &CrossEdgeContext) -> (usize, usize) {
    let vm = ctx.vertex_union();
    let ne = ctx.system.j.edges().len();
    let outside = g.vertices().difference(vm).without(ctx.a).without(ctx.b);
    let comps = g.components_within(outside).len();
    (outside.len() * ne * 4, comps * ne)
}

/// Apply valid moves until none remains; every application grows V(M).
fn move_closure(g: &Graph, ctx: &mut CrossEdgeContext) {
    loop {
        if let Some(&(x, e, lower, upper)) = single_vertex_extensions(g, ctx).first() {
            ctx.system.m_edge[e].insert(x);
            let (u, v) = ctx.system.j.edges()[e];
            if lower {
                ctx.system.m_vertex[u].insert(x);
            }
            if upper {
                ctx.system.m_vertex[v].insert(x);
            }
            continue;
        }
        if let Some(&(comp, e)) = component_absorptions(g, ctx).first() {
            ctx.system.m_edge[e] = ctx.system.m_edge[e].union(comp);
            continue;
        }
        break;
    }
}

/// Find a system with cross-edge ab whose indexing tree has the most edges
/// and whose vertex set is inclusion-maximal among systems on such a tree.
/// NoneExists exactly when no extended near-prism has cross-edge ab.
pub fn search_tree_strip_system(
    g: &Graph,
    a: usize,
    b: usize,
    budget: Budget,
) -> Search<TreeSearchOutcome> {
    if a >= g.n() || b >= g.n() || a == b || !g.has_edge(a, b) {
        return Search::NoneExists;
    }
    if find_extended_near_prism(g, Some((a, b))).is_none() {
        return Search::NoneExists;
    }
    let mut ticker = Ticker::new(budget);
    let candidates = match scan_best_candidates(g, a, b, &mut ticker) {
        Ok(c) => c,
        Err(BudgetHit) => return Search::Budget,
    };
    let Some(seed) = candidates.first().cloned() else {
        return Search::NoneExists;
    };
    let mut shapes: Vec<(Tree, VertexSet, VertexSet)> = Vec::new();
    for c in &candidates {
        let key = (c.system.j.clone(), c.alpha, c.beta);
        if !shapes
            .iter()
            .any(|(j, al, be)| j.edges() == key.0.edges() && *al == key.1 && *be == key.2)
        {
            shapes.push(key);
        }
    }
    let mut ctx = seed;
    let mut certification = Certification::Optimal;
    'grow: loop {
        let outside = g
            .vertices()
            .difference(ctx.vertex_union())
            .without(a)
            .without(b);
        for x in outside.iter() {
            for (j, alpha, beta) in &shapes {
                let required = ctx.vertex_union().with(x);
                let assigner = Assigner::new(g, j.clone(), *alpha, *beta, a, b, required);
                match assigner.search(&mut ticker) {
                    Err(BudgetHit) => {
                        certification = Certification::LocallyMaximal;
                        break 'grow;
                    }
                    Ok(Some(bigger)) => {
                        ctx = bigger;
                        continue 'grow;
                    }
                    Ok(None) => {}
                }
            }
        }
        break;
    }
    // Keep the answer stable under the move set even when the budget cut the
    // exhaustive pass short.
    move_closure(g, &mut ctx);
    ctx.certified_optimal = certification == Certification::Optimal;
    let (add_vertex_probes, absorb_probes) = probe_counts(g, &ctx);
    Search::Found(TreeSearchOutcome {
        context: ctx,
        report: MaximalityReport {
            certification,
            add_vertex_probes,
            absorb_probes,
        },
    })
}
