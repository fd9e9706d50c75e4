//! Apex strip systems: k >= 3 disjoint proper strips whose B-sides are
//! mutually complete, with the apex complete to every A-side and to nothing
//! else in the system. The search certifies vertex-maximality exhaustively
//! when the budget allows; the checkers downstream of maximality (component
//! attachment shape, apex-neighbour classification, apex clique) carry a
//! caveat flag otherwise.

use crate::cutsets::is_splendid;
use crate::detect::{find_extended_near_prism_with_end, find_pyramid, Certificate};
use crate::graph::{Budget, Graph, Path, VertexSet};
use crate::strips::majors::CliqueCheck;
use crate::strips::strip::{validate_strip, Strip, StripCheck, StripError};
use crate::strips::tree_search::{Certification, MaximalityReport, Ticker};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidStripSystem {
    pub apex: usize,
    pub strips: Vec<Strip>,
    /// Set only by searches whose exhaustive certification completed.
    pub certified_optimal: bool,
}

impl PyramidStripSystem {
    pub fn new(apex: usize, strips: Vec<Strip>) -> Self {
        PyramidStripSystem {
            apex,
            strips,
            certified_optimal: false,
        }
    }

    pub fn k(&self) -> usize {
        self.strips.len()
    }

    /// All strip vertices plus the apex.
    pub fn vertex_union(&self) -> VertexSet {
        self.strips
            .iter()
            .fold(VertexSet::singleton(self.apex), |acc, s| {
                acc.union(s.vertex_set())
            })
    }

    pub fn a_union(&self) -> VertexSet {
        self.strips
            .iter()
            .fold(VertexSet::EMPTY, |acc, s| acc.union(s.a))
    }

    pub fn b_union(&self) -> VertexSet {
        self.strips
            .iter()
            .fold(VertexSet::EMPTY, |acc, s| acc.union(s.b))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "apex": self.apex,
            "strips": self.strips.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
            "certified_optimal": self.certified_optimal,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PyramidSystemFailure {
    TooFewStrips { k: usize },
    BadStrip { i: usize, error: StripError },
    StripNotCovered { i: usize, uncovered: VertexSet },
    StripsOverlap { i: usize, j: usize, witness: usize },
    /// A B-side pair across two strips misses an edge.
    BaseIncomplete { i: usize, j: usize, witness: (usize, usize) },
    /// Cross-strip edge not between the two B-sides.
    StrayCrossEdge { i: usize, j: usize, witness: (usize, usize) },
    ApexInStrip { i: usize },
    /// The apex misses a vertex of some A-side.
    ApexMissesA { i: usize, witness: usize },
    /// The apex touches some B∪C.
    ApexSeesBC { i: usize, witness: usize },
}

/// Definition-order validation; first failure wins. Strips must be proper and
/// fully rung-covered, pairwise disjoint, cross-adjacent exactly on their
/// B-sides, and the apex complete to each A-side and anticomplete to the rest.
pub fn validate_pyramid_system(
    g: &Graph,
    sys: &PyramidStripSystem,
) -> Result<(), PyramidSystemFailure> {
    let k = sys.strips.len();
    if k < 3 {
        return Err(PyramidSystemFailure::TooFewStrips { k });
    }
    for (i, s) in sys.strips.iter().enumerate() {
        match validate_strip(g, s, true) {
            Err(error) => return Err(PyramidSystemFailure::BadStrip { i, error }),
            Ok(StripCheck::Uncovered(uncovered)) => {
                return Err(PyramidSystemFailure::StripNotCovered { i, uncovered })
            }
            Ok(StripCheck::Covered) => {}
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let (si, sj) = (&sys.strips[i], &sys.strips[j]);
            let shared = si.vertex_set().intersection(sj.vertex_set());
            if let Some(witness) = shared.min() {
                return Err(PyramidSystemFailure::StripsOverlap { i, j, witness });
            }
            for u in si.vertex_set().iter() {
                let expected = if si.b.contains(u) { sj.b } else { VertexSet::EMPTY };
                let seen = g.neighbours(u).intersection(sj.vertex_set());
                if let Some(v) = expected.difference(seen).min() {
                    return Err(PyramidSystemFailure::BaseIncomplete { i, j, witness: (u, v) });
                }
                if let Some(v) = seen.difference(expected).min() {
                    return Err(PyramidSystemFailure::StrayCrossEdge { i, j, witness: (u, v) });
                }
            }
        }
    }
    let na = g.neighbours(sys.apex);
    for (i, s) in sys.strips.iter().enumerate() {
        if s.vertex_set().contains(sys.apex) {
            return Err(PyramidSystemFailure::ApexInStrip { i });
        }
        if let Some(witness) = s.a.difference(na).min() {
            return Err(PyramidSystemFailure::ApexMissesA { i, witness });
        }
        if let Some(witness) = na.intersection(s.b.union(s.c)).min() {
            return Err(PyramidSystemFailure::ApexSeesBC { i, witness });
        }
    }
    Ok(())
}

/// Per strip: is A∪C connected?
pub fn indecomposable_strips(g: &Graph, sys: &PyramidStripSystem) -> Vec<bool> {
    sys.strips
        .iter()
        .map(|s| g.is_connected_set(s.a.union(s.c)))
        .collect()
}

pub fn is_indecomposable(g: &Graph, sys: &PyramidStripSystem) -> bool {
    indecomposable_strips(g, sys).into_iter().all(|b| b)
}

/// The probe set overlaps the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OverlapsSystem(pub VertexSet);

/// System vertices (apex included) with a neighbour in `f`.
pub fn attachments(
    g: &Graph,
    sys: &PyramidStripSystem,
    f: VertexSet,
) -> Result<VertexSet, OverlapsSystem> {
    let vu = sys.vertex_union();
    let shared = f.intersection(vu);
    if !shared.is_empty() {
        return Err(OverlapsSystem(shared));
    }
    Ok(g.attachment(f, vu))
}

/// D_i per strip: the union of the components of the graph left after
/// deleting the system and the apex's closed neighbourhood whose attachment
/// set meets A_i∪C_i. Recomputed fresh on every call.
pub fn attachment_unions(g: &Graph, sys: &PyramidStripSystem) -> Vec<VertexSet> {
    let vu = sys.vertex_union();
    let rest = g
        .vertices()
        .difference(vu)
        .difference(g.closed_neighbours(sys.apex));
    let mut ds = vec![VertexSet::EMPTY; sys.strips.len()];
    for comp in g.components_within(rest) {
        let att = g.attachment(comp, vu);
        for (i, s) in sys.strips.iter().enumerate() {
            if att.intersects(s.a.union(s.c)) {
                ds[i] = ds[i].union(comp);
            }
        }
    }
    ds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PyramidBlocker {
    /// The root fails the three-clause connectivity test.
    NotSplendid,
    /// Some extended near-prism has the root as a cross-edge end.
    CrossEdgeEnd,
    /// No pyramid has the root as apex.
    NoApexPyramid,
}

#[derive(Clone, Debug)]
pub struct PyramidOutcome {
    pub system: PyramidStripSystem,
    pub report: MaximalityReport,
}

#[derive(Clone, Debug)]
pub enum PyramidSearch {
    Found(PyramidOutcome),
    Inapplicable(PyramidBlocker),
    Budget,
}

impl PyramidSearch {
    pub fn found(self) -> Option<PyramidOutcome> {
        match self {
            PyramidSearch::Found(o) => Some(o),
            _ => None,
        }
    }
}

struct BudgetHit;

/// k=3 single-rung system from a pyramid certificate whose constituent paths
/// all have length at least two (guaranteed at a splendid apex).
fn seed_from_pyramid(apex: usize, cert: &Certificate) -> PyramidStripSystem {
    let Certificate::Pyramid { base, paths, .. } = cert else {
        unreachable!("pyramid finder returned a different certificate");
    };
    let strips = paths
        .iter()
        .zip(base.iter())
        .map(|(p, &bot)| {
            debug_assert!(p.len() >= 2);
            let mid: VertexSet = p.0[2..p.0.len() - 1].iter().copied().collect();
            Strip::new(VertexSet::singleton(p.0[1]), VertexSet::singleton(bot), mid)
        })
        .collect();
    PyramidStripSystem::new(apex, strips)
}

/// Read a strip partition off a choice of A-, B- and C-unions: strips are the
/// components of G[A∪C], and each B vertex joins the unique component it
/// touches. Any ambiguity or validation failure rejects the choice.
fn assemble(
    g: &Graph,
    apex: usize,
    aset: VertexSet,
    bset: VertexSet,
    cset: VertexSet,
) -> Option<PyramidStripSystem> {
    if aset.is_empty() || bset.is_empty() {
        return None;
    }
    let comps = g.components_within(aset.union(cset));
    if comps.len() < 3 {
        return None;
    }
    let mut strips: Vec<Strip> = Vec::with_capacity(comps.len());
    for &comp in &comps {
        if !comp.intersects(aset) {
            return None;
        }
        strips.push(Strip::new(
            comp.intersection(aset),
            VertexSet::EMPTY,
            comp.intersection(cset),
        ));
    }
    for bv in bset.iter() {
        let nb = g.neighbours(bv);
        let mut host = None;
        for (i, comp) in comps.iter().enumerate() {
            if nb.intersects(*comp) {
                if host.is_some() {
                    return None;
                }
                host = Some(i);
            }
        }
        strips[host?].b.insert(bv);
    }
    let sys = PyramidStripSystem::new(apex, strips);
    if validate_pyramid_system(g, &sys).is_ok() {
        Some(sys)
    } else {
        None
    }
}

/// First valid assignment with more vertices than `threshold` (apex counted),
/// scanning every way to split V∖{apex} into outside / A- / B- / C-union.
/// Vertices adjacent to the apex can only serve as A, the rest as B or C, so
/// the space is 2^{deg(apex)}·3^{rest} assignments, each ticked once.
fn scan_bigger(
    g: &Graph,
    apex: usize,
    threshold: usize,
    ticker: &mut Ticker,
) -> Result<Option<PyramidStripSystem>, BudgetHit> {
    let others: Vec<usize> = g.vertices().without(apex).to_vec();
    let na = g.neighbours(apex);
    let radix: Vec<u8> = others
        .iter()
        .map(|&v| if na.contains(v) { 2 } else { 3 })
        .collect();
    // Mixed-radix odometer, position 0 fastest: digit 0 leaves v outside,
    // digit 1 puts an apex neighbour in A or anything else in C, digit 2
    // puts a non-neighbour in B. Sets and size track the digits so each
    // assignment costs amortized O(1) instead of a full decode.
    let mut digits = vec![0u8; others.len()];
    let mut aset = VertexSet::EMPTY;
    let mut bset = VertexSet::EMPTY;
    let mut cset = VertexSet::EMPTY;
    let mut size = 1usize;
    loop {
        if !ticker.tick() {
            return Err(BudgetHit);
        }
        if size > threshold {
            if let Some(sys) = assemble(g, apex, aset, bset, cset) {
                return Ok(Some(sys));
            }
        }
        let mut pos = 0;
        loop {
            if pos == others.len() {
                return Ok(None);
            }
            let v = others[pos];
            match (radix[pos], digits[pos]) {
                (_, 0) => {}
                (2, _) => {
                    aset.remove(v);
                    size -= 1;
                }
                (3, 1) => {
                    cset.remove(v);
                    size -= 1;
                }
                _ => {
                    bset.remove(v);
                    size -= 1;
                }
            }
            digits[pos] += 1;
            if digits[pos] < radix[pos] {
                match (radix[pos], digits[pos]) {
                    (2, _) => aset.insert(v),
                    (3, 1) => cset.insert(v),
                    _ => bset.insert(v),
                }
                size += 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
    C,
}

fn place(sys: &PyramidStripSystem, x: usize, i: usize, slot: Slot) -> PyramidStripSystem {
    let mut t = sys.clone();
    match slot {
        Slot::A => t.strips[i].a.insert(x),
        Slot::B => t.strips[i].b.insert(x),
        Slot::C => t.strips[i].c.insert(x),
    }
    t
}

/// Single-vertex placements that keep the system valid and indecomposable.
/// Empty on any vertex-maximal system.
pub fn single_vertex_additions(g: &Graph, sys: &PyramidStripSystem) -> Vec<(usize, usize, Slot)> {
    let vu = sys.vertex_union();
    let mut out = Vec::new();
    for x in g.vertices().difference(vu).iter() {
        for i in 0..sys.strips.len() {
            for slot in [Slot::A, Slot::B, Slot::C] {
                let t = place(sys, x, i, slot);
                if validate_pyramid_system(g, &t).is_ok() && is_indecomposable(g, &t) {
                    out.push((x, i, slot));
                }
            }
        }
    }
    out
}

fn first_vertex_addition(
    g: &Graph,
    sys: &PyramidStripSystem,
    ticker: &mut Ticker,
) -> Result<Option<PyramidStripSystem>, BudgetHit> {
    let vu = sys.vertex_union();
    for x in g.vertices().difference(vu).iter() {
        for i in 0..sys.strips.len() {
            for slot in [Slot::A, Slot::B, Slot::C] {
                if !ticker.tick() {
                    return Err(BudgetHit);
                }
                let t = place(sys, x, i, slot);
                if validate_pyramid_system(g, &t).is_ok() && is_indecomposable(g, &t) {
                    return Ok(Some(t));
                }
            }
        }
    }
    Ok(None)
}

// Caps path enumeration inside a single move probe; the closure only ever
// claims local maximality, so truncation here costs completeness of the
// move set, not soundness.
const MOVE_PATH_CAP: u64 = 2048;

/// Absorb an apex neighbour v into A_i together with a fresh path hanging off
/// it, the path going to C_i.
fn first_path_absorption(
    g: &Graph,
    sys: &PyramidStripSystem,
    ticker: &mut Ticker,
) -> Result<Option<PyramidStripSystem>, BudgetHit> {
    let vu = sys.vertex_union();
    let hangers = g.neighbours(sys.apex).difference(vu);
    let outside = g
        .vertices()
        .difference(vu)
        .difference(g.closed_neighbours(sys.apex));
    let bu = sys.b_union();
    for v in hangers.iter() {
        for q in outside.iter() {
            if !g.neighbours(q).intersects(bu) {
                continue;
            }
            for i in 0..sys.strips.len() {
                for path in g.induced_paths(v, q, outside, Budget::nodes(MOVE_PATH_CAP)) {
                    if !ticker.tick() {
                        return Err(BudgetHit);
                    }
                    let mut t = sys.clone();
                    t.strips[i].a.insert(v);
                    for &w in &path.0[1..] {
                        t.strips[i].c.insert(w);
                    }
                    if validate_pyramid_system(g, &t).is_ok() && is_indecomposable(g, &t) {
                        return Ok(Some(t));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Fold several strips reachable from one apex neighbour v into a single
/// strip: v joins the merged A-side, and one connecting path per folded strip
/// (through its C and D vertices) joins the merged C-side.
fn first_merge(
    g: &Graph,
    sys: &PyramidStripSystem,
    ticker: &mut Ticker,
) -> Result<Option<PyramidStripSystem>, BudgetHit> {
    let k = sys.strips.len();
    let vu = sys.vertex_union();
    let ds = attachment_unions(g, sys);
    for v in g.neighbours(sys.apex).difference(vu).iter() {
        let nv = g.neighbours(v);
        let sel: Vec<usize> = (0..k)
            .filter(|&i| {
                let s = &sys.strips[i];
                nv.intersects(s.b.union(s.c).union(ds[i]))
            })
            .collect();
        if sel.len() < 2 || k - sel.len() + 1 < 3 {
            continue;
        }
        if !ticker.tick() {
            return Err(BudgetHit);
        }
        let mut merged = Strip::new(VertexSet::singleton(v), VertexSet::EMPTY, VertexSet::EMPTY);
        let mut complete = true;
        for &i in &sel {
            let s = &sys.strips[i];
            let mut found = None;
            'paths: for bot in s.b.iter() {
                for p in g.induced_paths(v, bot, s.c.union(ds[i]), Budget::nodes(MOVE_PATH_CAP)) {
                    found = Some(p);
                    break 'paths;
                }
            }
            let Some(p) = found else {
                complete = false;
                break;
            };
            merged.a = merged.a.union(s.a);
            merged.b = merged.b.union(s.b);
            merged.c = merged.c.union(s.c).union(p.vertex_set().intersection(ds[i]));
        }
        if !complete {
            continue;
        }
        let mut strips: Vec<Strip> = (0..k)
            .filter(|i| !sel.contains(i))
            .map(|i| sys.strips[i])
            .collect();
        strips.push(merged);
        let t = PyramidStripSystem::new(sys.apex, strips);
        if validate_pyramid_system(g, &t).is_ok() && is_indecomposable(g, &t) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Apply moves until none fires; every application grows the vertex set.
fn move_closure(
    g: &Graph,
    sys: &mut PyramidStripSystem,
    ticker: &mut Ticker,
) -> Result<(), BudgetHit> {
    loop {
        if let Some(t) = first_vertex_addition(g, sys, ticker)? {
            *sys = t;
            continue;
        }
        if let Some(t) = first_path_absorption(g, sys, ticker)? {
            *sys = t;
            continue;
        }
        if let Some(t) = first_merge(g, sys, ticker)? {
            *sys = t;
            continue;
        }
        return Ok(());
    }
}

/// Probe-space sizes on the final system: single placements, then outside
/// components times strips plus pending merge roots.
fn probe_counts(g: &Graph, sys: &PyramidStripSystem) -> (usize, usize) {
    let vu = sys.vertex_union();
    let k = sys.strips.len();
    let outside = g.vertices().difference(vu);
    let far = outside.difference(g.closed_neighbours(sys.apex));
    let comps = g.components_within(far).len();
    let hangers = g.neighbours(sys.apex).difference(vu).len();
    (outside.len() * k * 3, comps * k + hangers)
}

/// Grow an indecomposable system with the given apex to a vertex-maximal one.
/// Inapplicable unless the apex is splendid, avoids every cross-edge, and
/// tops some pyramid. The move closure runs first; the exhaustive scan then
/// either certifies the result or replaces it with something larger and
/// repeats. Budget death during the closure gives up; during the scan it
/// downgrades the certification to locally-maximal.
pub fn search_pyramid_strip_system(g: &Graph, a: usize, budget: Budget) -> PyramidSearch {
    if a >= g.n() || !is_splendid(g, a).ok {
        return PyramidSearch::Inapplicable(PyramidBlocker::NotSplendid);
    }
    if find_extended_near_prism_with_end(g, a).is_some() {
        return PyramidSearch::Inapplicable(PyramidBlocker::CrossEdgeEnd);
    }
    let Some(cert) = find_pyramid(g, Some(a), false) else {
        return PyramidSearch::Inapplicable(PyramidBlocker::NoApexPyramid);
    };
    let mut sys = seed_from_pyramid(a, &cert);
    debug_assert!(validate_pyramid_system(g, &sys).is_ok());
    let mut ticker = Ticker::new(budget);
    if move_closure(g, &mut sys, &mut ticker).is_err() {
        return PyramidSearch::Budget;
    }
    let mut certification = Certification::LocallyMaximal;
    loop {
        match scan_bigger(g, a, sys.vertex_union().len(), &mut ticker) {
            Err(BudgetHit) => break,
            Ok(None) => {
                certification = Certification::Optimal;
                break;
            }
            Ok(Some(bigger)) => {
                sys = bigger;
                if move_closure(g, &mut sys, &mut ticker).is_err() {
                    break;
                }
            }
        }
    }
    sys.certified_optimal = certification == Certification::Optimal;
    let (add_vertex_probes, absorb_probes) = probe_counts(g, &sys);
    PyramidSearch::Found(PyramidOutcome {
        system: sys,
        report: MaximalityReport {
            certification,
            add_vertex_probes,
            absorb_probes,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidAttachmentCheck {
    pub component: VertexSet,
    pub attachments: VertexSet,
    /// Strip index witnessing the single-strip disjunct, when one fits.
    pub strip: Option<usize>,
    pub ok: bool,
    pub caveat: bool,
}

impl PyramidAttachmentCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "component": self.component.to_vec(),
            "attachments": self.attachments.to_vec(),
            "strip": self.strip,
            "ok": self.ok,
            "caveat": self.caveat,
        })
    }
}

/// Attachment dichotomy at a maximal system: every component left after
/// deleting the system and the apex's closed neighbourhood attaches either
/// inside the B-union (nonemptily) or inside a single strip, meeting its
/// B∪C. One entry per component.
pub fn check_pyramid_attachment_theorem(
    g: &Graph,
    sys: &PyramidStripSystem,
) -> Vec<PyramidAttachmentCheck> {
    let vu = sys.vertex_union();
    let rest = g
        .vertices()
        .difference(vu)
        .difference(g.closed_neighbours(sys.apex));
    let bu = sys.b_union();
    let mut out = Vec::new();
    for component in g.components_within(rest) {
        let att = g.attachment(component, vu);
        let in_base = !att.is_empty() && att.is_subset_of(bu);
        let strip = (0..sys.strips.len()).find(|&i| {
            let s = &sys.strips[i];
            att.is_subset_of(s.vertex_set()) && att.intersects(s.b.union(s.c))
        });
        out.push(PyramidAttachmentCheck {
            component,
            attachments: att,
            strip,
            ok: in_base || strip.is_some(),
            caveat: !sys.certified_optimal,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApexNeighbourType {
    /// Every strip either touched in B∪C or dominated across A.
    Alpha,
    /// One strip reached only through its D, all others dominated and clean.
    AlphaPrime(usize),
    /// One strip completely avoided, every other touched in B∪C.
    Beta(usize),
    /// Dominates all A-sides but one, clean below, and reaches the B-union
    /// through a private outside path.
    Gamma(usize, Path),
    Unclassified(UnclassifiedReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnclassifiedReason {
    /// All four type definitions refuted outright.
    NoneFits,
    /// The private-path search was truncated; absence is not certified.
    Budget,
}

/// The probe vertex is not an apex neighbour outside the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotApexNeighbour(pub usize);

/// Tests the four type definitions literally, in a fixed order (the types
/// overlap; the first fit wins). The private-path search for the last type
/// runs each path probe under `budget`; truncation without a hit comes back
/// as Unclassified rather than a guess.
pub fn classify_apex_neighbour(
    g: &Graph,
    sys: &PyramidStripSystem,
    v: usize,
    budget: Budget,
) -> Result<ApexNeighbourType, NotApexNeighbour> {
    let vu = sys.vertex_union();
    if v >= g.n() || vu.contains(v) || !g.closed_neighbours(sys.apex).contains(v) {
        return Err(NotApexNeighbour(v));
    }
    let nv = g.neighbours(v);
    let k = sys.strips.len();
    let ds = attachment_unions(g, sys);
    let body = |i: usize| sys.strips[i].b.union(sys.strips[i].c);

    if (0..k).all(|i| nv.intersects(body(i)) || sys.strips[i].a.is_subset_of(nv)) {
        return Ok(ApexNeighbourType::Alpha);
    }
    let clean_elsewhere = |i: usize| {
        (0..k).filter(|&j| j != i).all(|j| {
            sys.strips[j].a.is_subset_of(nv) && !nv.intersects(body(j).union(ds[j]))
        })
    };
    if let Some(i) =
        (0..k).find(|&i| nv.intersects(ds[i]) && !nv.intersects(body(i)) && clean_elsewhere(i))
    {
        return Ok(ApexNeighbourType::AlphaPrime(i));
    }
    if let Some(i) = (0..k).find(|&i| {
        !nv.intersects(sys.strips[i].a.union(body(i)))
            && (0..k).filter(|&j| j != i).all(|j| nv.intersects(body(j)))
    }) {
        return Ok(ApexNeighbourType::Beta(i));
    }

    // Last type: v must be clean below every strip, dominate all A-sides but
    // possibly one, and reach the B-union through a path avoiding the system
    // and the apex's neighbourhood entirely except at its far end.
    let mut truncated = false;
    let clean_below = (0..k).all(|j| !nv.intersects(body(j).union(ds[j])));
    if clean_below {
        let bu = sys.b_union();
        let na = g.closed_neighbours(sys.apex);
        let interior_ok = g
            .vertices()
            .difference(vu)
            .difference(na)
            .iter()
            .filter(|&w| !g.neighbours(w).intersects(vu))
            .collect::<VertexSet>();
        for i in 0..k {
            if !(0..k)
                .filter(|&j| j != i)
                .all(|j| sys.strips[j].a.is_subset_of(nv))
            {
                continue;
            }
            let off = bu.difference(sys.strips[i].b);
            for q in g.vertices().difference(vu).difference(na).iter() {
                let nq = g.neighbours(q);
                if !nq.intersects(bu) || !nq.intersection(vu).difference(bu).is_empty() {
                    continue;
                }
                let hits = nq.intersection(off);
                if !(hits == off || hits.is_empty()) {
                    continue;
                }
                let mut stream = g.induced_paths(v, q, interior_ok, budget);
                if let Some(p) = stream.next() {
                    return Ok(ApexNeighbourType::Gamma(i, p));
                }
                if stream.hit_budget() {
                    truncated = true;
                }
            }
        }
    }
    Ok(ApexNeighbourType::Unclassified(if truncated {
        UnclassifiedReason::Budget
    } else {
        UnclassifiedReason::NoneFits
    }))
}

/// The apex's neighbours outside the system must be pairwise adjacent.
pub fn check_apex_clique(g: &Graph, sys: &PyramidStripSystem) -> CliqueCheck {
    let set = g
        .closed_neighbours(sys.apex)
        .difference(sys.vertex_union());
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
        caveat: !sys.certified_optimal,
    }
}
