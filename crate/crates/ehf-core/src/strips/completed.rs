//! A strip completed by an outside apex: D collects the components hanging
//! off the strip's A∪C side, Z the apex-side vertices that see into
//! A∪C∪D, and every Z-vertex owes a backdoor, an induced path slipping past
//! the strip to a vertex complete to B. `check_completed_strip` re-derives
//! each clause from the graph; `check_striptobip` uses a valid completion
//! to pin a bisimplicial vertex inside A∪C∪D.

use std::collections::BTreeMap;

use crate::bisimplicial::bisimplicial_vertices;
use crate::detect::is_even_hole_free;
use crate::graph::{Budget, Graph, Path, VertexSet};
use crate::strips::pyramid::PyramidStripSystem;
use crate::strips::strip::{validate_strip, Strip, StripCheck, StripError};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletedStrip {
    pub strip: Strip,
    pub apex: usize,
    pub d: VertexSet,
    pub z: VertexSet,
    /// One backdoor per Z-vertex, keyed by that vertex.
    pub backdoors: BTreeMap<usize, Path>,
}

impl CompletedStrip {
    pub fn to_json(&self) -> Value {
        let doors: serde_json::Map<String, Value> = self
            .backdoors
            .iter()
            .map(|(z, p)| (z.to_string(), json!(p.0)))
            .collect();
        json!({
            "strip": self.strip.to_json(),
            "apex": self.apex,
            "D": self.d.to_vec(),
            "Z": self.z.to_vec(),
            "backdoors": doors,
        })
    }
}

/// Union of the components of the graph minus the strip and the apex's
/// closed neighbourhood that have a neighbour in A∪C. Recomputed from the
/// definition on every call.
pub fn attachment_union(g: &Graph, s: &Strip, apex: usize) -> VertexSet {
    let rest = g
        .vertices()
        .difference(s.vertex_set())
        .difference(g.closed_neighbours(apex));
    let watched = s.a.union(s.c);
    g.components_within(rest)
        .into_iter()
        .filter(|&f| !g.attachment(f, watched).is_empty())
        .fold(VertexSet::EMPTY, VertexSet::union)
}

/// Vertices outside the strip, adjacent or equal to the apex, with a
/// neighbour in A∪C∪D. The apex itself qualifies whenever A is nonempty.
pub fn entry_vertices(g: &Graph, s: &Strip, apex: usize, d: VertexSet) -> VertexSet {
    let core = s.a.union(s.c).union(d);
    g.closed_neighbours(apex)
        .difference(s.vertex_set())
        .iter()
        .filter(|&v| g.neighbours(v).intersects(core))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackdoorFault {
    NotInducedPath,
    /// Neither end is the owning Z-vertex.
    NotAnchored,
    /// Interior vertex inside or next to V(S)∪D.
    InteriorTouches { witness: usize },
    /// Far end misses a B-vertex.
    EndMissesB { witness: usize },
    /// Far end has a neighbour in A∪C∪D.
    EndSeesCore { witness: usize },
}

/// Re-derive every backdoor clause for a stored path. The path may run in
/// either direction; the far end is whichever end is not `z`.
pub fn validate_backdoor(
    g: &Graph,
    s: &Strip,
    d: VertexSet,
    z: usize,
    r: &Path,
) -> Result<(), BackdoorFault> {
    if r.0.iter().any(|&v| v >= g.n()) || !r.is_induced_path_of(g) {
        return Err(BackdoorFault::NotInducedPath);
    }
    let (first, last) = (r.0[0], *r.0.last().unwrap());
    let far = if first == z {
        last
    } else if last == z {
        first
    } else {
        return Err(BackdoorFault::NotAnchored);
    };
    let shielded = s.vertex_set().union(d);
    for w in r.interior().iter() {
        if shielded.contains(w) || g.neighbours(w).intersects(shielded) {
            return Err(BackdoorFault::InteriorTouches { witness: w });
        }
    }
    if let Some(witness) = s.b.without(far).difference(g.neighbours(far)).min() {
        return Err(BackdoorFault::EndMissesB { witness });
    }
    let core = s.a.union(s.c).union(d);
    if let Some(witness) = g.neighbours(far).intersection(core).min() {
        return Err(BackdoorFault::EndSeesCore { witness });
    }
    Ok(())
}

/// First backdoor for `z` within budget: far ends are scanned in vertex
/// order, paths in stream order. Candidates stay clear of V(S)∪D, although
/// the clauses themselves would tolerate degenerate ends inside A.
pub fn find_backdoor(
    g: &Graph,
    s: &Strip,
    d: VertexSet,
    z: usize,
    budget: Budget,
) -> Option<Path> {
    let shielded = s.vertex_set().union(d);
    let core = s.a.union(s.c).union(d);
    let clear: VertexSet = g
        .vertices()
        .difference(shielded)
        .iter()
        .filter(|&w| !g.neighbours(w).intersects(shielded))
        .collect();
    for far in g.vertices().without(z).difference(shielded).iter() {
        let nf = g.neighbours(far);
        if !s.b.without(far).is_subset_of(nf) || nf.intersects(core) {
            continue;
        }
        if let Some(p) = g.induced_paths(z, far, clear, budget).next() {
            return Some(p);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletedStripFault {
    ApexOutOfRange,
    /// Some stored vertex set leaves the graph.
    OutsideGraph { witness: VertexSet },
    ApexInStrip,
    /// The apex misses an A-vertex.
    ApexMissesA { witness: usize },
    /// The apex touches B∪C.
    ApexSeesBody { witness: usize },
    StripInvalid(StripError),
    StripNotCovered(VertexSet),
    /// Stored D differs from the recomputed one.
    WrongD { expected: VertexSet },
    /// Stored Z differs from the recomputed one.
    WrongZ { expected: VertexSet },
    ZNotClique { witness: (usize, usize) },
    MissingBackdoor { z: usize },
    BadBackdoor { z: usize, fault: BackdoorFault },
    /// Backdoor stored for a vertex outside Z.
    StrayBackdoor { key: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletedStripReport {
    pub ok: bool,
    pub faults: Vec<CompletedStripFault>,
}

impl CompletedStripReport {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "faults": self.faults.iter().map(|f| format!("{:?}", f)).collect::<Vec<_>>(),
        })
    }
}

/// Every clause, re-derived: the apex setup, strip validity, D and Z against
/// their definitions, the Z clique, and each stored backdoor (judged against
/// the stored D; a wrong D is its own fault). All failing clauses are
/// collected rather than just the first.
pub fn check_completed_strip(g: &Graph, cs: &CompletedStrip) -> CompletedStripReport {
    if cs.apex >= g.n() {
        return CompletedStripReport {
            ok: false,
            faults: vec![CompletedStripFault::ApexOutOfRange],
        };
    }
    let stored = cs.strip.vertex_set().union(cs.d).union(cs.z);
    if !stored.is_subset_of(g.vertices()) {
        return CompletedStripReport {
            ok: false,
            faults: vec![CompletedStripFault::OutsideGraph {
                witness: stored.difference(g.vertices()),
            }],
        };
    }
    let mut faults = Vec::new();
    if cs.strip.vertex_set().contains(cs.apex) {
        faults.push(CompletedStripFault::ApexInStrip);
    }
    let na = g.neighbours(cs.apex);
    if let Some(witness) = cs.strip.a.difference(na).min() {
        faults.push(CompletedStripFault::ApexMissesA { witness });
    }
    if let Some(witness) = na.intersection(cs.strip.b.union(cs.strip.c)).min() {
        faults.push(CompletedStripFault::ApexSeesBody { witness });
    }
    match validate_strip(g, &cs.strip, true) {
        Err(e) => faults.push(CompletedStripFault::StripInvalid(e)),
        Ok(StripCheck::Uncovered(set)) => faults.push(CompletedStripFault::StripNotCovered(set)),
        Ok(StripCheck::Covered) => {}
    }
    let expected_d = attachment_union(g, &cs.strip, cs.apex);
    if expected_d != cs.d {
        faults.push(CompletedStripFault::WrongD { expected: expected_d });
    }
    let expected_z = entry_vertices(g, &cs.strip, cs.apex, expected_d);
    if expected_z != cs.z {
        faults.push(CompletedStripFault::WrongZ { expected: expected_z });
    }
    'clique: for u in cs.z.iter() {
        for v in cs.z.iter() {
            if u < v && !g.has_edge(u, v) {
                faults.push(CompletedStripFault::ZNotClique { witness: (u, v) });
                break 'clique;
            }
        }
    }
    for z in cs.z.iter() {
        match cs.backdoors.get(&z) {
            None => faults.push(CompletedStripFault::MissingBackdoor { z }),
            Some(r) => {
                if let Err(fault) = validate_backdoor(g, &cs.strip, cs.d, z, r) {
                    faults.push(CompletedStripFault::BadBackdoor { z, fault });
                }
            }
        }
    }
    for (&key, _) in cs.backdoors.iter() {
        if !cs.z.contains(key) {
            faults.push(CompletedStripFault::StrayBackdoor { key });
        }
    }
    CompletedStripReport {
        ok: faults.is_empty(),
        faults,
    }
}

/// Complete one strip of an apex system: D and Z from their definitions,
/// then a backdoor search per Z-vertex. None when the index is out of range
/// or some Z-vertex has no backdoor within budget.
pub fn complete_strip(
    g: &Graph,
    sys: &PyramidStripSystem,
    i: usize,
    budget: Budget,
) -> Option<CompletedStrip> {
    let strip = *sys.strips.get(i)?;
    let d = attachment_union(g, &strip, sys.apex);
    let z = entry_vertices(g, &strip, sys.apex, d);
    let mut backdoors = BTreeMap::new();
    for zv in z.iter() {
        backdoors.insert(zv, find_backdoor(g, &strip, d, zv, budget)?);
    }
    Some(CompletedStrip {
        strip,
        apex: sys.apex,
        d,
        z,
        backdoors,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripToBipPrecondition {
    InvalidCompletedStrip,
    /// Fewer than three vertices avoid A∪C∪D and its neighbourhood.
    TooFewOutside,
    HasEvenHole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StripToBipCheck {
    Inapplicable(StripToBipPrecondition),
    Checked {
        ok: bool,
        /// A∪C∪D, the set the conclusion quantifies over.
        pool: VertexSet,
        /// First bisimplicial vertex in the pool.
        witness: Option<usize>,
    },
}

impl StripToBipCheck {
    pub fn to_json(&self) -> Value {
        match self {
            StripToBipCheck::Inapplicable(p) => json!({ "inapplicable": format!("{:?}", p) }),
            StripToBipCheck::Checked { ok, pool, witness } => json!({
                "ok": ok,
                "pool": pool.to_vec(),
                "witness": witness,
            }),
        }
    }
}

/// A valid completed strip in an even-hole-free graph with at least three
/// vertices clear of A∪C∪D forces a bisimplicial vertex inside A∪C∪D.
pub fn check_striptobip(g: &Graph, cs: &CompletedStrip) -> StripToBipCheck {
    use StripToBipPrecondition::*;
    if !check_completed_strip(g, cs).ok {
        return StripToBipCheck::Inapplicable(InvalidCompletedStrip);
    }
    let pool = cs.strip.a.union(cs.strip.c).union(cs.d);
    let free = g
        .vertices()
        .difference(pool)
        .difference(g.neighbourhood_of_set(pool));
    if free.len() < 3 {
        return StripToBipCheck::Inapplicable(TooFewOutside);
    }
    if !is_even_hole_free(g) {
        return StripToBipCheck::Inapplicable(HasEvenHole);
    }
    let witness = bisimplicial_vertices(g).intersection(pool).min();
    StripToBipCheck::Checked {
        ok: witness.is_some(),
        pool,
        witness,
    }
}
