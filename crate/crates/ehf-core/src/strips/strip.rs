//! Strips: vertex-set triples (A, B, C) in which every vertex lies on a rung,
//! an induced path from A to B routed through C.

use crate::graph::{Budget, Graph, Path, VertexSet};
use serde_json::{json, Value};

/// A candidate strip. Validity (rung coverage) is checked separately by
/// [`validate_strip`]; the struct itself only carries the three sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strip {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl Strip {
    pub fn new(a: VertexSet, b: VertexSet, c: VertexSet) -> Self {
        Strip { a, b, c }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.a.union(self.b).union(self.c)
    }

    /// Proper: the two end sets do not meet.
    pub fn is_proper(&self) -> bool {
        !self.a.intersects(self.b)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "A": self.a.to_vec(),
            "B": self.b.to_vec(),
            "C": self.c.to_vec(),
        })
    }
}

/// True iff `p` is a rung of the strip: an induced path of G[A∪B∪C] whose
/// first vertex is in A, last in B, and interior in C. A single vertex counts
/// only when it lies in A∩B; for longer paths the A-end must avoid B and the
/// B-end must avoid A.
pub fn is_rung(g: &Graph, s: &Strip, p: &Path) -> bool {
    if p.0.is_empty() {
        return false;
    }
    if !p.vertex_set().is_subset_of(s.vertex_set()) {
        return false;
    }
    if !p.is_induced_path_of(g) {
        return false;
    }
    let first = p.0[0];
    let last = *p.0.last().unwrap();
    if p.len() == 0 {
        return s.a.contains(first) && s.b.contains(first);
    }
    s.a.contains(first)
        && !s.b.contains(first)
        && s.b.contains(last)
        && !s.a.contains(last)
        && p.interior().is_subset_of(s.c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripError {
    EmptyA,
    EmptyB,
    /// C meets A∪B.
    InteriorOverlapsEnds,
    /// `require_proper` was set but A∩B ≠ ∅.
    EndsOverlap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripCheck {
    Covered,
    /// Vertices of A∪B∪C on no rung.
    Uncovered(VertexSet),
}

impl StripCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, StripCheck::Covered)
    }
}

/// Every vertex of a strip must lie on some rung. Returns the set of
/// vertices violating that, found by enumerating induced A–B paths.
pub fn validate_strip(g: &Graph, s: &Strip, require_proper: bool) -> Result<StripCheck, StripError> {
    if s.a.is_empty() {
        return Err(StripError::EmptyA);
    }
    if s.b.is_empty() {
        return Err(StripError::EmptyB);
    }
    if s.c.intersects(s.a.union(s.b)) {
        return Err(StripError::InteriorOverlapsEnds);
    }
    if require_proper && !s.is_proper() {
        return Err(StripError::EndsOverlap);
    }
    Ok(coverage(g, s))
}

fn coverage(g: &Graph, s: &Strip) -> StripCheck {
    let all = s.vertex_set();
    // Single-vertex rungs cover A∩B outright.
    let mut covered = s.a.intersection(s.b);
    for p1 in s.a.difference(s.b).iter() {
        for pk in s.b.difference(s.a).iter() {
            if covered.contains(p1) && covered.contains(pk) && all.is_subset_of(covered) {
                break;
            }
            for path in g.induced_paths(p1, pk, s.c, Budget::UNLIMITED) {
                covered = covered.union(path.vertex_set());
            }
        }
    }
    if all.is_subset_of(covered) {
        StripCheck::Covered
    } else {
        StripCheck::Uncovered(all.difference(covered))
    }
}

/// All rungs of the strip, in end-pair then path-stream order. Single-vertex
/// rungs (members of A∩B) come first, ordered by vertex.
pub fn rungs(g: &Graph, s: &Strip) -> Vec<Path> {
    let mut out: Vec<Path> = s.a.intersection(s.b).iter().map(|v| Path(vec![v])).collect();
    for p1 in s.a.difference(s.b).iter() {
        for pk in s.b.difference(s.a).iter() {
            out.extend(g.induced_paths(p1, pk, s.c, Budget::UNLIMITED));
        }
    }
    out
}
