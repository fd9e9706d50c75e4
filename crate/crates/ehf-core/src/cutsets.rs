//! Star cutsets, the splendid predicate, and the hole-neighbourhood
//! trichotomy checker.

use serde_json::{json, Value};

use crate::detect::{find_pyramid, Certificate};
use crate::graph::{Graph, Path, VertexSet};

/// Splitting `V(G) \ C` into two nonempty anticomplete halves. With more
/// than two components the first (by smallest member) stands alone and the
/// rest are merged.
pub fn is_cutset(g: &Graph, c: VertexSet) -> Option<(VertexSet, VertexSet)> {
    let rest = g.vertices().difference(c);
    let comps = g.components_within(rest);
    if comps.len() < 2 {
        return None;
    }
    let mut tail = VertexSet::EMPTY;
    for &x in &comps[1..] {
        tail = tail.union(x);
    }
    Some((comps[0], tail))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCutsetWitness {
    pub centre: usize,
    /// The centre plus some of its neighbours.
    pub cutset: VertexSet,
    pub side_split: (VertexSet, VertexSet),
}

impl StarCutsetWitness {
    /// Re-check the witness against a graph from scratch.
    pub fn validates(&self, g: &Graph) -> bool {
        if self.centre >= g.n() || !self.cutset.contains(self.centre) {
            return false;
        }
        if !self
            .cutset
            .without(self.centre)
            .is_subset_of(g.neighbours(self.centre))
        {
            return false;
        }
        let (p, q) = self.side_split;
        !p.is_empty()
            && !q.is_empty()
            && p.intersection(q).is_empty()
            && p.union(q) == g.vertices().difference(self.cutset)
            && g.is_anticomplete_between(p, q)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "centre": self.centre,
            "cutset": self.cutset.to_vec(),
            "side_split": [self.side_split.0.to_vec(), self.side_split.1.to_vec()],
        })
    }
}

/// First vertex whose closed neighbourhood disconnects the rest.
pub fn find_full_star_cutset(g: &Graph) -> Option<StarCutsetWitness> {
    (0..g.n()).find_map(|v| {
        is_cutset(g, g.closed_neighbours(v)).map(|split| StarCutsetWitness {
            centre: v,
            cutset: g.closed_neighbours(v),
            side_split: split,
        })
    })
}

/// Degrees up to this bound are searched by subset enumeration; above it
/// the component criterion takes over.
pub const SUBSET_SEARCH_DEGREE_BOUND: usize = 12;

fn star_cutset_by_subsets(g: &Graph, v: usize) -> Option<StarCutsetWitness> {
    let nbrs = g.neighbours(v).to_vec();
    for mask in 0u64..1 << nbrs.len() {
        let mut c = VertexSet::singleton(v);
        for (i, &u) in nbrs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                c.insert(u);
            }
        }
        if let Some(split) = is_cutset(g, c) {
            return Some(StarCutsetWitness {
                centre: v,
                cutset: c,
                side_split: split,
            });
        }
    }
    None
}

/// Component criterion: a star cutset centred at v exists iff one of the
/// candidates {v} ∪ (N(v) ∩ N(X)), X a component of G\N[v], is a cutset,
/// or v dominates the graph and N(v) carries a non-edge (cut down to that
/// pair). Complete for every degree.
fn star_cutset_by_components(g: &Graph, v: usize) -> Option<StarCutsetWitness> {
    let outside = g.vertices().difference(g.closed_neighbours(v));
    if outside.is_empty() {
        let nbrs = g.neighbours(v).to_vec();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(u, w) {
                    let c = g.closed_neighbours(v).without(u).without(w);
                    let split = is_cutset(g, c)?;
                    return Some(StarCutsetWitness {
                        centre: v,
                        cutset: c,
                        side_split: split,
                    });
                }
            }
        }
        return None;
    }
    for x in g.components_within(outside) {
        let c = VertexSet::singleton(v).union(g.neighbours(v).intersection(g.neighbourhood_of_set(x)));
        if let Some(split) = is_cutset(g, c) {
            return Some(StarCutsetWitness {
                centre: v,
                cutset: c,
                side_split: split,
            });
        }
    }
    None
}

/// Star cutset search, optionally pinned to a centre. Centres ascending;
/// per centre, smallest neighbour subset first while the degree admits
/// enumeration.
pub fn find_star_cutset(g: &Graph, centre: Option<usize>) -> Option<StarCutsetWitness> {
    let centres: Vec<usize> = match centre {
        Some(v) if v < g.n() => vec![v],
        Some(_) => return None,
        None => (0..g.n()).collect(),
    };
    centres.into_iter().find_map(|v| {
        if g.degree(v) <= SUBSET_SEARCH_DEGREE_BOUND {
            star_cutset_by_subsets(g, v)
        } else {
            star_cutset_by_components(g, v)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplendidFailure {
    NotConnectedOutside,
    NeighbourTrapped,
    ShortPyramidApex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplendidWitness {
    Vertex(usize),
    Pyramid(Certificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplendidVerdict {
    pub vertex: usize,
    pub ok: bool,
    pub failed_clause: Option<SplendidFailure>,
    pub witness: Option<SplendidWitness>,
}

impl SplendidVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "vertex": self.vertex,
            "ok": self.ok,
            "failed_clause": self.failed_clause.map(|f| match f {
                SplendidFailure::NotConnectedOutside => "not-connected-outside",
                SplendidFailure::NeighbourTrapped => "neighbour-trapped",
                SplendidFailure::ShortPyramidApex => "short-pyramid-apex",
            }),
            "witness": match &self.witness {
                None => Value::Null,
                Some(SplendidWitness::Vertex(v)) => json!(v),
                Some(SplendidWitness::Pyramid(c)) => c.to_json(),
            },
        })
    }
}

/// Three clauses, first failure wins: everything beyond N[a] is one
/// nonempty connected piece; every neighbour of `a` reaches that piece;
/// and `a` is not the apex of a pyramid with exactly one short path.
pub fn is_splendid(g: &Graph, a: usize) -> SplendidVerdict {
    assert!(a < g.n());
    let fail = |clause, witness| SplendidVerdict {
        vertex: a,
        ok: false,
        failed_clause: Some(clause),
        witness,
    };
    let outside = g.vertices().difference(g.closed_neighbours(a));
    if outside.is_empty() || !g.is_connected_set(outside) {
        return fail(SplendidFailure::NotConnectedOutside, None);
    }
    for u in g.neighbours(a).iter() {
        if g.neighbours(u).intersection(outside).is_empty() {
            return fail(
                SplendidFailure::NeighbourTrapped,
                Some(SplendidWitness::Vertex(u)),
            );
        }
    }
    if let Some(cert) = find_pyramid(g, Some(a), true) {
        return fail(
            SplendidFailure::ShortPyramidApex,
            Some(SplendidWitness::Pyramid(cert)),
        );
    }
    SplendidVerdict {
        vertex: a,
        ok: true,
        failed_clause: None,
        witness: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrichotomyOutcome {
    /// N[a] disconnects the graph, so the statement's hypothesis fails.
    Inapplicable,
    Holds,
    Fails,
}

/// How a vertex off a hole may see it: completely or not at all, along one
/// contiguous arc, or in exactly three spots two of which are consecutive.
pub fn check_hole_neighbourhood_trichotomy(
    g: &Graph,
    hole: &Path,
    a: usize,
) -> Result<TrichotomyOutcome, String> {
    if a >= g.n() {
        return Err("vertex out of range".into());
    }
    if !hole.is_hole_of(g) {
        return Err("not a hole of the graph".into());
    }
    let hole_set = hole.vertex_set();
    if hole_set.contains(a) {
        return Err("vertex lies on the hole".into());
    }
    if is_cutset(g, g.closed_neighbours(a)).is_some() {
        return Ok(TrichotomyOutcome::Inapplicable);
    }
    let x = g.neighbours(a).intersection(hole_set);
    let k = hole.0.len();
    let complete_or_anticomplete = x.is_empty() || x == hole_set;
    // Arc count on the cycle: entries into x as we walk around.
    let arcs = (0..k)
        .filter(|&i| !x.contains(hole.0[i]) && x.contains(hole.0[(i + 1) % k]))
        .count();
    let one_arc = arcs == 1;
    let three_with_pair = x.len() == 3
        && (0..k).any(|i| x.contains(hole.0[i]) && x.contains(hole.0[(i + 1) % k]));
    if complete_or_anticomplete || one_arc || three_with_pair {
        Ok(TrichotomyOutcome::Holds)
    } else {
        Ok(TrichotomyOutcome::Fails)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn wheel5() -> Graph {
        let mut g = Graph::empty(6);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(v, 5);
        }
        g
    }

    #[test]
    fn cutset_splitting() {
        let p5 = Graph::path(5);
        let split = is_cutset(&p5, VertexSet::singleton(2)).unwrap();
        assert_eq!(split.0, [0usize, 1].into_iter().collect());
        assert_eq!(split.1, [3usize, 4].into_iter().collect());

        assert!(is_cutset(&Graph::cycle(5), VertexSet::singleton(0)).is_none());
        let c5 = Graph::cycle(5);
        assert!(is_cutset(&c5, c5.vertices()).is_none());

        // Three components: first stands alone, rest merged.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let split = is_cutset(&star, VertexSet::singleton(0)).unwrap();
        assert_eq!(split.0, VertexSet::singleton(1));
        assert_eq!(split.1, [2usize, 3].into_iter().collect());
    }

    #[test]
    fn full_star_cutsets() {
        let w = find_full_star_cutset(&Graph::path(5)).expect("middle of P5");
        assert_eq!(w.centre, 2);
        assert!(w.validates(&Graph::path(5)));
        assert!(find_full_star_cutset(&Graph::cycle(5)).is_none());
        assert!(find_full_star_cutset(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn star_cutsets_small_cases() {
        let p4 = Graph::path(4);
        let w = find_star_cutset(&p4, Some(1)).expect("b alone cuts P4");
        assert_eq!(w.cutset, VertexSet::singleton(1));
        assert_eq!(w.side_split.0, VertexSet::singleton(0));
        assert!(w.validates(&p4));

        assert!(find_star_cutset(&Graph::complete(4), None).is_none());

        let w = find_star_cutset(&wheel5(), Some(5)).expect("hub star cutset");
        assert_eq!(w.cutset, [5usize, 0, 2].into_iter().collect());
        assert_eq!(w.side_split.0, VertexSet::singleton(1));
        assert_eq!(w.side_split.1, [3usize, 4].into_iter().collect());
        // Same enumeration order as the exhaustive oracle.
        assert_eq!(Some(w.cutset), oracle::star_cutset_subsets(&wheel5(), 5));
    }

    #[test]
    fn component_criterion_matches_exhaustive_search() {
        for mask in 0u64..(1 << 10) {
            let mut g = Graph::empty(5);
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            for v in 0..5 {
                let exhaustive = oracle::star_cutset_subsets(&g, v).is_some();
                let criterion = star_cutset_by_components(&g, v).is_some();
                assert_eq!(exhaustive, criterion, "mask {mask} centre {v}");
                if let Some(w) = star_cutset_by_components(&g, v) {
                    assert!(w.validates(&g), "mask {mask} centre {v}");
                }
            }
        }
    }

    #[test]
    fn splendid_clauses_in_order() {
        let c5 = Graph::cycle(5);
        for a in 0..5 {
            assert!(is_splendid(&c5, a).ok);
        }

        let v = is_splendid(&Graph::complete(4), 0);
        assert_eq!(v.failed_clause, Some(SplendidFailure::NotConnectedOutside));

        let trapped = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]);
        let v = is_splendid(&trapped, 0);
        assert_eq!(v.failed_clause, Some(SplendidFailure::NeighbourTrapped));
        assert_eq!(v.witness, Some(SplendidWitness::Vertex(1)));

        let pyr = Graph::from_edges(
            6,
            &[(0, 1), (1, 3), (0, 2), (2, 4), (0, 5), (3, 4), (4, 5), (3, 5)],
        );
        let v = is_splendid(&pyr, 0);
        assert_eq!(v.failed_clause, Some(SplendidFailure::ShortPyramidApex));
        assert!(matches!(v.witness, Some(SplendidWitness::Pyramid(_))));
    }

    #[test]
    fn splendid_implies_no_full_star_cut_at_the_vertex() {
        for mask in 0u64..(1 << 10) {
            let mut g = Graph::empty(5);
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            for a in 0..5 {
                if is_splendid(&g, a).ok {
                    let outside = g.vertices().difference(g.closed_neighbours(a));
                    assert!(
                        is_cutset(&g, g.closed_neighbours(a)).is_none()
                            || (!outside.is_empty() && g.is_connected_set(outside))
                    );
                }
            }
        }
    }

    #[test]
    fn trichotomy_cases() {
        let rim = Path(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            check_hole_neighbourhood_trichotomy(&wheel5(), &rim, 5),
            Ok(TrichotomyOutcome::Holds)
        );

        let mut c6_iso = Graph::empty(7);
        for v in 0..6 {
            c6_iso.add_edge(v, (v + 1) % 6);
        }
        let hole = Path(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(
            check_hole_neighbourhood_trichotomy(&c6_iso, &hole, 6),
            Ok(TrichotomyOutcome::Holds)
        );

        // Full star cutset at the vertex: hypothesis gone.
        let mut g = Graph::cycle(5);
        let mut h = Graph::empty(8);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, 5);
        h.add_edge(5, 6);
        h.add_edge(6, 7);
        g = h;
        assert_eq!(
            check_hole_neighbourhood_trichotomy(&g, &rim, 5),
            Ok(TrichotomyOutcome::Inapplicable)
        );

        // Two scattered neighbours, no cutset: genuinely outside all three
        // alternatives (the ambient graph is not even-hole-free).
        let mut f = Graph::empty(8);
        for v in 0..6 {
            f.add_edge(v, (v + 1) % 6);
        }
        f.add_edge(6, 0);
        f.add_edge(6, 2);
        f.add_edge(7, 1);
        f.add_edge(7, 4);
        assert_eq!(
            check_hole_neighbourhood_trichotomy(&f, &hole, 6),
            Ok(TrichotomyOutcome::Fails)
        );

        assert!(check_hole_neighbourhood_trichotomy(&f, &Path(vec![0, 1, 2]), 6).is_err());
        assert!(check_hole_neighbourhood_trichotomy(&f, &hole, 0).is_err());
    }

    #[test]
    fn full_star_absence_matches_per_vertex_closed_neighbourhoods() {
        for mask in 0u64..(1 << 10) {
            let mut g = Graph::empty(5);
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            let none = find_full_star_cutset(&g).is_none();
            let per_vertex = (0..5).all(|v| is_cutset(&g, g.closed_neighbours(v)).is_none());
            assert_eq!(none, per_vertex, "mask {mask}");
        }
    }
}
