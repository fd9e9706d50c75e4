//! Bisimplicial vertices and the statement-level clique/outside checker.
//!
//! A vertex is bisimplicial when its neighbourhood is the union of two
//! cliques. Equivalently the complement of the graph induced on the
//! neighbourhood is bipartite, which is what we test: O(deg²) per vertex
//! and exact.

use std::collections::VecDeque;

use serde_json::{json, Value};

use crate::detect::is_even_hole_free;
use crate::graph::{Graph, VertexSet};

/// Two-clique split of `N(v)`, or none. The two parts may be empty; their
/// union is exactly the neighbourhood.
pub fn bisimplicial_split(g: &Graph, v: usize) -> Option<(VertexSet, VertexSet)> {
    let nbrs = g.neighbours(v).to_vec();
    let d = nbrs.len();
    let mut missing: Vec<Vec<usize>> = vec![Vec::new(); d];
    for i in 0..d {
        for j in i + 1..d {
            if !g.has_edge(nbrs[i], nbrs[j]) {
                missing[i].push(j);
                missing[j].push(i);
            }
        }
    }
    // 2-colour the non-edges; each colour class is then a clique.
    let mut colour: Vec<Option<bool>> = vec![None; d];
    for start in 0..d {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &w in &missing[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut parts = (VertexSet::EMPTY, VertexSet::EMPTY);
    for (i, c) in colour.iter().enumerate() {
        if c.unwrap() {
            parts.1.insert(nbrs[i]);
        } else {
            parts.0.insert(nbrs[i]);
        }
    }
    Some(parts)
}

pub fn is_bisimplicial(g: &Graph, v: usize) -> bool {
    bisimplicial_split(g, v).is_some()
}

pub fn bisimplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| is_bisimplicial(g, v)).collect()
}

/// Verdict on one (graph, clique) instance: given the clique `K`, the set
/// `M` of vertices outside `K` with no neighbour in `K` must contain a
/// bisimplicial vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremVerdict {
    pub holds: bool,
    pub clique_k: VertexSet,
    pub set_m: VertexSet,
    pub witness: Option<usize>,
    pub violation_graph: Option<Graph>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MainInapplicable {
    KTooLarge,
    KNotClique,
    MEmpty,
    HasEvenHole,
}

/// Preconditions are reported, not panicked on, so sweeps can count them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MainTheoremCheck {
    Inapplicable(MainInapplicable),
    Checked(MainTheoremVerdict),
}

impl MainTheoremCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MainTheoremCheck::Checked(v) if v.holds)
    }
}

/// Check one instance: `k` a clique with at most two vertices in an
/// even-hole-free graph. The caller owns quantification over cliques.
pub fn check_main_theorem(g: &Graph, k: VertexSet) -> MainTheoremCheck {
    if k.len() > 2 {
        return MainTheoremCheck::Inapplicable(MainInapplicable::KTooLarge);
    }
    if !g.is_clique(k) {
        return MainTheoremCheck::Inapplicable(MainInapplicable::KNotClique);
    }
    let m: VertexSet = (0..g.n())
        .filter(|&v| !k.contains(v) && g.neighbours(v).intersection(k).is_empty())
        .collect();
    if m.is_empty() {
        return MainTheoremCheck::Inapplicable(MainInapplicable::MEmpty);
    }
    if !is_even_hole_free(g) {
        return MainTheoremCheck::Inapplicable(MainInapplicable::HasEvenHole);
    }
    let witness = m.iter().find(|&v| is_bisimplicial(g, v));
    match witness {
        Some(w) => MainTheoremCheck::Checked(MainTheoremVerdict {
            holds: true,
            clique_k: k,
            set_m: m,
            witness: Some(w),
            violation_graph: None,
        }),
        None => MainTheoremCheck::Checked(MainTheoremVerdict {
            holds: false,
            clique_k: k,
            set_m: m,
            witness: None,
            violation_graph: Some(g.clone()),
        }),
    }
}

impl MainTheoremVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "clique_K": self.clique_k.to_vec(),
            "set_M": self.set_m.to_vec(),
            "witness": self.witness,
            "violation_graph": self.violation_graph.as_ref().map(|g| json!({
                "n": g.n(),
                "edges": g.edges(),
            })),
        })
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
    fn cycle_and_wheel_and_clique() {
        let c5 = Graph::cycle(5);
        assert_eq!(bisimplicial_vertices(&c5), c5.vertices());

        let w = wheel5();
        assert_eq!(bisimplicial_vertices(&w), VertexSet::full(5));
        assert!(!is_bisimplicial(&w, 5));

        let k6 = Graph::complete(6);
        assert_eq!(bisimplicial_vertices(&k6), k6.vertices());

        assert_eq!(bisimplicial_vertices(&Graph::empty(0)), VertexSet::EMPTY);
    }

    #[test]
    fn split_parts_are_cliques_covering_the_neighbourhood() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4), (1, 5), (4, 6)],
        );
        let (p, q) = bisimplicial_split(&g, 0).expect("two triangles around 0");
        assert_eq!(p.union(q), g.neighbours(0));
        assert!(p.intersection(q).is_empty());
        assert!(g.is_clique(p) && g.is_clique(q));
    }

    #[test]
    fn matches_subset_oracle_exhaustively_on_five_vertices() {
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
                assert_eq!(
                    is_bisimplicial(&g, v),
                    oracle::is_bisimplicial(&g, v),
                    "mask {mask} vertex {v}"
                );
            }
        }
    }

    #[test]
    fn simplicial_implies_bisimplicial() {
        // Pendant vertex and clique corner both have clique neighbourhoods.
        let mut g = Graph::complete(4);
        let mut h = Graph::empty(5);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, 4);
        g = h;
        for v in 0..5 {
            let nbrs = g.neighbours(v);
            if g.is_clique(nbrs) {
                assert!(is_bisimplicial(&g, v));
            }
        }
    }

    #[test]
    fn main_theorem_on_the_five_cycle() {
        let c5 = Graph::cycle(5);
        let check = check_main_theorem(&c5, VertexSet::EMPTY);
        match &check {
            MainTheoremCheck::Checked(v) => {
                assert!(v.holds);
                assert_eq!(v.set_m, c5.vertices());
                assert_eq!(v.witness, Some(0));
            }
            other => panic!("unexpected {other:?}"),
        }

        let k: VertexSet = [0usize, 1].into_iter().collect();
        let check = check_main_theorem(&c5, k);
        match &check {
            MainTheoremCheck::Checked(v) => {
                assert!(v.holds);
                assert_eq!(v.set_m, VertexSet::singleton(3));
                assert_eq!(v.witness, Some(3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn main_theorem_preconditions() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            check_main_theorem(&c4, VertexSet::EMPTY),
            MainTheoremCheck::Inapplicable(MainInapplicable::HasEvenHole)
        );
        let c5 = Graph::cycle(5);
        let nonedge: VertexSet = [0usize, 2].into_iter().collect();
        assert_eq!(
            check_main_theorem(&c5, nonedge),
            MainTheoremCheck::Inapplicable(MainInapplicable::KNotClique)
        );
        let triple: VertexSet = [0usize, 1, 2].into_iter().collect();
        assert_eq!(
            check_main_theorem(&Graph::complete(4), triple),
            MainTheoremCheck::Inapplicable(MainInapplicable::KTooLarge)
        );
        let k2 = Graph::complete(2);
        assert_eq!(
            check_main_theorem(&k2, VertexSet::singleton(0)),
            MainTheoremCheck::Inapplicable(MainInapplicable::MEmpty)
        );
    }

    #[test]
    fn verdict_serializes_with_sorted_keys() {
        let c5 = Graph::cycle(5);
        let check = check_main_theorem(&c5, VertexSet::EMPTY);
        let MainTheoremCheck::Checked(v) = check else {
            panic!()
        };
        let s = serde_json::to_string(&v.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"clique_K":[],"holds":true,"set_M":[0,1,2,3,4],"violation_graph":null,"witness":0}"#
        );
    }
}
