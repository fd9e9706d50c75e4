//! Targeted instance generators for the decomposition suites.
//!
//! Both families work propose-then-filter: build a structured candidate,
//! keep it only if it is even-hole-free (and, for apex systems, small enough
//! to certify by exhaustive scan). Everything is deterministic; no RNG.

use crate::detect::is_even_hole_free;
use crate::graph::{Graph, VertexSet};
use crate::harness::enumerate::{all_trees, EnumerationError};
use crate::strips::{assess_bipartition, build_extended_tree_line_graph, CrossEdgeContext};

/// A graph with a designated cross-edge, grown from a tree line graph.
/// Undecorated bases keep the builder's seed context; decorated graphs
/// carry none and callers re-search.
#[derive(Clone, Debug)]
pub struct TreeContextInstance {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    pub seed: Option<CrossEdgeContext>,
}

fn add_vertex(g: &Graph, nbrs: &[usize]) -> Graph {
    let mut h = Graph::empty(g.n() + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for &u in nbrs {
        h.add_edge(u, g.n());
    }
    h
}

fn add_path(g: &Graph, site: usize, len: usize) -> Graph {
    let mut h = g.clone();
    let mut hook = site;
    for _ in 0..len {
        h = add_vertex(&h, &[hook]);
        hook = h.n() - 1;
    }
    h
}

fn add_twin(g: &Graph, x: usize) -> Graph {
    let nbrs: Vec<usize> = g.neighbours(x).with(x).iter().collect();
    add_vertex(g, &nbrs)
}

/// Instances for the tree-shaped strip suites: every valid side assignment
/// of every tree with at most `max_edges` edges, plus (optionally) decorated
/// variants hanging extra structure off the strip vertices. Only
/// even-hole-free graphs are returned.
pub fn tree_strip_family(
    max_edges: usize,
    augment: bool,
) -> Result<Vec<TreeContextInstance>, EnumerationError> {
    let trees = all_trees(max_edges + 1)?;
    let mut out = Vec::new();
    for t in &trees {
        if t.n() < 4 {
            continue;
        }
        for side_bits in 0u64..(1 << t.n()) {
            let side_a: VertexSet = (0..t.n()).filter(|&v| side_bits >> v & 1 == 1).collect();
            let Ok(tl) = build_extended_tree_line_graph(t, side_a) else {
                continue;
            };
            if !assess_bipartition(t, side_a).both() || !is_even_hole_free(&tl.graph) {
                continue;
            }
            let m = tl.a; // strip vertices are 0..m
            out.push(TreeContextInstance {
                graph: tl.graph.clone(),
                a: tl.a,
                b: tl.b,
                seed: Some(tl.context.clone()),
            });
            if !augment {
                continue;
            }
            let g = &tl.graph;
            let mut variants: Vec<Graph> = Vec::new();
            for s in 0..m {
                variants.push(add_path(g, s, 1));
                variants.push(add_path(g, s, 2));
                variants.push(add_vertex(g, &[tl.a, tl.b, s]));
                variants.push(add_twin(g, s));
            }
            variants.push(add_vertex(g, &[tl.a, tl.b]));
            let mut tabs = 0;
            for (u, v) in g.edges() {
                if v < m && tabs < 8 {
                    variants.push(add_vertex(g, &[u, v]));
                    tabs += 1;
                }
            }
            for h in variants {
                if is_even_hole_free(&h) {
                    out.push(TreeContextInstance {
                        graph: h,
                        a: tl.a,
                        b: tl.b,
                        seed: None,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A graph with a designated splendid root for the apex strip suites.
#[derive(Clone, Debug)]
pub struct PyramidInstance {
    pub graph: Graph,
    pub apex: usize,
}

/// Exhaustive certification assigns each root neighbour one of two roles and
/// everything else one of three; keep instances under this product so the
/// suites certify every system instead of caveating.
const SCAN_CAP: u64 = 3_000_000;

pub fn scan_estimate(g: &Graph, apex: usize) -> u64 {
    let deg = g.degree(apex) as u32;
    let nonadj = (g.n() - 1 - deg as usize) as u32;
    if nonadj > 24 {
        return u64::MAX;
    }
    2u64.saturating_pow(deg).saturating_mul(3u64.saturating_pow(nonadj))
}

/// Root, then one run of vertices per strip (top, interior chain, bottom),
/// bottoms pairwise adjacent. All rung lengths share a parity, so every
/// through-root cycle is odd.
fn pyramid_base(lengths: &[usize]) -> (Graph, Vec<Vec<usize>>) {
    let n = 1 + lengths.iter().map(|l| l + 1).sum::<usize>();
    let mut g = Graph::empty(n);
    let mut strips = Vec::new();
    let mut next = 1;
    for &l in lengths {
        let verts: Vec<usize> = (next..next + l + 1).collect();
        next += l + 1;
        g.add_edge(0, verts[0]);
        for w in verts.windows(2) {
            g.add_edge(w[0], w[1]);
        }
        strips.push(verts);
    }
    for i in 0..strips.len() {
        for j in i + 1..strips.len() {
            g.add_edge(*strips[i].last().unwrap(), *strips[j].last().unwrap());
        }
    }
    (g, strips)
}

const PYRAMID_BASES: &[&[usize]] = &[
    &[1, 1, 1],
    &[1, 1, 3],
    &[1, 3, 3],
    &[3, 3, 3],
    &[1, 1, 5],
    &[1, 3, 5],
    &[1, 5, 5],
    &[3, 3, 5],
    &[2, 2, 2],
    &[2, 2, 4],
    &[2, 4, 4],
    &[4, 4, 4],
    &[2, 2, 6],
    &[1, 1, 1, 1],
    &[1, 1, 1, 3],
    &[1, 1, 3, 3],
    &[1, 3, 3, 3],
    &[2, 2, 2, 2],
    &[2, 2, 2, 4],
    &[1, 1, 1, 1, 1],
    &[1, 1, 1, 1, 3],
    &[1, 1, 1, 3, 3],
    &[2, 2, 2, 2, 2],
    &[1, 1, 1, 1, 1, 1],
];

/// Single-vertex (or short-path) attachments that leave the root's closed
/// neighbourhood alone, so the splendid clauses survive: they hang off strip
/// bodies, never off the root or a top.
#[derive(Clone, Copy)]
enum Hang {
    Pendant(usize),
    Path2(usize),
    Path3(usize),
    Tab(usize, usize),
    Twin(usize),
}

fn apply_hang(g: &Graph, h: Hang) -> Graph {
    match h {
        Hang::Pendant(s) => add_path(g, s, 1),
        Hang::Path2(s) => add_path(g, s, 2),
        Hang::Path3(s) => add_path(g, s, 3),
        Hang::Tab(x, y) => add_vertex(g, &[x, y]),
        Hang::Twin(x) => add_twin(g, x),
    }
}

fn hangs_for(strips: &[Vec<usize>]) -> Vec<Hang> {
    let mut out = Vec::new();
    let bodies: Vec<usize> = strips.iter().flat_map(|s| s[1..].iter().copied()).collect();
    for &s in &bodies {
        out.push(Hang::Pendant(s));
    }
    for &s in &bodies {
        out.push(Hang::Path2(s));
    }
    for &s in &bodies {
        out.push(Hang::Path3(s));
    }
    for s in strips {
        for w in s.windows(2) {
            out.push(Hang::Tab(w[0], w[1]));
        }
    }
    for i in 0..strips.len() {
        for j in i + 1..strips.len() {
            out.push(Hang::Tab(
                *strips[i].last().unwrap(),
                *strips[j].last().unwrap(),
            ));
        }
    }
    for s in strips {
        out.push(Hang::Twin(s[0]));
        out.push(Hang::Twin(*s.last().unwrap()));
    }
    out
}

/// Extra root neighbours shaped after the four attachment types the
/// classification names, plus one deliberately trapped probe.
fn apex_variants(g: &Graph, strips: &[Vec<usize>]) -> Vec<Graph> {
    let tops: Vec<usize> = strips.iter().map(|s| s[0]).collect();
    let bottoms: Vec<usize> = strips.iter().map(|s| *s.last().unwrap()).collect();
    let k = strips.len();
    let mut out = Vec::new();

    // complete to the tops with an escape into the first body
    let mut nbrs = vec![0];
    nbrs.extend(&tops);
    nbrs.push(strips[0][1]);
    out.push(add_vertex(g, &nbrs));

    // dominates all tops but one, reaching the skipped strip via a hung leaf
    for i in 0..k {
        let with_leaf = apply_hang(g, Hang::Pendant(strips[i][1]));
        let mut nbrs = vec![0];
        nbrs.extend(tops.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &t)| t));
        nbrs.push(with_leaf.n() - 1);
        out.push(add_vertex(&with_leaf, &nbrs));
    }

    // avoids one strip entirely, touches every other bottom
    for i in 0..k {
        let mut nbrs = vec![0];
        nbrs.extend(bottoms.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &b)| b));
        out.push(add_vertex(g, &nbrs));
    }

    // dominates all tops but one and reaches the base through a private path
    for i in 0..k.min(2) {
        let mut nbrs = vec![0];
        nbrs.extend(tops.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &t)| t));
        let h = add_vertex(g, &nbrs);
        out.push(add_vertex(&h, &[h.n() - 1, bottoms[i]]));
    }

    // complete to the tops with no escape: a trapped neighbour
    let mut nbrs = vec![0];
    nbrs.extend(&tops);
    out.push(add_vertex(g, &nbrs));

    out
}

/// The apex strip system family: same-parity rung bundles through a root,
/// decorated with pendants, tabs and twins on the strip bodies and with
/// shaped extra root neighbours. Pairs of decorations are capped per base to
/// keep suite runtimes flat.
pub fn pyramid_family() -> Vec<PyramidInstance> {
    let mut out = Vec::new();
    for lengths in PYRAMID_BASES {
        let (g, strips) = pyramid_base(lengths);
        let singles = hangs_for(&strips);
        let mut candidates: Vec<Graph> = vec![g.clone()];
        candidates.extend(singles.iter().map(|&h| apply_hang(&g, h)));
        let mut pairs = 0;
        'pairing: for (i, &h1) in singles.iter().enumerate() {
            for &h2 in &singles[i + 1..] {
                if pairs == 40 {
                    break 'pairing;
                }
                candidates.push(apply_hang(&apply_hang(&g, h1), h2));
                pairs += 1;
            }
        }
        candidates.extend(apex_variants(&g, &strips));
        for cand in candidates {
            if scan_estimate(&cand, 0) <= SCAN_CAP && is_even_hole_free(&cand) {
                out.push(PyramidInstance {
                    graph: cand,
                    apex: 0,
                });
            }
        }
    }
    out
}
