//! Brute-force reference implementations.
//!
//! Everything here quantifies over vertex subsets or whole permutation groups
//! and checks definitions directly, without calling the production search
//! code. The verification suites compare the fast implementations against
//! these on small inputs; they are deliberately simple and slow.

use crate::graph::{Graph, VertexSet};

/// All subsets of `0..n` as vertex sets, in mask order.
pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..(1 << n)).map(move |mask| (0..n).filter(move |&v| mask >> v & 1 == 1).collect())
}

/// Does `set` induce a cycle (every vertex with exactly two neighbours in the
/// set, connected)? Length 3 counts as a cycle but not as a hole.
pub fn is_induced_cycle_set(g: &Graph, set: VertexSet) -> bool {
    if set.len() < 3 {
        return false;
    }
    for v in set.iter() {
        if g.neighbours_in(v, set).len() != 2 {
            return false;
        }
    }
    g.is_connected_set(set)
}

/// All holes (induced cycles of length at least 4), as vertex sets.
pub fn holes(g: &Graph) -> Vec<VertexSet> {
    subsets(g.n())
        .filter(|&s| s.len() >= 4 && is_induced_cycle_set(g, s))
        .collect()
}

/// Walk a hole set into a cyclic order starting at its smallest vertex,
/// second vertex the smaller of the two choices.
pub fn hole_order(g: &Graph, set: VertexSet) -> Vec<usize> {
    let start = set.min().expect("nonempty hole");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbours_in(start, set).min().unwrap();
    while cur != start {
        order.push(cur);
        let next = g.neighbours_in(cur, set).without(prev).min().unwrap();
        prev = cur;
        cur = next;
    }
    order
}

pub fn has_even_hole(g: &Graph) -> bool {
    subsets(g.n()).any(|s| s.len() >= 4 && s.len() % 2 == 0 && is_induced_cycle_set(g, s))
}

/// Bisimplicial by definition: some split of N(v) into two cliques.
pub fn is_bisimplicial(g: &Graph, v: usize) -> bool {
    let nbrs: Vec<usize> = g.neighbours(v).iter().collect();
    let d = nbrs.len();
    for mask in 0u64..(1 << d) {
        let one: VertexSet = (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| nbrs[i]).collect();
        let two = g.neighbours(v).difference(one);
        if g.is_clique(one) && g.is_clique(two) {
            return true;
        }
    }
    false
}

/// Invoke `f` on every permutation of `0..n`, in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Upper-triangle adjacency code of `g` relabelled by `perm` (old vertex `v`
/// becomes `perm[v]`). Fits in a u64 for n <= 11.
pub fn relabel_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    debug_assert!(n < 2 || n * (n - 1) / 2 <= 64);
    let mut inv = [0usize; 16];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inv[i], inv[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Minimum adjacency code over all relabellings. Two graphs are isomorphic
/// iff their minimum codes agree.
pub fn min_code_all_perms(g: &Graph) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(g.n(), |perm| {
        best = best.min(relabel_code(g, perm));
    });
    best
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    min_code_all_perms(g) == min_code_all_perms(h)
}

/// Order of the automorphism group, by trying every permutation.
pub fn automorphism_count(g: &Graph) -> u64 {
    let identity = relabel_code(g, &(0..g.n()).collect::<Vec<_>>());
    let mut count = 0;
    for_each_permutation(g.n(), |perm| {
        if relabel_code(g, perm) == identity {
            count += 1;
        }
    });
    count
}

/// Theta on exactly the vertex set `set`: two nonadjacent branch vertices of
/// degree 3 joined by three internally disjoint induced paths of length at
/// least 2. Checked through the degree profile, connectivity, and the fact
/// that no single inner vertex separates the branch vertices.
pub fn theta_on(g: &Graph, set: VertexSet) -> bool {
    if set.len() < 5 {
        return false;
    }
    let mut deg3 = VertexSet::EMPTY;
    for v in set.iter() {
        match g.neighbours_in(v, set).len() {
            2 => {}
            3 => deg3.insert(v),
            _ => return false,
        }
    }
    if deg3.len() != 2 {
        return false;
    }
    let mut it = deg3.iter();
    let (s, t) = (it.next().unwrap(), it.next().unwrap());
    if g.has_edge(s, t) || !g.is_connected_set(set) {
        return false;
    }
    for v in set.difference(deg3).iter() {
        let rest = set.without(v);
        let comps = g.components_within(rest);
        if !comps.iter().any(|c| c.contains(s) && c.contains(t)) {
            return false;
        }
    }
    true
}

pub fn exists_theta(g: &Graph) -> bool {
    subsets(g.n()).any(|s| theta_on(g, s))
}

/// Follow the chain of internally degree-2 vertices from `start`'s neighbour
/// `first`, stopping when a vertex of `stops` is reached. Returns the walked
/// path including both ends, or None if the walk branches or dead-ends.
fn walk_chain(
    g: &Graph,
    set: VertexSet,
    start: usize,
    first: usize,
    stops: VertexSet,
    used: &mut VertexSet,
) -> Option<Vec<usize>> {
    let mut path = vec![start, first];
    let mut prev = start;
    let mut cur = first;
    loop {
        if stops.contains(cur) {
            return Some(path);
        }
        if used.contains(cur) {
            return None;
        }
        used.insert(cur);
        let next = g.neighbours_in(cur, set).without(prev);
        if next.len() != 1 {
            return None;
        }
        let nxt = next.min().unwrap();
        path.push(nxt);
        prev = cur;
        cur = nxt;
    }
}

/// Pyramid on exactly `set`: apex joined to a triangle by three paths meeting
/// only at the apex, at most one of length 1, with the union induced.
/// `apex` pins the apex; `short_only` demands exactly one length-1 path.
pub fn pyramid_on(g: &Graph, set: VertexSet, apex: Option<usize>, short_only: bool) -> bool {
    for a in set.iter() {
        if let Some(want) = apex {
            if a != want {
                continue;
            }
        }
        let nbrs = g.neighbours_in(a, set);
        if nbrs.len() != 3 {
            continue;
        }
        // Candidate base triangles inside the set, avoiding the apex.
        let rest = set.without(a);
        let tri_candidates: Vec<VertexSet> = subsets_of(rest)
            .filter(|&t| t.len() == 3 && g.is_clique(t))
            .collect();
        'tri: for &tri in &tri_candidates {
            let mut used = VertexSet::singleton(a).union(tri);
            let mut paths = Vec::new();
            for x in nbrs.iter() {
                if tri.contains(x) {
                    paths.push(vec![a, x]);
                    continue;
                }
                let mut inner = used;
                let Some(p) = walk_chain(g, set, a, x, tri, &mut inner) else {
                    continue 'tri;
                };
                used = inner.union(p.iter().copied().collect());
                paths.push(p);
            }
            let ends: VertexSet = paths.iter().map(|p| *p.last().unwrap()).collect();
            if ends != tri {
                continue;
            }
            if used != set {
                continue;
            }
            let long = paths.iter().filter(|p| p.len() >= 3).count();
            if long < 2 {
                continue;
            }
            if short_only && long != 2 {
                continue;
            }
            let expect: usize = 3 + paths.iter().map(|p| p.len() - 1).sum::<usize>();
            let (sub, _) = g.induced(set);
            if sub.edge_count() == expect {
                return true;
            }
        }
    }
    false
}

fn subsets_of(set: VertexSet) -> impl Iterator<Item = VertexSet> {
    let members: Vec<usize> = set.iter().collect();
    let k = members.len();
    (0u64..(1 << k)).map(move |mask| {
        (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect()
    })
}

pub fn exists_pyramid(g: &Graph, apex: Option<usize>, short_only: bool) -> bool {
    subsets(g.n()).any(|s| pyramid_on(g, s, apex, short_only))
}

/// Near-prism on exactly `set`. Returns the three paths (first triangle to
/// second) on success. The triangles may share their third corner, in which
/// case the third path is that single vertex.
pub fn near_prism_on(g: &Graph, set: VertexSet) -> Option<[Vec<usize>; 3]> {
    let triangles: Vec<VertexSet> = subsets_of(set)
        .filter(|&t| t.len() == 3 && g.is_clique(t))
        .collect();
    for (i, &ta) in triangles.iter().enumerate() {
        for &tb in &triangles[i + 1..] {
            let shared = ta.intersection(tb);
            if shared.len() > 1 {
                continue;
            }
            if let Some(paths) = near_prism_with_triangles(g, set, ta, tb) {
                return Some(paths);
            }
        }
    }
    None
}

fn near_prism_with_triangles(
    g: &Graph,
    set: VertexSet,
    ta: VertexSet,
    tb: VertexSet,
) -> Option<[Vec<usize>; 3]> {
    let shared = ta.intersection(tb);
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut used = ta.union(tb);
    let mut hit = VertexSet::EMPTY;
    for a in ta.difference(shared).iter() {
        let exits = g.neighbours_in(a, set).difference(ta);
        // Exactly one way out of the triangle along this corner's path.
        let mut found = None;
        for x in exits.iter() {
            if tb.contains(x) {
                if found.is_some() {
                    return None;
                }
                found = Some(vec![a, x]);
            } else {
                if found.is_some() {
                    return None;
                }
                let mut inner = used;
                let p = walk_chain(g, set, a, x, tb, &mut inner)?;
                used = inner;
                found = Some(p);
            }
        }
        let p = found?;
        let end = *p.last().unwrap();
        if shared.contains(end) || hit.contains(end) {
            return None;
        }
        hit.insert(end);
        used = used.union(p.iter().copied().collect());
        paths.push(p);
    }
    if let Some(s) = shared.min() {
        paths.push(vec![s]);
    }
    if used != set {
        return None;
    }
    let expect: usize = 6 + paths.iter().map(|p| p.len() - 1).sum::<usize>();
    let (sub, _) = g.induced(set);
    if sub.edge_count() != expect {
        return None;
    }
    let arr: [Vec<usize>; 3] = paths.try_into().ok()?;
    Some(arr)
}

pub fn exists_near_prism(g: &Graph) -> bool {
    subsets(g.n()).any(|s| s.len() >= 5 && near_prism_on(g, s).is_some())
}

/// Wheel on exactly `set`: a hole plus a centre with at least three
/// neighbours on it; a centre with exactly three must have no two adjacent.
pub fn wheel_on(g: &Graph, set: VertexSet, even_only: bool) -> bool {
    for c in set.iter() {
        let hole = set.without(c);
        if hole.len() < 4 || !is_induced_cycle_set(g, hole) {
            continue;
        }
        let spokes = g.neighbours_in(c, hole);
        if spokes.len() < 3 {
            continue;
        }
        if spokes.len() == 3 {
            let mut pairs_adjacent = false;
            for u in spokes.iter() {
                if g.neighbours_in(u, spokes).len() > 0 {
                    pairs_adjacent = true;
                }
            }
            if pairs_adjacent {
                continue;
            }
        }
        if even_only && spokes.len() % 2 != 0 {
            continue;
        }
        return true;
    }
    false
}

pub fn exists_wheel(g: &Graph, even_only: bool) -> bool {
    subsets(g.n()).any(|s| wheel_on(g, s, even_only))
}

/// Extended near-prism on exactly `set`: a near-prism plus one edge joining
/// the interiors of two different paths. `cross` pins the extra edge;
/// `end` pins one end of it.
pub fn extended_near_prism_on(
    g: &Graph,
    set: VertexSet,
    cross: Option<(usize, usize)>,
    end: Option<usize>,
) -> bool {
    let mut pairs = Vec::new();
    match cross {
        Some((a, b)) => pairs.push((a, b)),
        None => {
            for a in set.iter() {
                for b in g.neighbours_in(a, set).iter() {
                    if b > a {
                        pairs.push((a, b));
                    }
                }
            }
        }
    }
    for (a, b) in pairs {
        if let Some(want) = end {
            if a != want && b != want {
                continue;
            }
        }
        if !set.contains(a) || !set.contains(b) || !g.has_edge(a, b) {
            continue;
        }
        let mut cut = g.clone();
        cut.remove_edge(a, b);
        if let Some(paths) = near_prism_on(&cut, set) {
            let in_interior = |p: &Vec<usize>, v: usize| p.len() > 2 && p[1..p.len() - 1].contains(&v);
            let mut ia = None;
            let mut ib = None;
            for (i, p) in paths.iter().enumerate() {
                if in_interior(p, a) {
                    ia = Some(i);
                }
                if in_interior(p, b) {
                    ib = Some(i);
                }
            }
            if let (Some(x), Some(y)) = (ia, ib) {
                if x != y {
                    return true;
                }
            }
        }
    }
    false
}

pub fn exists_extended_near_prism(
    g: &Graph,
    cross: Option<(usize, usize)>,
    end: Option<usize>,
) -> bool {
    subsets(g.n()).any(|s| extended_near_prism_on(g, s, cross, end))
}

/// Star cutset with centre `v` by exhaustive subset search over N(v).
pub fn star_cutset_subsets(g: &Graph, v: usize) -> Option<VertexSet> {
    let nbrs: Vec<usize> = g.neighbours(v).iter().collect();
    let d = nbrs.len();
    for mask in 0u64..(1 << d) {
        let mut cut = VertexSet::singleton(v);
        for (i, &u) in nbrs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                cut.insert(u);
            }
        }
        let rest = g.vertices().difference(cut);
        if !rest.is_empty() && g.components_within(rest).len() >= 2 {
            return Some(cut);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // Outer C5, inner 5-star polygon, spokes.
        let mut g = Graph::empty(10);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(5 + v, 5 + (v + 2) % 5);
            g.add_edge(v, 5 + v);
        }
        g
    }

    #[test]
    fn c5_and_c6_holes() {
        assert!(!has_even_hole(&Graph::cycle(5)));
        assert!(has_even_hole(&Graph::cycle(6)));
        assert_eq!(holes(&Graph::cycle(5)).len(), 1);
        assert!(holes(&Graph::complete(5)).is_empty());
    }

    #[test]
    fn petersen_has_even_holes() {
        // Girth 5, but six-cycles are induced.
        assert!(has_even_hole(&petersen()));
    }

    #[test]
    fn hole_ordering_walks_cycle() {
        let g = Graph::cycle(6);
        let order = hole_order(&g, g.vertices());
        assert_eq!(order, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn bisimplicial_on_wheel_rim() {
        // 5-wheel: rim C5 (0..5), hub 5.
        let mut g = Graph::cycle(5);
        let mut w = Graph::empty(6);
        for (u, v) in g.edges() {
            w.add_edge(u, v);
        }
        for v in 0..5 {
            w.add_edge(v, 5);
        }
        g = w;
        // Rim vertex: neighbours are two rim (nonadjacent) plus hub; hub is
        // adjacent to both, so {rim1, hub} and {rim2} are cliques.
        for v in 0..5 {
            assert!(is_bisimplicial(&g, v));
        }
        // Hub: N = C5, needs two cliques covering a 5-cycle: impossible.
        assert!(!is_bisimplicial(&g, 5));
    }

    #[test]
    fn permutation_codes_detect_isomorphism() {
        let p4 = Graph::path(4);
        let p4b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert!(isomorphic(&p4, &p4b));
        assert!(!isomorphic(&p4, &Graph::cycle(4)));
        assert_eq!(automorphism_count(&p4), 2);
        assert_eq!(automorphism_count(&Graph::complete(4)), 24);
        assert_eq!(automorphism_count(&Graph::cycle(5)), 10);
    }

    #[test]
    fn theta_k23() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(theta_on(&g, g.vertices()));
        assert!(exists_theta(&g));
        assert!(!exists_theta(&Graph::cycle(6)));
    }

    #[test]
    fn theta_rejects_dumbbell() {
        // Two triangles joined by a path through vertex 6: degree profile
        // matches a theta but the middle vertex is a cut vertex.
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 6), (6, 5)],
        );
        assert!(!exists_theta(&g));
    }

    #[test]
    fn pyramid_smallest() {
        // Apex 0 to triangle {3,4,5}: paths 0-3 direct impossible (two long
        // needed); use 0-1-3, 0-2-4, 0-5.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 3), (0, 2), (2, 4), (0, 5), (3, 4), (4, 5), (3, 5)],
        );
        assert!(pyramid_on(&g, g.vertices(), None, false));
        assert!(pyramid_on(&g, g.vertices(), Some(0), false));
        assert!(!pyramid_on(&g, g.vertices(), Some(3), false));
        // One path of length one: this is a short pyramid.
        assert!(pyramid_on(&g, g.vertices(), None, true));
        assert!(!exists_pyramid(&Graph::cycle(6), None, false));
    }

    #[test]
    fn prism_and_degenerate_near_prism() {
        // 3-prism.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        );
        assert!(near_prism_on(&g, g.vertices()).is_some());
        assert!(exists_near_prism(&g));

        // Two triangles sharing corner 2, the other corners joined by paths
        // through 5 and 6.
        let h = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 2), (2, 3), (0, 5), (5, 3), (1, 6), (6, 4)],
        );
        assert!(near_prism_on(&h, h.vertices()).is_some());
        assert!(!exists_near_prism(&Graph::cycle(7)));
    }

    #[test]
    fn wheels() {
        // 5-wheel is a wheel but not an even wheel (5 spokes).
        let mut w5 = Graph::cycle(5);
        let mut g = Graph::empty(6);
        for (u, v) in w5.edges() {
            g.add_edge(u, v);
        }
        for v in 0..5 {
            g.add_edge(v, 5);
        }
        w5 = g;
        assert!(exists_wheel(&w5, false));
        assert!(!exists_wheel(&w5, true));

        // C6 plus centre adjacent to alternating vertices: 3 spokes, no two
        // adjacent: a wheel (and odd).
        let mut g = Graph::cycle(6);
        let mut h = Graph::empty(7);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        for v in [0, 2, 4] {
            h.add_edge(v, 6);
        }
        g = h;
        assert!(exists_wheel(&g, false));

        // Centre adjacent to four consecutive rim vertices of C6: even wheel.
        let mut g2 = Graph::cycle(6);
        let mut h2 = Graph::empty(7);
        for (u, v) in g2.edges() {
            h2.add_edge(u, v);
        }
        for v in [0, 1, 2, 3] {
            h2.add_edge(v, 6);
        }
        g2 = h2;
        assert!(exists_wheel(&g2, true));

        // Three spokes with two adjacent is not a wheel.
        let mut g3 = Graph::cycle(5);
        let mut h3 = Graph::empty(6);
        for (u, v) in g3.edges() {
            h3.add_edge(u, v);
        }
        for v in [0, 1, 3] {
            h3.add_edge(v, 5);
        }
        g3 = h3;
        assert!(!exists_wheel(&g3, false));
    }

    #[test]
    fn extended_near_prism_smallest() {
        // 3-prism with two rungs subdivided and the subdivision vertices
        // joined: triangles {0,1,2},{3,4,5}, paths 0-6-3, 1-7-4, 2-5, plus
        // the cross edge 6-7.
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 6),
                (6, 3),
                (1, 7),
                (7, 4),
                (2, 5),
                (6, 7),
            ],
        );
        assert!(exists_extended_near_prism(&g, None, None));
        assert!(exists_extended_near_prism(&g, Some((6, 7)), None));
        assert!(exists_extended_near_prism(&g, None, Some(6)));
        assert!(!exists_extended_near_prism(&g, Some((0, 1)), None));
        assert!(!exists_extended_near_prism(&g, None, Some(0)));
    }

    #[test]
    fn star_cutsets_by_subsets() {
        // Path a-b-c: {b} separates.
        assert!(star_cutset_subsets(&Graph::path(3), 1).is_some());
        assert!(star_cutset_subsets(&Graph::path(3), 0).is_none());
        assert!(star_cutset_subsets(&Graph::cycle(5), 0).is_none());
        assert!(star_cutset_subsets(&Graph::complete(4), 0).is_none());
        // 5-wheel hub: hub plus two opposite rim vertices separates the rim.
        let mut g = Graph::empty(6);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(v, 5);
        }
        assert!(star_cutset_subsets(&g, 5).is_some());
    }
}
