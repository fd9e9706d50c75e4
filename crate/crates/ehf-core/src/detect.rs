//! Detection of holes, thetas, pyramids, near-prisms and wheels, with
//! re-checkable certificates.
//!
//! Searches are deterministic: frames (vertex tuples anchoring a structure)
//! are enumerated in increasing order and constituent paths in depth-first
//! order with neighbours taken ascending, so the first hit is stable across
//! runs. Certificates pin the entire induced subgraph on their span;
//! [`verify_certificate`] re-derives every clause of the definition from the
//! graph alone, so a certificate for one graph fails against any graph that
//! differs inside the span.

use std::ops::ControlFlow;

use serde_json::{json, Value};

use crate::graph::{Budget, Graph, Path, VertexSet};

/// Witness for one of the detected structures. Vertex lists are in ambient
/// labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Induced cycle of length at least 4.
    Hole { cycle: Vec<usize>, even: bool },
    /// Two nonadjacent branch vertices joined by three paths of length at
    /// least 2, pairwise disjoint and anticomplete in between.
    Theta { s: usize, t: usize, paths: [Path; 3] },
    /// Apex joined to a triangle by three paths meeting only at the apex,
    /// at most one of length 1. `short` means exactly one has length 1.
    Pyramid {
        apex: usize,
        base: [usize; 3],
        paths: [Path; 3],
        short: bool,
    },
    /// Two triangles joined by three rung paths. `base_a[2] == base_b[2]`
    /// encodes the shared-corner (degenerate) case; `prism` is its negation.
    NearPrism {
        base_a: [usize; 3],
        base_b: [usize; 3],
        paths: [Path; 3],
        prism: bool,
    },
    /// Hole plus a centre with at least three neighbours on it; exactly
    /// three only if no two are adjacent.
    Wheel {
        centre: usize,
        hole: Vec<usize>,
        spokes: VertexSet,
        even: bool,
    },
    /// Near-prism plus one extra edge joining the interiors of the first
    /// two rungs.
    ExtendedNearPrism {
        base_a: [usize; 3],
        base_b: [usize; 3],
        paths: [Path; 3],
        prism: bool,
        cross: (usize, usize),
    },
}

impl Certificate {
    /// Every vertex mentioned by the certificate.
    pub fn span(&self) -> VertexSet {
        match self {
            Certificate::Hole { cycle, .. } => cycle.iter().copied().collect(),
            Certificate::Theta { paths, .. }
            | Certificate::Pyramid { paths, .. }
            | Certificate::NearPrism { paths, .. }
            | Certificate::ExtendedNearPrism { paths, .. } => {
                let mut s = VertexSet::EMPTY;
                for p in paths {
                    s = s.union(p.vertex_set());
                }
                if let Certificate::Pyramid { apex, base, .. } = self {
                    s.insert(*apex);
                    for &b in base {
                        s.insert(b);
                    }
                }
                s
            }
            Certificate::Wheel { centre, hole, .. } => {
                let mut s: VertexSet = hole.iter().copied().collect();
                s.insert(*centre);
                s
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Hole { .. } => "hole",
            Certificate::Theta { .. } => "theta",
            Certificate::Pyramid { .. } => "pyramid",
            Certificate::NearPrism { .. } => "near-prism",
            Certificate::Wheel { .. } => "wheel",
            Certificate::ExtendedNearPrism { .. } => "extended-near-prism",
        }
    }

    /// JSON form: `{"kind", "vertices", "paths", "meta"}` with sorted keys.
    /// Round-trips exactly through [`Certificate::from_json`].
    pub fn to_json(&self) -> Value {
        let paths_json = |paths: &[Path; 3]| -> Value {
            Value::Array(paths.iter().map(|p| json!(p.0)).collect())
        };
        match self {
            Certificate::Hole { cycle, even } => json!({
                "kind": "hole",
                "vertices": cycle,
                "paths": [],
                "meta": {"even": even},
            }),
            Certificate::Theta { s, t, paths } => json!({
                "kind": "theta",
                "vertices": [s, t],
                "paths": paths_json(paths),
                "meta": {},
            }),
            Certificate::Pyramid {
                apex,
                base,
                paths,
                short,
            } => json!({
                "kind": "pyramid",
                "vertices": [apex, base[0], base[1], base[2]],
                "paths": paths_json(paths),
                "meta": {"short": short},
            }),
            Certificate::NearPrism {
                base_a,
                base_b,
                paths,
                prism,
            } => json!({
                "kind": "near-prism",
                "vertices": [base_a[0], base_a[1], base_a[2], base_b[0], base_b[1], base_b[2]],
                "paths": paths_json(paths),
                "meta": {"prism": prism},
            }),
            Certificate::Wheel {
                centre,
                hole,
                spokes,
                even,
            } => json!({
                "kind": "wheel",
                "vertices": [centre],
                "paths": [hole],
                "meta": {"spokes": spokes.to_vec(), "even": even},
            }),
            Certificate::ExtendedNearPrism {
                base_a,
                base_b,
                paths,
                prism,
                cross,
            } => json!({
                "kind": "extended-near-prism",
                "vertices": [base_a[0], base_a[1], base_a[2], base_b[0], base_b[1], base_b[2]],
                "paths": paths_json(paths),
                "meta": {"prism": prism, "cross_edge": [cross.0, cross.1]},
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Certificate, String> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or("missing certificate kind")?;
        let verts: Vec<usize> = parse_usize_array(v.get("vertices").ok_or("missing vertices")?)?;
        let paths_raw = v.get("paths").and_then(Value::as_array).ok_or("missing paths")?;
        let path_list: Vec<Vec<usize>> = paths_raw
            .iter()
            .map(parse_usize_array)
            .collect::<Result<_, _>>()?;
        let meta = v.get("meta").ok_or("missing meta")?;
        let three_paths = |list: &[Vec<usize>]| -> Result<[Path; 3], String> {
            if list.len() != 3 {
                return Err(format!("expected 3 paths, got {}", list.len()));
            }
            Ok([
                Path(list[0].clone()),
                Path(list[1].clone()),
                Path(list[2].clone()),
            ])
        };
        match kind {
            "hole" => Ok(Certificate::Hole {
                cycle: verts,
                even: meta_bool(meta, "even")?,
            }),
            "theta" => {
                if verts.len() != 2 {
                    return Err("theta needs two branch vertices".into());
                }
                Ok(Certificate::Theta {
                    s: verts[0],
                    t: verts[1],
                    paths: three_paths(&path_list)?,
                })
            }
            "pyramid" => {
                if verts.len() != 4 {
                    return Err("pyramid needs apex plus base".into());
                }
                Ok(Certificate::Pyramid {
                    apex: verts[0],
                    base: [verts[1], verts[2], verts[3]],
                    paths: three_paths(&path_list)?,
                    short: meta_bool(meta, "short")?,
                })
            }
            "near-prism" => {
                if verts.len() != 6 {
                    return Err("near-prism needs six corners".into());
                }
                Ok(Certificate::NearPrism {
                    base_a: [verts[0], verts[1], verts[2]],
                    base_b: [verts[3], verts[4], verts[5]],
                    paths: three_paths(&path_list)?,
                    prism: meta_bool(meta, "prism")?,
                })
            }
            "wheel" => {
                if verts.len() != 1 || path_list.len() != 1 {
                    return Err("wheel needs a centre and one hole".into());
                }
                let spokes: Vec<usize> =
                    parse_usize_array(meta.get("spokes").ok_or("missing spokes")?)?;
                Ok(Certificate::Wheel {
                    centre: verts[0],
                    hole: path_list[0].clone(),
                    spokes: spokes.into_iter().collect(),
                    even: meta_bool(meta, "even")?,
                })
            }
            "extended-near-prism" => {
                if verts.len() != 6 {
                    return Err("extended near-prism needs six corners".into());
                }
                let cross: Vec<usize> =
                    parse_usize_array(meta.get("cross_edge").ok_or("missing cross_edge")?)?;
                if cross.len() != 2 {
                    return Err("cross_edge needs two ends".into());
                }
                Ok(Certificate::ExtendedNearPrism {
                    base_a: [verts[0], verts[1], verts[2]],
                    base_b: [verts[3], verts[4], verts[5]],
                    paths: three_paths(&path_list)?,
                    prism: meta_bool(meta, "prism")?,
                    cross: (cross[0], cross[1]),
                })
            }
            other => Err(format!("unknown certificate kind {other:?}")),
        }
    }
}

fn parse_usize_array(v: &Value) -> Result<Vec<usize>, String> {
    v.as_array()
        .ok_or("expected array")?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| "expected nonnegative integer".to_string())
        })
        .collect()
}

fn meta_bool(meta: &Value, key: &str) -> Result<bool, String> {
    meta.get(key)
        .and_then(Value::as_bool)
        .ok_or_else(|| format!("missing boolean meta {key:?}"))
}

/// Outcome of a budgeted search. `certified` is true only when the whole
/// space was exhausted, so absence is a theorem about the graph rather than
/// a timeout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Found(Certificate),
    Absent { certified: bool },
}

impl Detection {
    pub fn found(&self) -> Option<&Certificate> {
        match self {
            Detection::Found(c) => Some(c),
            Detection::Absent { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found(_))
    }

    pub fn certified_absent(&self) -> bool {
        matches!(self, Detection::Absent { certified: true })
    }

    pub fn hit_budget(&self) -> bool {
        matches!(self, Detection::Absent { certified: false })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleParity {
    Any,
    Even,
    Odd,
}

impl HoleParity {
    fn admits(self, len: usize) -> bool {
        match self {
            HoleParity::Any => true,
            HoleParity::Even => len % 2 == 0,
            HoleParity::Odd => len % 2 == 1,
        }
    }
}

struct Counter {
    used: u64,
    limit: Option<u64>,
    hit: bool,
}

impl Counter {
    fn new(budget: Budget) -> Self {
        Counter {
            used: 0,
            limit: budget.0,
            hit: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if let Some(limit) = self.limit {
            if self.used >= limit {
                self.hit = true;
                return false;
            }
        }
        self.used += 1;
        true
    }
}

/// Enumerate induced cycles of length exactly `k` whose smallest vertex is
/// `v0`, in lexicographic sequence order. The sequence starts at `v0` and
/// runs toward the smaller of its two cycle neighbours.
fn cycles_from(
    g: &Graph,
    v0: usize,
    k: usize,
    counter: &mut Counter,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn extend(
        g: &Graph,
        k: usize,
        path: &mut Vec<usize>,
        used: VertexSet,
        mid_forbid: VertexSet,
        counter: &mut Counter,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let v0 = path[0];
        let last = *path.last().unwrap();
        let depth = path.len();
        let above = VertexSet::full(g.n()).difference(VertexSet::full(v0 + 1));
        let mut cands = g.neighbours(last).intersection(above).difference(used);
        if depth == k - 1 {
            // Closing vertex: adjacent to v0, canonical direction.
            cands = cands
                .intersection(g.neighbours(v0))
                .difference(VertexSet::full(path[1] + 1))
                .difference(mid_forbid);
        } else if depth >= 2 {
            // Middle vertices must stay clear of v0; position 1 is the one
            // neighbour of v0 the walk starts with.
            cands = cands.difference(g.neighbours(v0)).difference(mid_forbid);
        }
        for w in cands.iter() {
            if !counter.tick() {
                return ControlFlow::Break(());
            }
            if depth == k - 1 {
                path.push(w);
                let r = f(path);
                path.pop();
                r?;
            } else {
                // v0's neighbourhood is governed by position, not mid_forbid.
                let forbid = if depth == 1 {
                    mid_forbid
                } else {
                    mid_forbid.union(g.neighbours(last))
                };
                path.push(w);
                extend(g, k, path, used.with(w), forbid, counter, f)?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    let mut path = vec![v0];
    // mid_forbid tracks neighbourhoods of interior vertices; v0's own
    // neighbourhood is handled separately above.
    extend(
        g,
        k,
        &mut path,
        VertexSet::singleton(v0),
        VertexSet::EMPTY,
        counter,
        f,
    )
}

/// Enumerate holes shortest first, each once in canonical sequence order.
/// Returns false if the budget stopped the walk.
fn for_each_hole(
    g: &Graph,
    parity: HoleParity,
    budget: Budget,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> bool {
    let mut counter = Counter::new(budget);
    'outer: for k in 4..=g.n() {
        if !parity.admits(k) {
            continue;
        }
        for v0 in 0..g.n() {
            if let ControlFlow::Break(()) = cycles_from(g, v0, k, &mut counter, &mut f) {
                break 'outer;
            }
        }
    }
    !counter.hit
}

/// First hole of the requested parity, shortest then lexicographically
/// least.
pub fn find_hole(g: &Graph, parity: HoleParity, budget: Budget) -> Detection {
    let mut found = None;
    let completed = for_each_hole(g, parity, budget, |cycle| {
        found = Some(Certificate::Hole {
            cycle: cycle.to_vec(),
            even: cycle.len() % 2 == 0,
        });
        ControlFlow::Break(())
    });
    match found {
        Some(c) => Detection::Found(c),
        None => Detection::Absent {
            certified: completed,
        },
    }
}

/// Shortest even hole, deterministic. Absence is certified unless the
/// budget ran out first.
pub fn find_even_hole(g: &Graph, budget: Budget) -> Detection {
    find_hole(g, HoleParity::Even, budget)
}

pub fn is_even_hole_free(g: &Graph) -> bool {
    !find_even_hole(g, Budget::UNLIMITED).is_found()
}

/// First theta: branch vertices ascending, then constituent paths in
/// depth-first order with mutual avoidance.
pub fn find_theta(g: &Graph) -> Option<Certificate> {
    let all = g.vertices();
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            if g.has_edge(s, t) {
                continue;
            }
            let ends = VertexSet::singleton(s).with(t);
            let allowed1 = all.difference(ends);
            for p1 in g.induced_paths(s, t, allowed1, Budget::UNLIMITED) {
                let i1 = p1.interior();
                let allowed2 = allowed1
                    .difference(i1)
                    .difference(g.neighbourhood_of_set(i1));
                for p2 in g.induced_paths(s, t, allowed2, Budget::UNLIMITED) {
                    let i2 = p2.interior();
                    let allowed3 = allowed2
                        .difference(i2)
                        .difference(g.neighbourhood_of_set(i2));
                    let mut stream = g.induced_paths(s, t, allowed3, Budget::UNLIMITED);
                    if let Some(p3) = stream.next() {
                        return Some(Certificate::Theta {
                            s,
                            t,
                            paths: [p1, p2, p3],
                        });
                    }
                }
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbours(u).iter() {
            if v <= u {
                continue;
            }
            for w in g.neighbours(u).intersection(g.neighbours(v)).iter() {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// First pyramid, optionally with a fixed apex; `short_only` restricts to
/// pyramids with exactly one length-1 path.
pub fn find_pyramid(g: &Graph, apex: Option<usize>, short_only: bool) -> Option<Certificate> {
    let tris = triangles(g);
    let apexes: Vec<usize> = match apex {
        Some(a) => vec![a],
        None => (0..g.n()).collect(),
    };
    for &a in &apexes {
        if a >= g.n() {
            continue;
        }
        for &base in &tris {
            if base.contains(&a) {
                continue;
            }
            let base_set: VertexSet = base.iter().copied().collect();
            let direct: Vec<usize> = base
                .iter()
                .copied()
                .filter(|&b| g.has_edge(a, b))
                .collect();
            if direct.len() > 1 {
                continue;
            }
            if short_only && direct.is_empty() {
                continue;
            }
            // Interior vertices may touch only their own path's corner.
            let all = g.vertices();
            let shield = |others: VertexSet| {
                all.difference(base_set)
                    .without(a)
                    .difference(g.neighbourhood_of_set(others))
            };
            let grow = |i: usize, allowed: VertexSet| -> Option<Vec<Path>> {
                // Recursive growth over base corners from index i.
                fn inner(
                    g: &Graph,
                    a: usize,
                    base: [usize; 3],
                    i: usize,
                    allowed: VertexSet,
                    acc: &mut Vec<Path>,
                ) -> bool {
                    if i == 3 {
                        return true;
                    }
                    let b = base[i];
                    if g.has_edge(a, b) {
                        acc.push(Path(vec![a, b]));
                        if inner(g, a, base, i + 1, allowed, acc) {
                            return true;
                        }
                        acc.pop();
                        return false;
                    }
                    let others: VertexSet = base
                        .iter()
                        .copied()
                        .filter(|&x| x != b)
                        .collect();
                    let my_allowed = allowed.difference(g.neighbourhood_of_set(others));
                    for p in g.induced_paths(a, b, my_allowed, Budget::UNLIMITED) {
                        let int = p.interior();
                        let next = allowed
                            .difference(int)
                            .difference(g.neighbourhood_of_set(int));
                        acc.push(p);
                        if inner(g, a, base, i + 1, next, acc) {
                            return true;
                        }
                        acc.pop();
                    }
                    false
                }
                let mut acc = Vec::new();
                if inner(g, a, base, i, allowed, &mut acc) {
                    Some(acc)
                } else {
                    None
                }
            };
            let allowed0 = shield(VertexSet::EMPTY);
            if let Some(paths) = grow(0, allowed0) {
                let long = paths.iter().filter(|p| p.len() >= 2).count();
                if long < 2 || (short_only && long != 2) {
                    continue;
                }
                let arr: [Path; 3] = paths.try_into().unwrap();
                return Some(Certificate::Pyramid {
                    apex: a,
                    base,
                    paths: arr,
                    short: long == 2,
                });
            }
        }
    }
    None
}

/// Enumerate near-prisms; the callback sees corner triples and rung paths
/// with `paths[i]` from `base_a[i]` to `base_b[i]`.
fn for_each_near_prism(
    g: &Graph,
    mut f: impl FnMut([usize; 3], [usize; 3], &[Path; 3]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let tris = triangles(g);
    for (i, &ta) in tris.iter().enumerate() {
        for &tb in &tris[i + 1..] {
            let sa: VertexSet = ta.iter().copied().collect();
            let sb: VertexSet = tb.iter().copied().collect();
            let shared = sa.intersection(sb);
            if shared.len() > 1 {
                continue;
            }
            let rest_a: Vec<usize> = ta.iter().copied().filter(|&v| !shared.contains(v)).collect();
            let rest_b: Vec<usize> = tb.iter().copied().filter(|&v| !shared.contains(v)).collect();
            let pairings: Vec<Vec<(usize, usize)>> = match shared.min() {
                Some(_) => vec![
                    vec![(rest_a[0], rest_b[0]), (rest_a[1], rest_b[1])],
                    vec![(rest_a[0], rest_b[1]), (rest_a[1], rest_b[0])],
                ],
                None => {
                    let perms = [
                        [0, 1, 2],
                        [0, 2, 1],
                        [1, 0, 2],
                        [1, 2, 0],
                        [2, 0, 1],
                        [2, 1, 0],
                    ];
                    perms
                        .iter()
                        .map(|p| (0..3).map(|j| (rest_a[j], rest_b[p[j]])).collect())
                        .collect()
                }
            };
            'pairing: for pairing in pairings {
                // No corner may touch another rung's corner.
                for &(a, _) in &pairing {
                    for &(x, b) in &pairing {
                        if a != x && g.has_edge(a, b) {
                            continue 'pairing;
                        }
                    }
                }
                let corners = sa.union(sb);
                let all = g.vertices();
                // Walk every rung combination rather than first-hit, so
                // constrained searches (pinned cross-edge) stay complete.
                fn grow_all(
                    g: &Graph,
                    pairing: &[(usize, usize)],
                    corners: VertexSet,
                    idx: usize,
                    allowed: VertexSet,
                    acc: &mut Vec<Path>,
                    emit: &mut impl FnMut(&[Path]) -> ControlFlow<()>,
                ) -> ControlFlow<()> {
                    if idx == pairing.len() {
                        return emit(acc);
                    }
                    let (a, b) = pairing[idx];
                    if g.has_edge(a, b) {
                        acc.push(Path(vec![a, b]));
                        grow_all(g, pairing, corners, idx + 1, allowed, acc, emit)?;
                        acc.pop();
                        return ControlFlow::Continue(());
                    }
                    let my_corners = corners.without(a).without(b);
                    let my_allowed = allowed.difference(g.neighbourhood_of_set(my_corners));
                    for p in g.induced_paths(a, b, my_allowed, Budget::UNLIMITED) {
                        let int = p.interior();
                        let next = allowed
                            .difference(int)
                            .difference(g.neighbourhood_of_set(int));
                        acc.push(p);
                        grow_all(g, pairing, corners, idx + 1, next, acc, emit)?;
                        acc.pop();
                    }
                    ControlFlow::Continue(())
                }
                let allowed0 = all.difference(corners);
                let mut acc: Vec<Path> = Vec::new();
                let shared_corner = shared.min();
                grow_all(
                    g,
                    &pairing,
                    corners,
                    0,
                    allowed0,
                    &mut acc,
                    &mut |paths: &[Path]| {
                        let (base_a, base_b, arr): ([usize; 3], [usize; 3], [Path; 3]) =
                            match shared_corner {
                                Some(s) => (
                                    [pairing[0].0, pairing[1].0, s],
                                    [pairing[0].1, pairing[1].1, s],
                                    [paths[0].clone(), paths[1].clone(), Path(vec![s])],
                                ),
                                None => (
                                    [pairing[0].0, pairing[1].0, pairing[2].0],
                                    [pairing[0].1, pairing[1].1, pairing[2].1],
                                    [paths[0].clone(), paths[1].clone(), paths[2].clone()],
                                ),
                            };
                        f(base_a, base_b, &arr)
                    },
                )?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// First near-prism (prism or shared-corner form).
pub fn find_near_prism(g: &Graph) -> Option<Certificate> {
    let mut found = None;
    let _ = for_each_near_prism(g, |base_a, base_b, paths| {
        found = Some(Certificate::NearPrism {
            base_a,
            base_b,
            paths: paths.clone(),
            prism: base_a[2] != base_b[2],
        });
        ControlFlow::Break(())
    });
    found
}

/// First wheel (optionally even): holes shortest first, centres ascending.
pub fn find_wheel(g: &Graph, even_only: bool) -> Option<Certificate> {
    let mut found = None;
    for_each_hole(g, HoleParity::Any, Budget::UNLIMITED, |cycle| {
        let hole_set: VertexSet = cycle.iter().copied().collect();
        for c in g.vertices().difference(hole_set).iter() {
            let spokes = g.neighbours_in(c, hole_set);
            if spokes.len() < 3 {
                continue;
            }
            if spokes.len() == 3 {
                let adjacent_pair = spokes
                    .iter()
                    .any(|u| !g.neighbours_in(u, spokes).is_empty());
                if adjacent_pair {
                    continue;
                }
            }
            if even_only && spokes.len() % 2 != 0 {
                continue;
            }
            found = Some(Certificate::Wheel {
                centre: c,
                hole: cycle.to_vec(),
                spokes,
                even: spokes.len() % 2 == 0,
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

fn extended_from_edge(g: &Graph, a: usize, b: usize) -> Option<Certificate> {
    if !g.has_edge(a, b) {
        return None;
    }
    let mut cut = g.clone();
    cut.remove_edge(a, b);
    let mut found = None;
    let _ = for_each_near_prism(&cut, |base_a, base_b, paths| {
        let pos =
            |v: usize| -> Option<usize> { (0..3).find(|&i| paths[i].interior().contains(v)) };
        if let (Some(i), Some(j)) = (pos(a), pos(b)) {
            if i != j {
                // Relabel so the cross edge joins the first two rungs.
                let third = 3 - i - j;
                let order = [i, j, third];
                let base_a = [base_a[order[0]], base_a[order[1]], base_a[order[2]]];
                let base_b = [base_b[order[0]], base_b[order[1]], base_b[order[2]]];
                let paths = [
                    paths[order[0]].clone(),
                    paths[order[1]].clone(),
                    paths[order[2]].clone(),
                ];
                found = Some(Certificate::ExtendedNearPrism {
                    base_a,
                    base_b,
                    paths,
                    prism: base_a[2] != base_b[2],
                    cross: (a, b),
                });
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    found
}

/// First extended near-prism, optionally with a pinned cross-edge.
pub fn find_extended_near_prism(
    g: &Graph,
    cross_edge: Option<(usize, usize)>,
) -> Option<Certificate> {
    match cross_edge {
        Some((a, b)) => extended_from_edge(g, a, b),
        None => {
            for (a, b) in g.edges() {
                if let Some(c) = extended_from_edge(g, a, b) {
                    return Some(c);
                }
            }
            None
        }
    }
}

/// Extended near-prism with `a` as one end of the cross-edge.
pub fn find_extended_near_prism_with_end(g: &Graph, a: usize) -> Option<Certificate> {
    if a >= g.n() {
        return None;
    }
    for b in g.neighbours(a).iter() {
        if let Some(c) = extended_from_edge(g, a, b) {
            return Some(c);
        }
    }
    None
}

/// Re-check a certificate against a graph from scratch. Every definitional
/// clause is re-derived, and the full adjacency inside the span is compared
/// against what the structure dictates, so any edge toggled inside the span
/// invalidates the certificate.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    check_certificate(g, cert).is_ok()
}

/// Like [`verify_certificate`], with the first failing clause.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<(), String> {
    let span = cert.span();
    if span.iter().any(|v| v >= g.n()) {
        return Err("certificate mentions vertices outside the graph".into());
    }
    // Expected edges within the span; everything else in the span must be a
    // non-edge.
    let mut expected: Vec<(usize, usize)> = Vec::new();
    let push_path = |p: &Path, expected: &mut Vec<(usize, usize)>| {
        for w in p.0.windows(2) {
            expected.push((w[0].min(w[1]), w[0].max(w[1])));
        }
    };
    match cert {
        Certificate::Hole { cycle, even } => {
            let k = cycle.len();
            if k < 4 {
                return Err("hole shorter than 4".into());
            }
            if span.len() != k {
                return Err("hole vertices not distinct".into());
            }
            if *even != (k % 2 == 0) {
                return Err("hole parity flag wrong".into());
            }
            for i in 0..k {
                expected.push(norm(cycle[i], cycle[(i + 1) % k]));
            }
        }
        Certificate::Theta { s, t, paths } => {
            if s == t || g.has_edge(*s, *t) {
                return Err("branch vertices must be distinct and nonadjacent".into());
            }
            let mut interiors = VertexSet::EMPTY;
            for p in paths {
                if p.first() != Some(*s) || p.last() != Some(*t) {
                    return Err("path ends must be the branch vertices".into());
                }
                if p.len() < 2 {
                    return Err("theta path shorter than 2".into());
                }
                if p.vertex_set().len() != p.0.len() {
                    return Err("path repeats a vertex".into());
                }
                if p.interior().intersects(interiors) {
                    return Err("theta paths share an inner vertex".into());
                }
                interiors = interiors.union(p.interior());
                push_path(p, &mut expected);
            }
        }
        Certificate::Pyramid {
            apex,
            base,
            paths,
            short,
        } => {
            let base_set: VertexSet = base.iter().copied().collect();
            if base_set.len() != 3 || base_set.contains(*apex) {
                return Err("base must be three vertices apart from the apex".into());
            }
            let mut seen = VertexSet::singleton(*apex);
            let mut long = 0;
            for (i, p) in paths.iter().enumerate() {
                if p.first() != Some(*apex) || p.last() != Some(base[i]) {
                    return Err("pyramid path must run apex to its base corner".into());
                }
                if p.vertex_set().len() != p.0.len() {
                    return Err("path repeats a vertex".into());
                }
                let tail = p.vertex_set().without(*apex);
                if tail.intersects(seen) {
                    return Err("pyramid paths share a non-apex vertex".into());
                }
                seen = seen.union(tail);
                if p.len() >= 2 {
                    long += 1;
                }
                push_path(p, &mut expected);
            }
            if long < 2 {
                return Err("at least two pyramid paths must have length 2".into());
            }
            if *short != (long == 2) {
                return Err("short flag inconsistent with path lengths".into());
            }
            expected.push(norm(base[0], base[1]));
            expected.push(norm(base[0], base[2]));
            expected.push(norm(base[1], base[2]));
        }
        Certificate::NearPrism {
            base_a,
            base_b,
            paths,
            prism,
        }
        | Certificate::ExtendedNearPrism {
            base_a,
            base_b,
            paths,
            prism,
            ..
        } => {
            let sa: VertexSet = base_a.iter().copied().collect();
            let sb: VertexSet = base_b.iter().copied().collect();
            if sa.len() != 3 || sb.len() != 3 {
                return Err("triangle corners must be distinct".into());
            }
            let shared = sa.intersection(sb);
            let degenerate = base_a[2] == base_b[2];
            if degenerate {
                if shared != VertexSet::singleton(base_a[2]) {
                    return Err("shared corner must be exactly the third pair".into());
                }
            } else if !shared.is_empty() {
                return Err("triangles overlap outside the third pair".into());
            }
            if *prism == degenerate {
                return Err("prism flag inconsistent with corner sharing".into());
            }
            let mut seen = VertexSet::EMPTY;
            for (i, p) in paths.iter().enumerate() {
                if p.first() != Some(base_a[i]) || p.last() != Some(base_b[i]) {
                    return Err("rung must run between matching corners".into());
                }
                if i == 2 && degenerate {
                    if p.0.len() != 1 {
                        return Err("shared corner rung must be a single vertex".into());
                    }
                } else if p.0.is_empty() {
                    return Err("empty rung".into());
                }
                if p.vertex_set().len() != p.0.len() {
                    return Err("rung repeats a vertex".into());
                }
                if p.vertex_set().intersects(seen) {
                    return Err("rungs share a vertex".into());
                }
                seen = seen.union(p.vertex_set());
                push_path(p, &mut expected);
            }
            for tri in [base_a, base_b] {
                expected.push(norm(tri[0], tri[1]));
                expected.push(norm(tri[0], tri[2]));
                expected.push(norm(tri[1], tri[2]));
            }
            if let Certificate::ExtendedNearPrism { cross, .. } = cert {
                let (a, b) = *cross;
                if !paths[0].interior().contains(a) || !paths[1].interior().contains(b) {
                    return Err("cross ends must sit inside the first two rungs".into());
                }
                expected.push(norm(a, b));
            }
        }
        Certificate::Wheel {
            centre,
            hole,
            spokes,
            even,
        } => {
            let hole_set: VertexSet = hole.iter().copied().collect();
            if hole_set.contains(*centre) {
                return Err("centre lies on the hole".into());
            }
            let hole_cert = Certificate::Hole {
                cycle: hole.clone(),
                even: hole.len() % 2 == 0,
            };
            check_certificate(g, &hole_cert).map_err(|e| format!("wheel hole: {e}"))?;
            if *spokes != g.neighbours_in(*centre, hole_set) {
                return Err("stored spokes disagree with the graph".into());
            }
            if spokes.len() < 3 {
                return Err("wheel needs at least three spokes".into());
            }
            if spokes.len() == 3 {
                for u in spokes.iter() {
                    if !g.neighbours_in(u, *spokes).is_empty() {
                        return Err("three spokes with two adjacent".into());
                    }
                }
            }
            if *even != (spokes.len() % 2 == 0) {
                return Err("even flag inconsistent with spoke count".into());
            }
            let k = hole.len();
            for i in 0..k {
                expected.push(norm(hole[i], hole[(i + 1) % k]));
            }
            for s in spokes.iter() {
                expected.push(norm(*centre, s));
            }
        }
    }
    // Full-span adjacency comparison.
    expected.sort_unstable();
    expected.dedup();
    let verts: Vec<usize> = span.iter().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            let want = expected.binary_search(&norm(u, v)).is_ok();
            if g.has_edge(u, v) != want {
                return Err(format!(
                    "edge ({u},{v}) {} in graph but {} by the structure",
                    if g.has_edge(u, v) { "present" } else { "absent" },
                    if want { "required" } else { "forbidden" },
                ));
            }
        }
    }
    Ok(())
}

#[inline]
fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(5 + v, 5 + (v + 2) % 5);
            g.add_edge(v, 5 + v);
        }
        g
    }

    fn wheel5() -> Graph {
        let mut g = Graph::empty(6);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
            g.add_edge(v, 5);
        }
        g
    }

    #[test]
    fn even_hole_in_c6_and_not_c5() {
        let det = find_even_hole(&Graph::cycle(6), Budget::UNLIMITED);
        match det {
            Detection::Found(Certificate::Hole { ref cycle, even }) => {
                assert_eq!(cycle, &vec![0, 1, 2, 3, 4, 5]);
                assert!(even);
            }
            other => panic!("expected hole, got {other:?}"),
        }
        assert!(verify_certificate(&Graph::cycle(6), det.found().unwrap()));

        let det = find_even_hole(&Graph::cycle(5), Budget::UNLIMITED);
        assert_eq!(det, Detection::Absent { certified: true });
        assert!(is_even_hole_free(&Graph::cycle(5)));
    }

    #[test]
    fn even_hole_budget_reports_truncation() {
        let det = find_even_hole(&petersen(), Budget::nodes(2));
        assert_eq!(det, Detection::Absent { certified: false });
        assert!(det.hit_budget());
    }

    #[test]
    fn petersen_is_not_even_hole_free() {
        // Six-cycles in the Petersen graph are induced.
        assert!(!is_even_hole_free(&petersen()));
        let det = find_even_hole(&petersen(), Budget::UNLIMITED);
        let cert = det.found().unwrap();
        assert!(verify_certificate(&petersen(), cert));
        match cert {
            Certificate::Hole { cycle, .. } => assert_eq!(cycle.len(), 6),
            _ => panic!(),
        }
    }

    #[test]
    fn shortest_even_hole_is_preferred() {
        // C4 and C6 glued on a vertex path... use two disjoint cycles.
        let mut g = Graph::empty(10);
        for v in 0..6 {
            g.add_edge(v, (v + 1) % 6);
        }
        g.add_edge(6, 7);
        g.add_edge(7, 8);
        g.add_edge(8, 9);
        g.add_edge(9, 6);
        let det = find_even_hole(&g, Budget::UNLIMITED);
        match det.found().unwrap() {
            Certificate::Hole { cycle, .. } => assert_eq!(cycle, &vec![6, 7, 8, 9]),
            _ => panic!(),
        }
    }

    #[test]
    fn odd_hole_plumbing() {
        let det = find_hole(&Graph::cycle(5), HoleParity::Odd, Budget::UNLIMITED);
        assert!(det.is_found());
        let det = find_hole(&Graph::cycle(6), HoleParity::Odd, Budget::UNLIMITED);
        assert!(det.certified_absent());
        let det = find_hole(&Graph::complete(6), HoleParity::Any, Budget::UNLIMITED);
        assert!(det.certified_absent());
    }

    #[test]
    fn theta_detection() {
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let cert = find_theta(&k23).expect("K_{2,3} is a theta");
        assert!(verify_certificate(&k23, &cert));

        assert!(find_theta(&Graph::cycle(6)).is_none());
        assert!(find_theta(&Graph::cycle(7)).is_none());

        // Paths of lengths 2,2,3 between the branch vertices.
        let g = Graph::from_edges(
            7,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (6, 0)],
        );
        let cert = find_theta(&g).expect("2,2,3 theta");
        assert!(verify_certificate(&g, &cert));
        match cert {
            Certificate::Theta { s, t, .. } => {
                assert_eq!((s, t), (0, 1));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn pyramid_detection_and_apex_pinning() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 3), (0, 2), (2, 4), (0, 5), (3, 4), (4, 5), (3, 5)],
        );
        let cert = find_pyramid(&g, None, false).expect("pyramid");
        assert!(verify_certificate(&g, &cert));
        match &cert {
            Certificate::Pyramid { apex, short, .. } => {
                assert_eq!(*apex, 0);
                assert!(short);
            }
            _ => panic!(),
        }
        assert!(find_pyramid(&g, Some(0), true).is_some());
        // No pyramid is apexed at a base corner; cross-check the oracle.
        assert!(find_pyramid(&g, Some(3), false).is_none());
        assert!(!oracle::exists_pyramid(&g, Some(3), false));
        assert!(find_pyramid(&Graph::cycle(6), None, false).is_none());
    }

    #[test]
    fn near_prism_detection() {
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        );
        let cert = find_near_prism(&prism).expect("3-prism");
        assert!(verify_certificate(&prism, &cert));
        match &cert {
            Certificate::NearPrism { prism, .. } => assert!(*prism),
            _ => panic!(),
        }

        let degenerate = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 2), (2, 3), (0, 5), (5, 3), (1, 6), (6, 4)],
        );
        let cert = find_near_prism(&degenerate).expect("shared-corner near-prism");
        assert!(verify_certificate(&degenerate, &cert));
        match &cert {
            Certificate::NearPrism { base_a, base_b, prism, .. } => {
                assert!(!*prism);
                assert_eq!(base_a[2], base_b[2]);
            }
            _ => panic!(),
        }
        assert!(find_near_prism(&Graph::cycle(7)).is_none());
    }

    #[test]
    fn wheel_detection() {
        let cert = find_wheel(&wheel5(), false).expect("5-wheel");
        assert!(verify_certificate(&wheel5(), &cert));
        match &cert {
            Certificate::Wheel { even, spokes, .. } => {
                assert!(!even);
                assert_eq!(spokes.len(), 5);
            }
            _ => panic!(),
        }
        assert!(find_wheel(&wheel5(), true).is_none());

        // C6 plus a centre on four consecutive rim vertices: even wheel.
        let mut g = Graph::cycle(6);
        let mut h = Graph::empty(7);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        for v in [0, 1, 2, 3] {
            h.add_edge(v, 6);
        }
        g = h;
        let cert = find_wheel(&g, true).expect("even wheel");
        assert!(verify_certificate(&g, &cert));

        // Exactly three spokes with two adjacent is not a wheel.
        let mut g3 = Graph::empty(6);
        for v in 0..5 {
            g3.add_edge(v, (v + 1) % 5);
        }
        for v in [0, 1, 3] {
            g3.add_edge(v, 5);
        }
        assert!(find_wheel(&g3, false).is_none());
        assert!(!oracle::exists_wheel(&g3, false));
    }

    fn smallest_extended() -> Graph {
        Graph::from_edges(
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
        )
    }

    #[test]
    fn extended_near_prism_detection() {
        let g = smallest_extended();
        let cert = find_extended_near_prism(&g, None).expect("extended near-prism");
        assert!(verify_certificate(&g, &cert));
        assert!(find_extended_near_prism(&g, Some((6, 7))).is_some());
        assert!(find_extended_near_prism(&g, Some((0, 1))).is_none());
        assert!(find_extended_near_prism_with_end(&g, 6).is_some());
        assert!(find_extended_near_prism_with_end(&g, 0).is_none());
        assert!(!oracle::exists_extended_near_prism(&g, None, Some(0)));
    }

    #[test]
    fn certificates_round_trip_json() {
        let g = smallest_extended();
        let certs = [
            find_even_hole(&g, Budget::UNLIMITED).found().cloned(),
            find_near_prism(&g),
            find_extended_near_prism(&g, None),
            find_pyramid(
                &Graph::from_edges(
                    6,
                    &[(0, 1), (1, 3), (0, 2), (2, 4), (0, 5), (3, 4), (4, 5), (3, 5)],
                ),
                None,
                false,
            ),
            find_theta(&Graph::from_edges(
                5,
                &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            )),
            find_wheel(&wheel5(), false),
        ];
        for cert in certs.into_iter().flatten() {
            let j = cert.to_json();
            let back = Certificate::from_json(&j).expect("parse back");
            assert_eq!(back, cert);
            assert_eq!(back.to_json(), j);
        }
    }

    #[test]
    fn mutations_inside_span_are_caught() {
        let g = smallest_extended();
        let cert = find_extended_near_prism(&g, None).unwrap();
        let span: Vec<usize> = cert.span().iter().collect();
        for (i, &u) in span.iter().enumerate() {
            for &v in &span[i + 1..] {
                let mut m = g.clone();
                m.toggle_edge(u, v);
                assert!(
                    !verify_certificate(&m, &cert),
                    "toggle ({u},{v}) not caught"
                );
            }
        }
        // An edge outside the span leaves the certificate valid.
        let mut bigger = Graph::empty(10);
        for (u, v) in g.edges() {
            bigger.add_edge(u, v);
        }
        bigger.add_edge(8, 9);
        assert!(verify_certificate(&bigger, &cert));
    }

    #[test]
    fn detectors_match_oracles_on_small_graphs() {
        // Exhaustive on 5 vertices, all structures that fit.
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
            assert_eq!(
                find_even_hole(&g, Budget::UNLIMITED).is_found(),
                oracle::has_even_hole(&g),
                "even hole mismatch on mask {mask}"
            );
            assert_eq!(
                find_theta(&g).is_some(),
                oracle::exists_theta(&g),
                "theta mismatch on mask {mask}"
            );
            assert_eq!(
                find_wheel(&g, false).is_some(),
                oracle::exists_wheel(&g, false),
                "wheel mismatch on mask {mask}"
            );
        }
    }
}
