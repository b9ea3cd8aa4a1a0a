//! Convex sets, convex hulls, and the two independent convex-cycle
//! enumerators.
//!
//! A set S is convex when every interval between two of its members stays in
//! S. A convex cycle is a cycle subgraph whose vertex set is convex and which
//! has no chord. Shortest cycles of a bipartite graph are always convex;
//! longer cycles usually are not (the 6-cycle rimming the deleted vertex of
//! Q_3 minus a vertex fails: the removed vertex's antipode shortcut runs
//! through the cube).
//!
//! Enumeration route one walks Θ-classes and stitches antipodal edge pairs
//! together with unique geodesics. Route two is a brute-force chordless-cycle
//! search with a convexity filter, kept deliberately independent so the two
//! can referee each other.

use crate::graph::{
    geodesic_counts_from, induced_subgraph, DistanceMatrix, Graph, VertexSet,
};
use crate::theta::ThetaPartition;
use std::collections::BTreeMap;
use thiserror::Error;

/// Vertex counts above which the brute-force enumerator refuses to run
/// unless the caller raises the bound.
pub const DEFAULT_ORACLE_BOUND: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConvexityError {
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("set induces a disconnected subgraph")]
    InducedDisconnected,
    #[error("graph has {vertices} vertices, above the oracle bound {bound}")]
    OracleBoundExceeded { vertices: usize, bound: usize },
}

/// A cycle subgraph in canonical form: among all rotations of both
/// traversal directions, the lexicographically smallest vertex sequence.
/// Canonical form doubles as the deduplication key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSubgraph {
    vertices: Vec<usize>,
}

impl CycleSubgraph {
    /// Validates that the sequence is a cycle of `g` (length ≥ 3, distinct
    /// vertices, consecutive adjacency, closing edge) and canonicalizes.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self, ConvexityError> {
        let l = vertices.len();
        if l < 3 {
            return Err(ConvexityError::NotACycle);
        }
        let distinct: std::collections::HashSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != l {
            return Err(ConvexityError::NotACycle);
        }
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            if a >= g.vertex_count() || b >= g.vertex_count() || !g.has_edge(a, b) {
                return Err(ConvexityError::NotACycle);
            }
        }
        Ok(Self::canonical(vertices))
    }

    fn canonical(vertices: &[usize]) -> Self {
        let l = vertices.len();
        let mut best: Option<Vec<usize>> = None;
        let mut candidate = Vec::with_capacity(l);
        for start in 0..l {
            for dir in [1usize, l - 1] {
                candidate.clear();
                let mut i = start;
                for _ in 0..l {
                    candidate.push(vertices[i]);
                    i = (i + dir) % l;
                }
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate.clone());
                }
            }
        }
        CycleSubgraph {
            vertices: best.unwrap(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter(universe, self.vertices.iter().copied())
    }

    /// Θ-class of each cycle edge, in traversal order.
    pub fn edge_classes(&self, g: &Graph, tp: &ThetaPartition) -> Vec<usize> {
        let l = self.vertices.len();
        (0..l)
            .map(|i| {
                let e = g
                    .edge_index(self.vertices[i], self.vertices[(i + 1) % l])
                    .expect("validated cycle edge");
                tp.class_of_edge(e)
            })
            .collect()
    }
}

/// Deduplicated convex cycles with their length census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexCycleSet {
    cycles: Vec<CycleSubgraph>,
    spectrum: BTreeMap<usize, usize>,
}

impl ConvexCycleSet {
    fn from_cycles(mut cycles: Vec<CycleSubgraph>) -> Self {
        cycles.sort_unstable_by(|a, b| (a.len(), a.vertices()).cmp(&(b.len(), b.vertices())));
        cycles.dedup();
        let mut spectrum = BTreeMap::new();
        for c in &cycles {
            *spectrum.entry(c.len()).or_insert(0) += 1;
        }
        ConvexCycleSet { cycles, spectrum }
    }

    pub fn cycles(&self) -> &[CycleSubgraph] {
        &self.cycles
    }

    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// length → number of convex cycles of that length.
    pub fn length_spectrum(&self) -> &BTreeMap<usize, usize> {
        &self.spectrum
    }

    /// The single common length, when the set is nonempty and unanimous.
    pub fn uniform_length(&self) -> Option<usize> {
        if self.spectrum.len() == 1 {
            self.spectrum.keys().next().copied()
        } else {
            None
        }
    }
}

/// The single convex-cycle length; `None` when there are no cycles or the
/// lengths are mixed.
pub fn length_spectrum_uniform(set: &ConvexCycleSet) -> Option<usize> {
    set.uniform_length()
}

/// Is S isometric: do induced distances match host distances?
pub fn is_isometric_set(
    g: &Graph,
    d: &DistanceMatrix,
    s: &VertexSet,
) -> Result<bool, ConvexityError> {
    let (sub, map) = induced_subgraph(g, s);
    if sub.vertex_count() > 0 && !sub.is_connected() {
        return Err(ConvexityError::InducedDisconnected);
    }
    let ds = crate::graph::all_pairs_distances(&sub);
    for a in 0..sub.vertex_count() {
        for b in a + 1..sub.vertex_count() {
            if ds.get(a, b) != d.get(map[a], map[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convexity check; a failure returns (u, v, z) with u, v ∈ S and z on a
/// u-v geodesic outside S.
pub fn is_convex_set(
    g: &Graph,
    d: &DistanceMatrix,
    s: &VertexSet,
) -> (bool, Option<(usize, usize, usize)>) {
    let members: Vec<usize> = s.iter().collect();
    let outside: Vec<usize> = (0..g.vertex_count()).filter(|&z| !s.contains(z)).collect();
    if outside.is_empty() {
        return (true, None);
    }
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let Some(duv) = d.get(u, v) else {
                continue;
            };
            for &z in &outside {
                if let (Some(a), Some(b)) = (d.get(u, z), d.get(z, v)) {
                    if a + b == duv {
                        return (false, Some((u, v, z)));
                    }
                }
            }
        }
    }
    (true, None)
}

/// Smallest convex superset: iterate interval closure to a fixed point.
pub fn convex_hull(g: &Graph, d: &DistanceMatrix, s: &VertexSet) -> VertexSet {
    let mut hull = s.clone();
    loop {
        let members: Vec<usize> = hull.iter().collect();
        let mut grew = false;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let Some(duv) = d.get(u, v) else {
                    continue;
                };
                for z in 0..g.vertex_count() {
                    if !hull.contains(z) {
                        if let (Some(a), Some(b)) = (d.get(u, z), d.get(z, v)) {
                            if a + b == duv {
                                hull.insert(z);
                                grew = true;
                            }
                        }
                    }
                }
            }
        }
        if !grew {
            return hull;
        }
    }
}

/// Convex cycle = convex vertex set + no chord.
pub fn is_convex_cycle(g: &Graph, d: &DistanceMatrix, c: &CycleSubgraph) -> bool {
    let vs = c.vertices();
    let l = vs.len();
    for i in 0..l {
        for j in i + 1..l {
            let consecutive = j == i + 1 || (i == 0 && j == l - 1);
            if !consecutive && g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    let set = c.vertex_set(g.vertex_count());
    is_convex_set(g, d, &set).0
}

/// Θ-route enumeration. For each Θ-class F and each ordered pair of distinct
/// edges of F with endpoints paired across the cut, a convex cycle through
/// the pair must consist of the two unique, vertex-disjoint geodesics joining
/// paired endpoints plus the two edges; candidates failing uniqueness,
/// disjointness, or the final convexity filter are discarded. Every convex
/// 2k-cycle is generated by all 2k ordered pairs of its k antipodal edge
/// pairs and deduplicated by canonical form.
///
/// Callers must hold a strict Θ-partition, i.e. the graph is a verified
/// partial cube.
pub fn enumerate_convex_cycles(
    g: &Graph,
    d: &DistanceMatrix,
    tp: &ThetaPartition,
) -> ConvexCycleSet {
    let n = g.vertex_count();
    let mut found: Vec<CycleSubgraph> = Vec::new();
    let mut on_arc = vec![false; n];
    // Candidates are re-generated through every class of the cycle; dedup by
    // vertex set before the convexity filter. Distinct cycle orders on one
    // vertex set force chords on all of them, so nothing convex is lost.
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    for class in tp.classes() {
        for &e1 in class {
            let (u1, v1) = g.edge(e1);
            let counts_u = geodesic_counts_from(g, d, u1);
            let counts_v = geodesic_counts_from(g, d, v1);
            for &e2 in class {
                if e2 == e1 {
                    continue;
                }
                let (x, y) = g.edge(e2);
                // pair endpoints across the cut: u2 on u1's side
                let (u2, v2) = if d.get(u1, x) < d.get(v1, x) {
                    (x, y)
                } else {
                    (y, x)
                };
                debug_assert_eq!(d.get(u1, u2), d.get(v1, v2));
                debug_assert_eq!(d.get(u1, v2), d.get(u1, u2).map(|t| t + 1));
                if counts_u[u2] != 1 || counts_v[v2] != 1 {
                    continue;
                }
                let arc_u = unique_geodesic(g, d, u1, u2);
                let arc_v = unique_geodesic(g, d, v1, v2);
                for &w in &arc_u {
                    on_arc[w] = true;
                }
                let disjoint = arc_v.iter().all(|&w| !on_arc[w]);
                for &w in &arc_u {
                    on_arc[w] = false;
                }
                if !disjoint {
                    continue;
                }
                // u1 .. u2, v2 .. v1, close at u1
                let mut cycle = arc_u;
                cycle.extend(arc_v.into_iter().rev());
                let mut key = cycle.clone();
                key.sort_unstable();
                if !seen.insert(key) {
                    continue;
                }
                let candidate =
                    CycleSubgraph::new(g, &cycle).expect("arcs and class edges form a cycle");
                if is_convex_cycle(g, d, &candidate) {
                    found.push(candidate);
                }
            }
        }
    }
    ConvexCycleSet::from_cycles(found)
}

/// The unique shortest a-b path, as vertices from a to b. Callers must have
/// checked that the geodesic count is one.
fn unique_geodesic(g: &Graph, d: &DistanceMatrix, a: usize, b: usize) -> Vec<usize> {
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        let dx = d.get(a, x).expect("connected");
        let prev = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&y| d.get(a, y) == Some(dx - 1))
            .expect("predecessor on geodesic");
        path.push(prev);
        x = prev;
    }
    path.reverse();
    path
}

/// Brute-force route: enumerate all chordless cycles by canonical DFS, then
/// keep the convex ones. Exponential in the worst case, hence the bound.
pub fn enumerate_convex_cycles_bruteforce(
    g: &Graph,
    d: &DistanceMatrix,
    bound: usize,
) -> Result<ConvexCycleSet, ConvexityError> {
    if g.vertex_count() > bound {
        return Err(ConvexityError::OracleBoundExceeded {
            vertices: g.vertex_count(),
            bound,
        });
    }
    let cycles = chordless_cycles(g)
        .into_iter()
        .filter(|c| is_convex_cycle(g, d, c))
        .collect();
    Ok(ConvexCycleSet::from_cycles(cycles))
}

/// All chordless cycles, each exactly once: the DFS fixes the smallest cycle
/// vertex as the root, keeps the path induced (no chords), and breaks the
/// direction tie by requiring the second path vertex to be smaller than the
/// vertex that closes the cycle.
pub(crate) fn chordless_cycles(g: &Graph) -> Vec<CycleSubgraph> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut in_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        in_path[root] = true;
        for &second in g.neighbors(root) {
            if second <= root {
                continue;
            }
            path.push(second);
            in_path[second] = true;
            extend_chordless(g, root, &mut path, &mut in_path, &mut out);
            in_path[second] = false;
            path.pop();
        }
        in_path[root] = false;
        path.pop();
    }
    out
}

fn extend_chordless(
    g: &Graph,
    root: usize,
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
    out: &mut Vec<CycleSubgraph>,
) {
    let last = *path.last().unwrap();
    for &next in g.neighbors(last) {
        if next <= root || in_path[next] {
            continue;
        }
        let closes = g.has_edge(next, root);
        // interior path vertices path[1..] except the last must not see next
        let mut chord = false;
        for &p in &path[1..path.len() - 1] {
            if g.has_edge(next, p) {
                chord = true;
                break;
            }
        }
        if chord {
            continue;
        }
        if closes {
            if path.len() >= 2 && path[1] < next {
                let mut cycle = path.clone();
                cycle.push(next);
                out.push(CycleSubgraph::new(g, &cycle).expect("DFS builds valid cycles"));
            }
            // a longer chordless cycle through `next` would carry the chord
            // (next, root), so do not extend past a closing vertex
            continue;
        }
        path.push(next);
        in_path[next] = true;
        extend_chordless(g, root, path, in_path, out);
        in_path[next] = false;
        path.pop();
    }
}
