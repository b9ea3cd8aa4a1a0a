//! Simple undirected graphs with dense vertex indices, BFS metric toolkit.
//!
//! Invariants maintained by every constructor:
//! - no loops, no parallel edges
//! - adjacency lists sorted ascending
//! - edge list canonical: each edge stored once as (u, v) with u < v,
//!   list sorted lexicographically; the position of an edge in this list is
//!   its stable edge id

use crate::bits::BitVec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {v} rejected")]
    RejectLoop { v: usize },
    #[error("endpoint {index} out of range for vertex count {vertex_count}")]
    RejectRange { index: usize, vertex_count: usize },
    #[error("vertices {u} and {v} lie in different components")]
    DisconnectedPair { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

/// Set of vertices of a fixed host graph, bitset-backed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: BitVec,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: BitVec::zeros(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, vs: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// `names` carries the original input identifiers (file labels, subset
/// annotations of doubled odd graphs, product coordinates) for reports;
/// algorithms only ever see the dense indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from endpoint pairs. Duplicate edges (in either
    /// orientation) collapse to one; loops and out-of-range endpoints are
    /// rejected. With `vertex_count: None` the count is `max endpoint + 1`
    /// (zero for an empty list).
    pub fn from_edge_list(
        pairs: &[(usize, usize)],
        vertex_count: Option<usize>,
    ) -> Result<Graph, GraphError> {
        let inferred = pairs
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0);
        let n = match vertex_count {
            Some(n) => {
                for &(u, v) in pairs {
                    let worst = u.max(v);
                    if worst >= n {
                        return Err(GraphError::RejectRange {
                            index: worst,
                            vertex_count: n,
                        });
                    }
                }
                n
            }
            None => inferred,
        };
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(GraphError::RejectLoop { v: u });
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Graph {
        assert_eq!(names.len(), self.vertex_count());
        self.names = Some(names);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: (u, v) with u < v, sorted; index = edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Stable id of edge {u, v}, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Report identifier of a vertex: original input name when one was
    /// retained, otherwise the dense index.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let order = bfs_order(self, 0);
        order.len() == n
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges
        )
    }
}

pub const UNREACHABLE: u32 = u32::MAX;

/// Dense all-pairs distance table. Unreachable pairs hold a sentinel, not a
/// large number: arithmetic across components must fail loudly, so the only
/// way to read a distance is [`DistanceMatrix::get`].
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when the pair is disconnected.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.dist[u * self.n + v] != UNREACHABLE
    }

    /// Largest finite distance; `None` for the empty graph.
    pub fn diameter(&self) -> Option<u32> {
        self.dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .max()
            .copied()
    }
}

fn bfs_order(g: &Graph, source: usize) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    let mut order = Vec::new();
    seen[source] = true;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    order
}

fn bfs_distances(g: &Graph, source: usize, out: &mut [u32]) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let dx = out[x];
        for &y in g.neighbors(x) {
            if out[y] == UNREACHABLE {
                out[y] = dx + 1;
                queue.push_back(y);
            }
        }
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n * n];
    for s in 0..n {
        bfs_distances(g, s, &mut dist[s * n..(s + 1) * n]);
    }
    DistanceMatrix { n, dist }
}

/// Length of a shortest cycle; `None` when the graph is acyclic.
///
/// For each edge {u, v}: a shortest u-v path avoiding that edge plus the edge
/// itself is a shortest cycle through it; the minimum over edges is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = std::collections::VecDeque::new();
    for &(u, v) in g.edges() {
        dist.fill(UNREACHABLE);
        dist[u] = 0;
        queue.clear();
        queue.push_back(u);
        'bfs: while let Some(x) = queue.pop_front() {
            let dx = dist[x];
            if let Some(b) = best {
                // cycle through {u,v} cannot beat the bound any more
                if dx as usize + 2 > b {
                    break 'bfs;
                }
            }
            for &y in g.neighbors(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if dist[y] == UNREACHABLE {
                    dist[y] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != UNREACHABLE {
            let cycle = dist[v] as usize + 1;
            if best.is_none_or(|b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    /// `Some(k)` iff every vertex has degree exactly k (and the graph is
    /// nonempty).
    pub fn regular(&self) -> Option<usize> {
        (self.min_degree == self.max_degree).then_some(self.min_degree)
    }
}

pub fn degree_profile(g: &Graph) -> Option<DegreeProfile> {
    let degrees = (0..g.vertex_count()).map(|v| g.degree(v));
    let (mut min_degree, mut max_degree) = (usize::MAX, 0);
    let mut any = false;
    for d in degrees {
        any = true;
        min_degree = min_degree.min(d);
        max_degree = max_degree.max(d);
    }
    any.then_some(DegreeProfile {
        min_degree,
        max_degree,
    })
}

/// Two-coloring or an explicit odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` ∈ {0, 1}; every edge joins different colors.
    Bipartite { coloring: Vec<u8> },
    /// Vertex sequence of an odd closed cycle (first vertex not repeated).
    OddCycle { cycle: Vec<usize> },
}

pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Bipartiteness::OddCycle {
                        cycle: odd_cycle_witness(&parent, x, y),
                    };
                }
            }
        }
    }
    Bipartiteness::Bipartite { coloring: color }
}

/// Joins the two BFS-tree paths from x and y back to their lowest common
/// ancestor; with color[x] == color[y] the resulting cycle is odd.
fn odd_cycle_witness(parent: &[usize], x: usize, y: usize) -> Vec<usize> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let px = ancestors(x);
    let py = ancestors(y);
    let in_px: std::collections::HashSet<usize> = px.iter().copied().collect();
    let lca = *py.iter().find(|v| in_px.contains(v)).expect("shared root");
    let mut cycle: Vec<usize> = px.iter().take_while(|&&v| v != lca).copied().collect();
    cycle.push(lca);
    let tail: Vec<usize> = py.iter().take_while(|&&v| v != lca).copied().collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

/// I(u, v): vertices on at least one shortest u-v path.
pub fn interval(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<VertexSet, GraphError> {
    let duv = d.get(u, v).ok_or(GraphError::DisconnectedPair { u, v })?;
    let mut set = VertexSet::empty(g.vertex_count());
    for z in 0..g.vertex_count() {
        if let (Some(a), Some(b)) = (d.get(u, z), d.get(z, v)) {
            if a + b == duv {
                set.insert(z);
            }
        }
    }
    Ok(set)
}

/// Number of shortest u-v paths, via the layered DAG of the BFS from u.
pub fn geodesic_count(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<u64, GraphError> {
    if !d.is_reachable(u, v) {
        return Err(GraphError::DisconnectedPair { u, v });
    }
    Ok(geodesic_counts_from(g, d, u)[v])
}

/// Shortest-path counts from `u` to every vertex (0 when unreachable).
pub fn geodesic_counts_from(g: &Graph, d: &DistanceMatrix, u: usize) -> Vec<u64> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).filter(|&x| d.is_reachable(u, x)).collect();
    order.sort_unstable_by_key(|&x| d.get(u, x).unwrap());
    let mut count = vec![0u64; n];
    count[u] = 1;
    for &x in &order {
        if x == u {
            continue;
        }
        let dx = d.get(u, x).unwrap();
        let mut c: u64 = 0;
        for &y in g.neighbors(x) {
            if d.get(u, y) == Some(dx - 1) {
                c += count[y];
            }
        }
        count[x] = c;
    }
    count
}

/// Cartesian product G □ H: (a, x) ~ (b, y) iff (a = b and x ~ y) or
/// (a ~ b and x = y). Vertex (a, x) gets index a * |V(H)| + x.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let idx = |a: usize, x: usize| a * nh + x;
    let mut pairs = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * ng);
    for a in 0..ng {
        for &(x, y) in h.edges() {
            pairs.push((idx(a, x), idx(a, y)));
        }
    }
    for &(a, b) in g.edges() {
        for x in 0..nh {
            pairs.push((idx(a, x), idx(b, x)));
        }
    }
    let product = Graph::from_edge_list(&pairs, Some(ng * nh)).expect("product edges in range");
    let names = (0..ng)
        .flat_map(|a| (0..nh).map(move |x| (a, x)))
        .map(|(a, x)| format!("({},{})", g.vertex_name(a), h.vertex_name(x)))
        .collect();
    product.with_names(names)
}

/// Subgraph induced by `s`, with `map[new] = old` giving the reindexing.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> (Graph, Vec<usize>) {
    let map: Vec<usize> = s.iter().collect();
    let mut back = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in map.iter().enumerate() {
        back[old] = new;
    }
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if s.contains(u) && s.contains(v) {
            pairs.push((back[u], back[v]));
        }
    }
    let sub = Graph::from_edge_list(&pairs, Some(map.len())).expect("induced edges in range");
    let sub = match g.names() {
        Some(names) => sub.with_names(map.iter().map(|&old| names[old].clone()).collect()),
        None => sub,
    };
    (sub, map)
}
