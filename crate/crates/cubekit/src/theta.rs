//! The Djokovic-Winkler relation Θ and everything it induces.
//!
//! Edges e = uv and f = xy are Θ-related iff
//! d(u,x) + d(v,y) ≠ d(u,y) + d(v,x). On a connected bipartite graph this is
//! the same as: f has one endpoint strictly closer to u and the other
//! strictly closer to v, i.e. f crosses the cut (W_uv, W_vu). A connected
//! graph is a partial cube iff it is bipartite and Θ is transitive; the
//! Θ-classes are then the coordinate cuts of the hypercube embedding.

use crate::graph::{
    all_pairs_distances, is_bipartite, Bipartiteness, DistanceMatrix, Graph, GraphError, VertexSet,
};
use crate::bits::BitVec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThetaError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("theta is not transitive: edges {e:?}, {f:?}, {h:?}")]
    NotTransitive {
        e: (usize, usize),
        f: (usize, usize),
        h: (usize, usize),
    },
}

/// Whether edges e and f (given by endpoints) are Θ-related.
pub fn theta_related(
    g: &Graph,
    d: &DistanceMatrix,
    e: (usize, usize),
    f: (usize, usize),
) -> Result<bool, GraphError> {
    for (u, v) in [e, f] {
        if g.edge_index(u, v).is_none() {
            return Err(GraphError::NotAnEdge { u, v });
        }
    }
    let (u, v) = e;
    let (x, y) = f;
    let dd = |a: usize, b: usize| d.get(a, b).expect("edges lie in one component");
    Ok(dd(u, x) + dd(v, y) != dd(u, y) + dd(v, x))
}

/// Partition of the edge set into Θ-classes.
///
/// Classes are numbered in order of their smallest edge id, so class ids are
/// stable for a fixed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl ThetaPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_edge(&self, e: usize) -> usize {
        self.class_of[e]
    }

    /// Edge ids of class c, ascending.
    pub fn class_edges(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

/// Number of Θ-classes: the dimension of the smallest hypercube the graph
/// embeds into isometrically.
pub fn isometric_dimension(tp: &ThetaPartition) -> usize {
    tp.class_count()
}

/// Side assignment of every vertex relative to directed edge (u, v):
/// true = strictly closer to u. In a connected bipartite graph no vertex is
/// equidistant from u and v.
fn sides(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Vec<bool> {
    (0..g.vertex_count())
        .map(|w| {
            let du = d.get(w, u).expect("connected");
            let dv = d.get(w, v).expect("connected");
            debug_assert_ne!(du, dv, "equidistant vertex in bipartite graph");
            du < dv
        })
        .collect()
}

/// Edge ids crossing the (W_uv, W_vu) cut; on a connected bipartite graph
/// these are exactly the edges Θ-related to uv (uv included).
fn crossing_edges(g: &Graph, side: &[bool]) -> Vec<usize> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(x, y))| side[x] != side[y])
        .map(|(e, _)| e)
        .collect()
}

/// Θ-classes by cut propagation, without the transitivity check. On a graph
/// where Θ is not transitive the result depends on representative choice and
/// is only good for diagnosis.
pub fn theta_partition_raw(g: &Graph, d: &DistanceMatrix) -> Result<ThetaPartition, ThetaError> {
    if !g.is_connected() {
        return Err(ThetaError::NotConnected);
    }
    if matches!(is_bipartite(g), Bipartiteness::OddCycle { .. }) {
        return Err(ThetaError::NotBipartite);
    }
    let m = g.edge_count();
    let mut class_of = vec![usize::MAX; m];
    let mut classes = Vec::new();
    for e in 0..m {
        if class_of[e] != usize::MAX {
            continue;
        }
        let (u, v) = g.edge(e);
        let side = sides(g, d, u, v);
        let members = crossing_edges(g, &side);
        let id = classes.len();
        for &f in &members {
            if class_of[f] == usize::MAX {
                class_of[f] = id;
            }
        }
        classes.push(members.into_iter().filter(|&f| class_of[f] == id).collect());
    }
    Ok(ThetaPartition { class_of, classes })
}

/// Crossing set of edge e as a bitset over edge ids: on a connected
/// bipartite graph, exactly the edges Θ-related to e (e included).
fn neighborhood_bits(g: &Graph, d: &DistanceMatrix, e: usize) -> BitVec {
    let (u, v) = g.edge(e);
    let side = sides(g, d, u, v);
    let mut bits = BitVec::zeros(g.edge_count());
    for (f, &(x, y)) in g.edges().iter().enumerate() {
        if side[x] != side[y] {
            bits.set(f, true);
        }
    }
    bits
}

/// Θ-classes with the equivalence property verified: every edge of a class
/// must have the identical Θ-neighborhood. A failure yields a triple
/// (e, f, h) with e Θ f, f Θ h, but not e Θ h.
pub fn theta_partition(g: &Graph, d: &DistanceMatrix) -> Result<ThetaPartition, ThetaError> {
    if !g.is_connected() {
        return Err(ThetaError::NotConnected);
    }
    if matches!(is_bipartite(g), Bipartiteness::OddCycle { .. }) {
        return Err(ThetaError::NotBipartite);
    }
    let m = g.edge_count();
    let mut class_of = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in 0..m {
        if class_of[e] != usize::MAX {
            continue;
        }
        let ne = neighborhood_bits(g, d, e);
        let members: Vec<usize> = ne.iter_ones().collect();
        for &f in &members {
            if f == e {
                continue;
            }
            if class_of[f] != usize::MAX {
                // f already belongs to an earlier class with representative
                // rep: e Θ f and f Θ rep, yet e is unassigned so ¬(e Θ rep)
                let rep = classes[class_of[f]][0];
                return Err(ThetaError::NotTransitive {
                    e: g.edge(e),
                    f: g.edge(f),
                    h: g.edge(rep),
                });
            }
            let nf = neighborhood_bits(g, d, f);
            if nf != ne {
                for z in 0..m {
                    match (ne.get(z), nf.get(z)) {
                        // e Θ f, f Θ z, ¬(e Θ z)
                        (false, true) => {
                            return Err(ThetaError::NotTransitive {
                                e: g.edge(e),
                                f: g.edge(f),
                                h: g.edge(z),
                            })
                        }
                        // f Θ e, e Θ z, ¬(f Θ z)
                        (true, false) => {
                            return Err(ThetaError::NotTransitive {
                                e: g.edge(f),
                                f: g.edge(e),
                                h: g.edge(z),
                            })
                        }
                        _ => {}
                    }
                }
                unreachable!("bitsets differ");
            }
        }
        let id = classes.len();
        for &f in &members {
            class_of[f] = id;
        }
        classes.push(members);
    }
    Ok(ThetaPartition { class_of, classes })
}

/// Half-spaces and their boundary layers for a directed edge (u, v).
///
/// W_uv: vertices strictly closer to u; U_uv: members of W_uv incident to an
/// edge of the Θ-class of uv. |U_uv| = |U_vu| = |F_uv|.
#[derive(Debug, Clone)]
pub struct HalfSpaces {
    pub u: usize,
    pub v: usize,
    pub w_uv: VertexSet,
    pub w_vu: VertexSet,
    pub u_uv: VertexSet,
    pub u_vu: VertexSet,
}

pub fn halfspaces(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<HalfSpaces, GraphError> {
    if g.edge_index(u, v).is_none() {
        return Err(GraphError::NotAnEdge { u, v });
    }
    let n = g.vertex_count();
    let side = sides(g, d, u, v);
    let mut w_uv = VertexSet::empty(n);
    let mut w_vu = VertexSet::empty(n);
    for w in 0..n {
        if side[w] {
            w_uv.insert(w);
        } else {
            w_vu.insert(w);
        }
    }
    let mut u_uv = VertexSet::empty(n);
    let mut u_vu = VertexSet::empty(n);
    for &(x, y) in g.edges() {
        if side[x] != side[y] {
            let (a, b) = if side[x] { (x, y) } else { (y, x) };
            u_uv.insert(a);
            u_vu.insert(b);
        }
    }
    Ok(HalfSpaces {
        u,
        v,
        w_uv,
        w_vu,
        u_uv,
        u_vu,
    })
}

/// Isometric embedding into a hypercube, one bit per Θ-class.
///
/// Deterministic orientation: bit i corresponds to the class with the i-th
/// smallest minimum edge id, and the side containing vertex 0 maps to 0.
/// Self-certified: construction fails unless Hamming distance equals graph
/// distance for every vertex pair.
#[derive(Debug, Clone)]
pub struct HypercubeLabeling {
    labels: Vec<BitVec>,
    /// Per class, a directed edge (a, b): a on the 0-side, b on the 1-side.
    orientation: Vec<(usize, usize)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labels of {u} and {v} are at Hamming distance {hamming} but graph distance {dist}")]
    NotIsometric {
        u: usize,
        v: usize,
        hamming: usize,
        dist: usize,
    },
}

impl HypercubeLabeling {
    pub fn class_count(&self) -> usize {
        self.orientation.len()
    }

    pub fn label(&self, v: usize) -> &BitVec {
        &self.labels[v]
    }

    pub fn label_bitstring(&self, v: usize) -> String {
        self.labels[v].to_bitstring()
    }

    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.labels[u].hamming(&self.labels[v])
    }

    /// Directed representative edge of class i: (0-side endpoint, 1-side).
    pub fn orientation(&self, class: usize) -> (usize, usize) {
        self.orientation[class]
    }

    pub fn labels(&self) -> &[BitVec] {
        &self.labels
    }
}

pub fn labeling(
    g: &Graph,
    d: &DistanceMatrix,
    tp: &ThetaPartition,
) -> Result<HypercubeLabeling, LabelingError> {
    let n = g.vertex_count();
    let k = tp.class_count();
    let mut labels = vec![BitVec::zeros(k); n];
    let mut orientation = Vec::with_capacity(k);
    for (i, class) in tp.classes().iter().enumerate() {
        let (mut a, mut b) = g.edge(class[0]);
        let da = d.get(0, a).expect("connected");
        let db = d.get(0, b).expect("connected");
        if db < da {
            std::mem::swap(&mut a, &mut b);
        }
        orientation.push((a, b));
        for w in 0..n {
            let one_side = d.get(w, b).expect("connected") < d.get(w, a).expect("connected");
            if one_side {
                labels[w].set(i, true);
            }
        }
    }
    let lab = HypercubeLabeling { labels, orientation };
    for u in 0..n {
        for v in u + 1..n {
            let hamming = lab.hamming(u, v);
            let dist = d.get(u, v).expect("connected") as usize;
            if hamming != dist {
                return Err(LabelingError::NotIsometric {
                    u,
                    v,
                    hamming,
                    dist,
                });
            }
        }
    }
    Ok(lab)
}

/// For each vertex v, the sorted set F(v) of classes of edges at v.
#[derive(Debug, Clone)]
pub struct IncidentClassFamily {
    at: Vec<Vec<usize>>,
}

impl IncidentClassFamily {
    pub fn new(g: &Graph, tp: &ThetaPartition) -> Self {
        let mut at = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let c = tp.class_of_edge(e);
            at[u].push(c);
            at[v].push(c);
        }
        for list in &mut at {
            list.sort_unstable();
            list.dedup();
        }
        IncidentClassFamily { at }
    }

    pub fn classes_at(&self, v: usize) -> &[usize] {
        &self.at[v]
    }

    pub fn contains(&self, v: usize, class: usize) -> bool {
        self.at[v].binary_search(&class).is_ok()
    }
}

/// Negative certificate of partial-cube recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotPartialCubeWitness {
    NotConnected,
    NotBipartite { odd_cycle: Vec<usize> },
    ThetaNotTransitive {
        e: (usize, usize),
        f: (usize, usize),
        h: (usize, usize),
    },
    /// Mathematically unreachable after the other checks pass (Winkler);
    /// kept as the final self-certification of the embedding.
    LabelingNotIsometric { u: usize, v: usize },
}

/// Positive certificate: distances, Θ-classes and a verified labeling.
pub struct PartialCubeCertificate {
    pub distances: DistanceMatrix,
    pub partition: ThetaPartition,
    pub labeling: HypercubeLabeling,
}

pub enum PartialCubeCheck {
    PartialCube(Box<PartialCubeCertificate>),
    Not(NotPartialCubeWitness),
}

impl PartialCubeCheck {
    pub fn is_partial_cube(&self) -> bool {
        matches!(self, PartialCubeCheck::PartialCube(_))
    }

    pub fn certificate(&self) -> Option<&PartialCubeCertificate> {
        match self {
            PartialCubeCheck::PartialCube(c) => Some(c),
            PartialCubeCheck::Not(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&NotPartialCubeWitness> {
        match self {
            PartialCubeCheck::PartialCube(_) => None,
            PartialCubeCheck::Not(w) => Some(w),
        }
    }
}

/// Partial-cube recognition: connected + bipartite + Θ transitive, then the
/// labeling is built and certified isometric.
pub fn is_partial_cube(g: &Graph) -> PartialCubeCheck {
    if !g.is_connected() {
        return PartialCubeCheck::Not(NotPartialCubeWitness::NotConnected);
    }
    if let Bipartiteness::OddCycle { cycle } = is_bipartite(g) {
        return PartialCubeCheck::Not(NotPartialCubeWitness::NotBipartite { odd_cycle: cycle });
    }
    let distances = all_pairs_distances(g);
    let partition = match theta_partition(g, &distances) {
        Ok(tp) => tp,
        Err(ThetaError::NotTransitive { e, f, h }) => {
            return PartialCubeCheck::Not(NotPartialCubeWitness::ThetaNotTransitive { e, f, h });
        }
        Err(_) => unreachable!("connectivity and bipartiteness checked above"),
    };
    match labeling(g, &distances, &partition) {
        Ok(labeling) => PartialCubeCheck::PartialCube(Box::new(PartialCubeCertificate {
            distances,
            partition,
            labeling,
        })),
        Err(LabelingError::NotIsometric { u, v, .. }) => {
            PartialCubeCheck::Not(NotPartialCubeWitness::LabelingNotIsometric { u, v })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&pairs, Some(n)).unwrap()
    }

    fn hypercube(k: u32) -> Graph {
        let n = 1usize << k;
        let mut pairs = Vec::new();
        for v in 0..n {
            for b in 0..k {
                if v < v ^ (1 << b) {
                    pairs.push((v, v ^ (1 << b)));
                }
            }
        }
        Graph::from_edge_list(&pairs, Some(n)).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edge_list(&[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], None).unwrap()
    }

    #[test]
    fn theta_on_cycles_and_cubes() {
        let c6 = cycle(6);
        let d = all_pairs_distances(&c6);
        assert!(theta_related(&c6, &d, (0, 1), (3, 4)).unwrap());
        assert!(!theta_related(&c6, &d, (0, 1), (1, 2)).unwrap());
        assert!(theta_related(&c6, &d, (0, 1), (0, 1)).unwrap());

        let q3 = hypercube(3);
        let dq = all_pairs_distances(&q3);
        // same coordinate direction
        assert!(theta_related(&q3, &dq, (0b000, 0b001), (0b110, 0b111)).unwrap());
        // different coordinate directions
        assert!(!theta_related(&q3, &dq, (0b000, 0b001), (0b000, 0b010)).unwrap());

        assert_eq!(
            theta_related(&c6, &d, (0, 2), (3, 4)),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn theta_is_symmetric_and_reflexive_on_corpus_edges() {
        for g in [cycle(8), hypercube(3), k23()] {
            let d = all_pairs_distances(&g);
            for &e in g.edges() {
                assert!(theta_related(&g, &d, e, e).unwrap());
                for &f in g.edges() {
                    assert_eq!(
                        theta_related(&g, &d, e, f).unwrap(),
                        theta_related(&g, &d, f, e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn partition_of_hypercube_has_coordinate_classes() {
        for k in 1..=4u32 {
            let g = hypercube(k);
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            assert_eq!(tp.class_count(), k as usize);
            for class in tp.classes() {
                assert_eq!(class.len(), 1 << (k - 1));
                // all edges of one class flip the same bit
                let (u0, v0) = g.edge(class[0]);
                let flip = u0 ^ v0;
                for &e in class {
                    let (u, v) = g.edge(e);
                    assert_eq!(u ^ v, flip);
                }
            }
        }
    }

    #[test]
    fn partition_of_even_cycle_pairs_antipodal_edges() {
        let g = cycle(10);
        let d = all_pairs_distances(&g);
        let tp = theta_partition(&g, &d).unwrap();
        assert_eq!(tp.class_count(), 5);
        for class in tp.classes() {
            assert_eq!(class.len(), 2);
        }
        let e01 = g.edge_index(0, 1).unwrap();
        let e56 = g.edge_index(5, 6).unwrap();
        assert_eq!(tp.class_of_edge(e01), tp.class_of_edge(e56));
    }

    #[test]
    fn partition_of_tree_is_singletons() {
        let star_plus = Graph::from_edge_list(&[(0, 1), (0, 2), (0, 3), (3, 4)], None).unwrap();
        let d = all_pairs_distances(&star_plus);
        let tp = theta_partition(&star_plus, &d).unwrap();
        assert_eq!(tp.class_count(), 4);
        assert!(tp.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn classes_are_ordered_by_smallest_edge_id() {
        let g = hypercube(4);
        let d = all_pairs_distances(&g);
        let tp = theta_partition(&g, &d).unwrap();
        let mins: Vec<usize> = tp.classes().iter().map(|c| c[0]).collect();
        let mut sorted = mins.clone();
        sorted.sort_unstable();
        assert_eq!(mins, sorted);
        for (e, &(_, _)) in g.edges().iter().enumerate() {
            let c = tp.class_of_edge(e);
            assert!(tp.class_edges(c).contains(&e));
        }
    }

    #[test]
    fn k23_fails_transitivity_with_a_valid_witness() {
        let g = k23();
        let d = all_pairs_distances(&g);
        match theta_partition(&g, &d) {
            Err(ThetaError::NotTransitive { e, f, h }) => {
                assert!(theta_related(&g, &d, e, f).unwrap());
                assert!(theta_related(&g, &d, f, h).unwrap());
                assert!(!theta_related(&g, &d, e, h).unwrap());
            }
            other => panic!("expected non-transitive witness, got {other:?}"),
        }
    }

    #[test]
    fn halfspace_sizes() {
        let k2 = Graph::from_edge_list(&[(0, 1)], None).unwrap();
        let d2 = all_pairs_distances(&k2);
        let hs = halfspaces(&k2, &d2, 0, 1).unwrap();
        assert_eq!(hs.w_uv.to_vec(), vec![0]);
        assert_eq!(hs.u_vu.to_vec(), vec![1]);

        let c6 = cycle(6);
        let d6 = all_pairs_distances(&c6);
        let hs = halfspaces(&c6, &d6, 0, 1).unwrap();
        assert_eq!(hs.w_uv.len(), 3);
        assert_eq!(hs.w_vu.len(), 3);
        assert_eq!(hs.u_uv.len(), 2);
        assert_eq!(hs.u_vu.len(), 2);
        assert_eq!(hs.u_uv.to_vec(), vec![0, 4]);

        let q3 = hypercube(3);
        let dq = all_pairs_distances(&q3);
        let hs = halfspaces(&q3, &dq, 0b000, 0b001).unwrap();
        assert_eq!(hs.w_uv.len(), 4);
        assert_eq!(hs.u_uv.len(), 4);
        // U-side of a hypercube class induces a facet subcube, here a 4-cycle
        let (sub, _) = crate::graph::induced_subgraph(&q3, &hs.u_uv);
        assert_eq!(sub.edge_count(), 4);
        assert_eq!(crate::graph::girth(&sub), Some(4));
    }

    #[test]
    fn u_sets_match_class_size_on_partial_cubes() {
        for g in [cycle(8), hypercube(3), hypercube(4)] {
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            for class in tp.classes() {
                let (u, v) = g.edge(class[0]);
                let hs = halfspaces(&g, &d, u, v).unwrap();
                assert_eq!(hs.u_uv.len(), class.len());
                assert_eq!(hs.u_vu.len(), class.len());
                assert_eq!(hs.w_uv.len() + hs.w_vu.len(), g.vertex_count());
            }
        }
    }

    #[test]
    fn labeling_of_k2_c6_q3() {
        let k2 = Graph::from_edge_list(&[(0, 1)], None).unwrap();
        let d = all_pairs_distances(&k2);
        let tp = theta_partition(&k2, &d).unwrap();
        let lab = labeling(&k2, &d, &tp).unwrap();
        assert_eq!(lab.label_bitstring(0), "0");
        assert_eq!(lab.label_bitstring(1), "1");

        let c6 = cycle(6);
        let d6 = all_pairs_distances(&c6);
        let tp6 = theta_partition(&c6, &d6).unwrap();
        let lab6 = labeling(&c6, &d6, &tp6).unwrap();
        assert_eq!(lab6.class_count(), 3);
        let distinct: std::collections::HashSet<String> =
            (0..6).map(|v| lab6.label_bitstring(v)).collect();
        assert_eq!(distinct.len(), 6);
        for i in 0..6 {
            assert_eq!(lab6.hamming(i, (i + 1) % 6), 1);
        }

        let q3 = hypercube(3);
        let dq = all_pairs_distances(&q3);
        let tpq = theta_partition(&q3, &dq).unwrap();
        let labq = labeling(&q3, &dq, &tpq).unwrap();
        let all: std::collections::HashSet<String> =
            (0..8).map(|v| labq.label_bitstring(v)).collect();
        assert_eq!(all.len(), 8); // bijective onto {0,1}^3
        assert_eq!(labq.label_bitstring(0), "000");
    }

    #[test]
    fn vertex_zero_gets_the_all_zero_label() {
        for g in [cycle(12), hypercube(4)] {
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            let lab = labeling(&g, &d, &tp).unwrap();
            assert_eq!(lab.label(0).count_ones(), 0);
        }
    }

    #[test]
    fn labels_flip_exactly_the_class_bit_across_each_edge() {
        let g = hypercube(4);
        let d = all_pairs_distances(&g);
        let tp = theta_partition(&g, &d).unwrap();
        let lab = labeling(&g, &d, &tp).unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let c = tp.class_of_edge(e);
            assert_eq!(lab.hamming(u, v), 1);
            assert_ne!(lab.label(u).get(c), lab.label(v).get(c));
        }
    }

    #[test]
    fn isometric_dimension_examples() {
        for (g, idim) in [
            (hypercube(3), 3),
            (hypercube(5), 5),
            (cycle(8), 4),
            (cycle(14), 7),
        ] {
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            assert_eq!(isometric_dimension(&tp), idim);
        }
    }

    #[test]
    fn incident_classes_examples() {
        let q3 = hypercube(3);
        let d = all_pairs_distances(&q3);
        let tp = theta_partition(&q3, &d).unwrap();
        let fam = IncidentClassFamily::new(&q3, &tp);
        for v in 0..8 {
            assert_eq!(fam.classes_at(v), &[0, 1, 2]);
        }

        let c8 = cycle(8);
        let d8 = all_pairs_distances(&c8);
        let tp8 = theta_partition(&c8, &d8).unwrap();
        let fam8 = IncidentClassFamily::new(&c8, &tp8);
        for v in 0..8 {
            assert_eq!(fam8.classes_at(v).len(), 2);
        }

        let p3 = Graph::from_edge_list(&[(0, 1), (1, 2)], None).unwrap();
        let dp = all_pairs_distances(&p3);
        let tpp = theta_partition(&p3, &dp).unwrap();
        let famp = IncidentClassFamily::new(&p3, &tpp);
        assert_eq!(famp.classes_at(1).len(), 2);
        assert_eq!(famp.classes_at(0).len(), 1);
        assert!(famp.contains(1, 0) && famp.contains(1, 1));
    }

    #[test]
    fn recognition_accepts_partial_cubes() {
        for g in [hypercube(4), cycle(12), Graph::from_edge_list(&[(0, 1)], None).unwrap()] {
            let check = is_partial_cube(&g);
            assert!(check.is_partial_cube());
            let cert = check.certificate().unwrap();
            assert_eq!(cert.labeling.class_count(), cert.partition.class_count());
        }
    }

    #[test]
    fn recognition_rejects_with_certificates() {
        let c5 = cycle(5);
        match is_partial_cube(&c5).witness().unwrap() {
            NotPartialCubeWitness::NotBipartite { odd_cycle } => {
                assert_eq!(odd_cycle.len() % 2, 1);
            }
            w => panic!("expected odd-cycle witness, got {w:?}"),
        }

        match is_partial_cube(&k23()).witness().unwrap() {
            NotPartialCubeWitness::ThetaNotTransitive { e, f, h } => {
                let d = all_pairs_distances(&k23());
                assert!(theta_related(&k23(), &d, *e, *f).unwrap());
                assert!(theta_related(&k23(), &d, *f, *h).unwrap());
                assert!(!theta_related(&k23(), &d, *e, *h).unwrap());
            }
            w => panic!("expected transitivity witness, got {w:?}"),
        }

        let split = Graph::from_edge_list(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(
            is_partial_cube(&split).witness(),
            Some(&NotPartialCubeWitness::NotConnected)
        );
    }

    #[test]
    fn class_removal_splits_into_the_two_halfspaces() {
        for g in [hypercube(3), cycle(10)] {
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            for class in tp.classes() {
                let (u, v) = g.edge(class[0]);
                let hs = halfspaces(&g, &d, u, v).unwrap();
                let class_set: std::collections::HashSet<usize> = class.iter().copied().collect();
                let kept: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(e, _)| !class_set.contains(e))
                    .map(|(_, &p)| p)
                    .collect();
                let cut = Graph::from_edge_list(&kept, Some(g.vertex_count())).unwrap();
                // each half-space is connected within itself...
                let (wg, _) = crate::graph::induced_subgraph(&cut, &hs.w_uv);
                let (wh, _) = crate::graph::induced_subgraph(&cut, &hs.w_vu);
                assert!(wg.is_connected());
                assert!(wh.is_connected());
                // ...and no edge of the cut graph crosses the halfspace split
                for &(x, y) in cut.edges() {
                    assert_eq!(hs.w_uv.contains(x), hs.w_uv.contains(y));
                }
            }
        }
    }
}
