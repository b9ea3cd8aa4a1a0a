//! The decision procedure for regular partial cubes with a uniform convex
//! cycle length, its verifiers, and the path-type predicates used by the
//! property sweeps.

use std::collections::BTreeMap;

use crate::convexity::enumerate_convex_cycles;
use crate::families::{doubled_odd, even_cycle};
use crate::graph::{degree_profile, Graph};
use crate::theta::{
    is_partial_cube, HypercubeLabeling, IncidentClassFamily, NotPartialCubeWitness,
    ThetaPartition,
};
use crate::DESK_SCALE_BOUND;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("isomorphism search limited to {bound} vertices, got {vertices}")]
    SizeBoundExceeded { vertices: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExclusionReason {
    NotPartialCube(NotPartialCubeWitness),
    TrivialK1K2,
    NotRegular {
        min_degree: usize,
        max_degree: usize,
    },
    /// Unreachable for genuine inputs: a connected regular graph of degree
    /// ≥ 2 has a cycle, and a shortest cycle is convex.
    NoCycles,
    MixedCycleLengths {
        spectrum: BTreeMap<usize, usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Q_k; the graph's labeling is a bijection onto {0,1}^k.
    Hypercube { k: usize },
    /// Õ_k; for k = 2 this coincides with C_6.
    DoubledOdd { k: usize },
    /// C_2n with 2n ≥ 8.
    EvenCycle { n: usize },
    Excluded(ExclusionReason),
}

/// Outcome plus the measurements that forced it.
#[derive(Debug, Clone)]
pub struct Classification {
    pub outcome: Outcome,
    pub convex_cycle_length: Option<usize>,
    pub degree: Option<usize>,
    pub isometric_dimension: Option<usize>,
    pub labeling: Option<HypercubeLabeling>,
    /// Map from input vertices to generator vertices, when certification ran.
    pub isomorphism: Option<Vec<usize>>,
    pub note: Option<String>,
}

pub fn classify(g: &Graph) -> Classification {
    classify_with(g, false).expect("certification disabled")
}

/// With `certify` set, DOUBLED_ODD and EVEN_CYCLE outcomes are checked by an
/// explicit isomorphism against the generator. A certification failure is a
/// counterexample to the theorem this tool embodies, so it aborts rather
/// than returning an error value.
pub fn classify_with(g: &Graph, certify: bool) -> Result<Classification, ClassifyError> {
    let mut out = Classification {
        outcome: Outcome::Excluded(ExclusionReason::TrivialK1K2),
        convex_cycle_length: None,
        degree: None,
        isometric_dimension: None,
        labeling: None,
        isomorphism: None,
        note: None,
    };

    let check = is_partial_cube(g);
    let Some(cert) = check.certificate() else {
        out.outcome = Outcome::Excluded(ExclusionReason::NotPartialCube(
            check.witness().expect("negative check carries witness").clone(),
        ));
        return Ok(out);
    };
    out.isometric_dimension = Some(cert.labeling.class_count());

    if g.vertex_count() <= 2 {
        out.outcome = Outcome::Excluded(ExclusionReason::TrivialK1K2);
        return Ok(out);
    }

    let profile = degree_profile(g).expect("nonempty graph");
    let Some(degree) = profile.regular() else {
        out.outcome = Outcome::Excluded(ExclusionReason::NotRegular {
            min_degree: profile.min_degree,
            max_degree: profile.max_degree,
        });
        return Ok(out);
    };
    out.degree = Some(degree);

    let cycles = enumerate_convex_cycles(g, &cert.distances, &cert.partition);
    if cycles.count() == 0 {
        out.outcome = Outcome::Excluded(ExclusionReason::NoCycles);
        return Ok(out);
    }
    let Some(length) = cycles.uniform_length() else {
        out.outcome = Outcome::Excluded(ExclusionReason::MixedCycleLengths {
            spectrum: cycles.length_spectrum().clone(),
        });
        return Ok(out);
    };
    out.convex_cycle_length = Some(length);

    match length {
        4 => {
            let k = cert.labeling.class_count();
            if !verify_hypercube(g, &cert.labeling, k) || degree != k {
                panic!(
                    "INTERNAL_THEOREM_VIOLATION: uniform convex length 4, degree {degree}, \
                     idim {k}, but the labeling is not a bijection onto the {k}-cube"
                );
            }
            out.labeling = Some(cert.labeling.clone());
            out.outcome = Outcome::Hypercube { k };
        }
        6 => {
            if certify {
                let model = doubled_odd(degree as u32)
                    .expect("degree of a desk-scale doubled odd stays in generator range");
                let map = verify_isomorphism(g, &model)?;
                match map {
                    Some(map) => out.isomorphism = Some(map),
                    None => panic!(
                        "INTERNAL_THEOREM_VIOLATION: uniform convex length 6 and degree \
                         {degree}, but no isomorphism onto the doubled odd graph"
                    ),
                }
            }
            if degree == 2 {
                out.note = Some(
                    "degree 2 with convex length 6: this graph is also the even cycle C_6"
                        .to_string(),
                );
            }
            out.outcome = Outcome::DoubledOdd { k: degree };
        }
        length if length >= 8 && length % 2 == 0 => {
            if degree != 2 || g.vertex_count() != length {
                panic!(
                    "INTERNAL_THEOREM_VIOLATION: uniform convex length {length} ≥ 8 with \
                     degree {degree} on {} vertices",
                    g.vertex_count()
                );
            }
            if certify {
                let model = even_cycle(length as u32 / 2).expect("length in generator range");
                let map = verify_isomorphism(g, &model)?;
                match map {
                    Some(map) => out.isomorphism = Some(map),
                    None => panic!(
                        "INTERNAL_THEOREM_VIOLATION: 2-regular on {length} vertices but not \
                         isomorphic to the cycle"
                    ),
                }
            }
            out.outcome = Outcome::EvenCycle { n: length / 2 };
        }
        other => panic!(
            "INTERNAL_THEOREM_VIOLATION: convex cycle of odd or tiny length {other} in a \
             bipartite graph"
        ),
    }
    Ok(out)
}

/// A partial cube with idim k on 2^k vertices is Q_k: the labeling is
/// isometric, hence injective, hence onto {0,1}^k, and Hamming-1 pairs are
/// exactly the edges.
pub fn verify_hypercube(g: &Graph, labeling: &HypercubeLabeling, k: usize) -> bool {
    labeling.class_count() == k
        && k < usize::BITS as usize
        && g.vertex_count() == 1usize << k
}

/// Backtracking isomorphism search, pruned by degree and sorted distance
/// rows. Returns a map from g-vertices to h-vertices, or None.
pub fn verify_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, ClassifyError> {
    for side in [g, h] {
        if side.vertex_count() > DESK_SCALE_BOUND {
            return Err(ClassifyError::SizeBoundExceeded {
                vertices: side.vertex_count(),
                bound: DESK_SCALE_BOUND,
            });
        }
    }
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let signature = |graph: &Graph| -> Vec<Vec<u32>> {
        let d = crate::graph::all_pairs_distances(graph);
        (0..graph.vertex_count())
            .map(|v| {
                let mut row: Vec<u32> = (0..graph.vertex_count())
                    .map(|w| d.get(v, w).unwrap_or(u32::MAX))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect()
    };
    let sig_g = signature(g);
    let sig_h = signature(h);
    {
        let mut all_g = sig_g.clone();
        let mut all_h = sig_h.clone();
        all_g.sort();
        all_h.sort();
        if all_g != all_h {
            return Ok(None);
        }
    }

    // order g's vertices so that each one after the first touches a previous
    // one whenever the graph is connected
    let mut order = Vec::with_capacity(n);
    let mut enqueued = vec![false; n];
    for root in 0..n {
        if enqueued[root] {
            continue;
        }
        enqueued[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !enqueued[w] {
                    enqueued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        pos: usize,
        sig_g: &[Vec<u32>],
        sig_h: &[Vec<u32>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        'candidate: for w in 0..h.vertex_count() {
            if used[w] || sig_h[w] != sig_g[v] {
                continue;
            }
            for &x in g.neighbors(v) {
                if map[x] != usize::MAX && !h.has_edge(w, map[x]) {
                    continue 'candidate;
                }
            }
            for &y in h.neighbors(w) {
                // reverse direction: mapped g-neighbors were checked above,
                // so it remains to reject mapped non-neighbors landing on y
                if let Some(x) = map.iter().position(|&m| m == y) {
                    if !g.has_edge(v, x) {
                        continue 'candidate;
                    }
                }
            }
            map[v] = w;
            used[w] = true;
            if extend(g, h, order, pos + 1, sig_g, sig_h, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    if extend(g, h, &order, 0, &sig_g, &sig_h, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("vertices {u} and {v} at position {index} are not adjacent, or repeat")]
    NotAPath { index: usize, u: usize, v: usize },
    #[error("path has {len} edges, need at least {need}")]
    PathTooShort { len: usize, need: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathTag {
    TypeI,
    TypeII,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub tag: PathTag,
    /// For NEITHER: the position whose condition failed (0 and l are the
    /// endpoint conditions, 1..l−1 the interior ones).
    pub failing_index: Option<usize>,
}

fn validate_path(g: &Graph, p: &[usize], min_edges: usize) -> Result<(), PathError> {
    if p.len() < min_edges + 1 {
        return Err(PathError::PathTooShort {
            len: p.len().saturating_sub(1),
            need: min_edges,
        });
    }
    for (i, pair) in p.windows(2).enumerate() {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(PathError::NotAPath {
                index: i,
                u: pair[0],
                v: pair[1],
            });
        }
    }
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != p.len() {
        return Err(PathError::NotAPath {
            index: 0,
            u: p[0],
            v: p[p.len() - 1],
        });
    }
    Ok(())
}

fn edge_class(g: &Graph, tp: &ThetaPartition, u: usize, v: usize) -> usize {
    tp.class_of_edge(g.edge_index(u, v).expect("validated path edge"))
}

/// A path v_0..v_l is type I when some class at v_0 misses v_1, some class
/// at v_l misses v_{l−1}, and for 1 ≤ i ≤ l−1 the class of e_{i+1} is not
/// incident to v_{i−1} nor the class of e_i incident to v_{i+1}.
pub fn is_type_one_path_with(
    g: &Graph,
    tp: &ThetaPartition,
    icf: &IncidentClassFamily,
    p: &[usize],
) -> Result<PathWitness, PathError> {
    validate_path(g, p, 1)?;
    let l = p.len() - 1;
    let fail = |index: usize| PathWitness {
        vertices: p.to_vec(),
        tag: PathTag::Neither,
        failing_index: Some(index),
    };
    let has_private_class = |a: usize, b: usize| {
        icf.classes_at(a).iter().any(|&c| !icf.contains(b, c))
    };
    if !has_private_class(p[0], p[1]) {
        return Ok(fail(0));
    }
    if !has_private_class(p[l], p[l - 1]) {
        return Ok(fail(l));
    }
    for i in 1..l {
        let next = edge_class(g, tp, p[i], p[i + 1]);
        let prev = edge_class(g, tp, p[i - 1], p[i]);
        if icf.contains(p[i - 1], next) || icf.contains(p[i + 1], prev) {
            return Ok(fail(i));
        }
    }
    Ok(PathWitness {
        vertices: p.to_vec(),
        tag: PathTag::TypeI,
        failing_index: None,
    })
}

pub fn is_type_one_path(
    g: &Graph,
    tp: &ThetaPartition,
    p: &[usize],
) -> Result<PathWitness, PathError> {
    is_type_one_path_with(g, tp, &IncidentClassFamily::new(g, tp), p)
}

/// A path v_0..v_l with l ≥ 3 is type II when for 1 ≤ i ≤ l−2 the class of
/// e_i is not incident to v_{i+2} nor the class of e_{i+2} incident to
/// v_{i−1}.
pub fn is_type_two_path_with(
    g: &Graph,
    tp: &ThetaPartition,
    icf: &IncidentClassFamily,
    p: &[usize],
) -> Result<PathWitness, PathError> {
    validate_path(g, p, 3)?;
    let l = p.len() - 1;
    for i in 1..=l - 2 {
        let near = edge_class(g, tp, p[i - 1], p[i]);
        let far = edge_class(g, tp, p[i + 1], p[i + 2]);
        if icf.contains(p[i + 2], near) || icf.contains(p[i - 1], far) {
            return Ok(PathWitness {
                vertices: p.to_vec(),
                tag: PathTag::Neither,
                failing_index: Some(i),
            });
        }
    }
    Ok(PathWitness {
        vertices: p.to_vec(),
        tag: PathTag::TypeII,
        failing_index: None,
    })
}

pub fn is_type_two_path(
    g: &Graph,
    tp: &ThetaPartition,
    p: &[usize],
) -> Result<PathWitness, PathError> {
    is_type_two_path_with(g, tp, &IncidentClassFamily::new(g, tp), p)
}

/// Does every path on four vertices close into some 6-cycle? Returns a
/// failing path when not.
pub fn every_3path_in_6cycle(g: &Graph) -> (bool, Option<Vec<usize>>) {
    for &(a, b) in g.edges() {
        for &x in g.neighbors(a) {
            if x == b {
                continue;
            }
            for &y in g.neighbors(b) {
                if y == a || y == x {
                    continue;
                }
                // path x-a-b-y; look for z ∈ N(y), w ∈ N(x) closing a 6-cycle
                let mut closed = false;
                'outer: for &z in g.neighbors(y) {
                    if z == a || z == b || z == x {
                        continue;
                    }
                    for &w in g.neighbors(x) {
                        if w == a || w == b || w == y || w == z {
                            continue;
                        }
                        if g.has_edge(z, w) {
                            closed = true;
                            break 'outer;
                        }
                    }
                }
                if !closed {
                    return (false, Some(vec![x, a, b, y]));
                }
            }
        }
    }
    (true, None)
}
