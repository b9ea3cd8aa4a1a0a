//! Predicates for the class chain of partial cubes: hypercube, median,
//! almost-median, tiled, semi-median. Each predicate is computed from its
//! own definition, so the known inclusions between the classes act as
//! cross-checks instead of shortcuts.

use crate::bits::{gf2_rank, BitVec};
use crate::convexity::{
    enumerate_convex_cycles, is_isometric_set, ConvexityError, CycleSubgraph,
};
use crate::graph::{induced_subgraph, DistanceMatrix, Graph, VertexSet};
use crate::theta::{
    halfspaces, is_partial_cube, NotPartialCubeWitness, PartialCubeCertificate, ThetaPartition,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest vertex count for which the median predicate scans every triple.
pub const MEDIAN_EXACT_BOUND: usize = 100;
/// Triples drawn per graph when the median predicate samples.
pub const MEDIAN_SAMPLE_TRIPLES: usize = 20_000;
/// Seed for the sampling mode, fixed so repeated runs agree.
pub const MEDIAN_SAMPLE_SEED: u64 = 1729;

/// How a median verdict was reached. A sampled `true` is evidence, not proof;
/// the other two modes are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MedianMode {
    Exact,
    HypercubeShortcut,
    Sampled { triples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedianWitness {
    pub triple: (usize, usize, usize),
    pub median_count: usize,
}

#[derive(Debug, Clone)]
pub struct MedianCheck {
    pub is_median: bool,
    pub mode: MedianMode,
    pub witness: Option<MedianWitness>,
}

fn median_count(d: &DistanceMatrix, n: usize, u: usize, v: usize, w: usize) -> usize {
    let (duv, dvw, duw) = (d.get(u, v), d.get(v, w), d.get(u, w));
    let (Some(duv), Some(dvw), Some(duw)) = (duv, dvw, duw) else {
        return 0;
    };
    let mut count = 0;
    for x in 0..n {
        let (Some(a), Some(b), Some(c)) = (d.get(u, x), d.get(v, x), d.get(w, x)) else {
            continue;
        };
        if a + b == duv && b + c == dvw && a + c == duw {
            count += 1;
        }
    }
    count
}

/// Every triple of vertices must have exactly one median vertex.
pub fn is_median_exact(g: &Graph, d: &DistanceMatrix) -> MedianCheck {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let count = median_count(d, n, u, v, w);
                if count != 1 {
                    return MedianCheck {
                        is_median: false,
                        mode: MedianMode::Exact,
                        witness: Some(MedianWitness {
                            triple: (u, v, w),
                            median_count: count,
                        }),
                    };
                }
            }
        }
    }
    MedianCheck {
        is_median: true,
        mode: MedianMode::Exact,
        witness: None,
    }
}

/// Checks `triples` random distinct triples. A failure is a proof of
/// non-medianness; success only reports that no counterexample was drawn.
pub fn is_median_sampled(g: &Graph, d: &DistanceMatrix, triples: usize, seed: u64) -> MedianCheck {
    let n = g.vertex_count();
    let mode = MedianMode::Sampled { triples, seed };
    if n < 3 {
        return MedianCheck {
            is_median: true,
            mode,
            witness: None,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..triples {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let w = rng.random_range(0..n);
        if u == v || v == w || u == w {
            continue;
        }
        let count = median_count(d, n, u, v, w);
        if count != 1 {
            return MedianCheck {
                is_median: false,
                mode,
                witness: Some(MedianWitness {
                    triple: (u, v, w),
                    median_count: count,
                }),
            };
        }
    }
    MedianCheck {
        is_median: true,
        mode,
        witness: None,
    }
}

/// A certified partial cube on 2^idim vertices is a hypercube: the labeling
/// is isometric, hence injective, hence onto {0,1}^idim, and Hamming
/// distance 1 coincides with adjacency.
pub fn is_hypercube_certified(g: &Graph, cert: &PartialCubeCertificate) -> bool {
    let k = cert.labeling.class_count();
    k < usize::BITS as usize && g.vertex_count() == 1usize << k
}

/// Exact scan below `MEDIAN_EXACT_BOUND` vertices; above it, certified
/// hypercubes short-circuit and everything else is sampled.
pub fn median_check(g: &Graph, d: &DistanceMatrix, cert: Option<&PartialCubeCertificate>) -> MedianCheck {
    if g.vertex_count() <= MEDIAN_EXACT_BOUND {
        return is_median_exact(g, d);
    }
    if let Some(cert) = cert {
        if is_hypercube_certified(g, cert) {
            return MedianCheck {
                is_median: true,
                mode: MedianMode::HypercubeShortcut,
                witness: None,
            };
        }
    }
    is_median_sampled(g, d, MEDIAN_SAMPLE_TRIPLES, MEDIAN_SAMPLE_SEED)
}

/// A U-set that breaks a predicate: the class, its representative edge, and
/// the offending side's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USetWitness {
    pub class: usize,
    pub edge: (usize, usize),
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct USetCheck {
    pub holds: bool,
    pub witness: Option<USetWitness>,
}

fn u_sets(g: &Graph, d: &DistanceMatrix, tp: &ThetaPartition) -> Vec<(usize, (usize, usize), [VertexSet; 2])> {
    (0..tp.class_count())
        .map(|c| {
            let e = tp.class_edges(c)[0];
            let (u, v) = g.edge(e);
            let hs = halfspaces(g, d, u, v).expect("class representative is an edge");
            (c, (u, v), [hs.u_uv, hs.u_vu])
        })
        .collect()
}

/// Semi-median: for every class, both U-sets induce connected subgraphs.
pub fn is_semi_median(g: &Graph, d: &DistanceMatrix, tp: &ThetaPartition) -> USetCheck {
    for (class, edge, sets) in u_sets(g, d, tp) {
        for set in &sets {
            let (sub, _) = induced_subgraph(g, set);
            if !sub.is_connected() {
                return USetCheck {
                    holds: false,
                    witness: Some(USetWitness {
                        class,
                        edge,
                        vertices: set.to_vec(),
                    }),
                };
            }
        }
    }
    USetCheck {
        holds: true,
        witness: None,
    }
}

/// Almost-median: for every class, both U-sets induce isometric subgraphs.
pub fn is_almost_median(g: &Graph, d: &DistanceMatrix, tp: &ThetaPartition) -> USetCheck {
    for (class, edge, sets) in u_sets(g, d, tp) {
        for set in &sets {
            let isometric = match is_isometric_set(g, d, set) {
                Ok(ok) => ok,
                Err(ConvexityError::InducedDisconnected) => false,
                Err(e) => unreachable!("U-set isometry check: {e}"),
            };
            if !isometric {
                return USetCheck {
                    holds: false,
                    witness: Some(USetWitness {
                        class,
                        edge,
                        vertices: set.to_vec(),
                    }),
                };
            }
        }
    }
    USetCheck {
        holds: true,
        witness: None,
    }
}

/// The equivalent convex-cycle form: almost-median iff every convex cycle is
/// a 4-cycle. Returns a convex cycle of another length as witness.
pub fn is_almost_median_via_cycles(
    g: &Graph,
    d: &DistanceMatrix,
    tp: &ThetaPartition,
) -> (bool, Option<CycleSubgraph>) {
    let cycles = enumerate_convex_cycles(g, d, tp);
    for c in cycles.cycles() {
        if c.len() != 4 {
            return (false, Some(c.clone()));
        }
    }
    (true, None)
}

/// All distinct 4-cycles, found through distance-2 pairs and their common
/// neighbors. Each 4-cycle has two diagonal pairs, so duplicates are merged.
pub fn squares(g: &Graph, d: &DistanceMatrix) -> Vec<CycleSubgraph> {
    let n = g.vertex_count();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.get(u, v) != Some(2) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbors(u)
                .iter()
                .filter(|&&x| g.has_edge(x, v))
                .copied()
                .collect();
            for (i, &x) in common.iter().enumerate() {
                for &y in &common[i + 1..] {
                    let cycle = CycleSubgraph::new(g, &[u, x, v, y])
                        .expect("u-x-v-y is a 4-cycle by construction");
                    if seen.insert(cycle.vertices().to_vec()) {
                        out.push(cycle);
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    out
}

fn component_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    components
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingCheck {
    pub holds: bool,
    pub square_count: usize,
    pub square_rank: usize,
    pub cycle_space_dim: usize,
}

/// Tiled: the 4-cycles span the whole GF(2) cycle space, i.e. their edge
/// incidence vectors reach rank m − n + c.
pub fn is_tiled(g: &Graph, d: &DistanceMatrix) -> TilingCheck {
    let m = g.edge_count();
    let dim = m + component_count(g) - g.vertex_count();
    let sq = squares(g, d);
    let rows: Vec<BitVec> = sq
        .iter()
        .map(|c| {
            let mut row = BitVec::zeros(m);
            let vs = c.vertices();
            for i in 0..4 {
                let (a, b) = (vs[i], vs[(i + 1) % 4]);
                row.set(g.edge_index(a, b).expect("cycle edge"), true);
            }
            row
        })
        .collect();
    let rank = gf2_rank(&rows);
    TilingCheck {
        holds: rank == dim,
        square_count: sq.len(),
        square_rank: rank,
        cycle_space_dim: dim,
    }
}

/// One report for the whole chain. For a graph that is not a partial cube
/// every class flag is false; the classes are only defined inside partial
/// cubes.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub partial_cube: bool,
    pub hypercube: bool,
    pub median: bool,
    pub median_mode: Option<MedianMode>,
    pub almost_median: bool,
    pub almost_median_via_cycles: bool,
    pub tiled: bool,
    pub semi_median: bool,
    pub median_witness: Option<MedianWitness>,
    pub almost_median_witness: Option<USetWitness>,
    pub semi_median_witness: Option<USetWitness>,
    pub long_convex_cycle: Option<CycleSubgraph>,
    pub tiling: Option<TilingCheck>,
    pub not_partial_cube: Option<NotPartialCubeWitness>,
}

pub fn class_report(g: &Graph) -> ClassReport {
    let check = is_partial_cube(g);
    let Some(cert) = check.certificate() else {
        return ClassReport {
            partial_cube: false,
            hypercube: false,
            median: false,
            median_mode: None,
            almost_median: false,
            almost_median_via_cycles: false,
            tiled: false,
            semi_median: false,
            median_witness: None,
            almost_median_witness: None,
            semi_median_witness: None,
            long_convex_cycle: None,
            tiling: None,
            not_partial_cube: check.witness().cloned(),
        };
    };
    let d = &cert.distances;
    let tp = &cert.partition;
    let median = median_check(g, d, Some(cert));
    let almost = is_almost_median(g, d, tp);
    let (almost_cycles, long_cycle) = is_almost_median_via_cycles(g, d, tp);
    let tiling = is_tiled(g, d);
    let semi = is_semi_median(g, d, tp);
    let report = ClassReport {
        partial_cube: true,
        hypercube: is_hypercube_certified(g, cert),
        median: median.is_median,
        median_mode: Some(median.mode),
        almost_median: almost.holds,
        almost_median_via_cycles: almost_cycles,
        tiled: tiling.holds,
        semi_median: semi.holds,
        median_witness: median.witness,
        almost_median_witness: almost.witness,
        semi_median_witness: semi.witness,
        long_convex_cycle: long_cycle,
        tiling: Some(tiling),
        not_partial_cube: None,
    };
    debug_assert_eq!(
        report.almost_median, report.almost_median_via_cycles,
        "the two almost-median routes disagree"
    );
    debug_assert!(
        !report.hypercube || report.median,
        "hypercube that is not median"
    );
    debug_assert!(
        !(report.median && report.median_mode == Some(MedianMode::Exact)) || report.almost_median,
        "median graph that is not almost-median"
    );
    debug_assert!(
        !report.almost_median || report.semi_median,
        "almost-median graph that is not semi-median"
    );
    report
}

/// Convenience entry: report for a graph given nothing else.
pub fn classify_classes(g: &Graph) -> ClassReport {
    class_report(g)
}
