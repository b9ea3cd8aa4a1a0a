//! Deterministic generators for the graph families the theory talks about.
//!
//! Byte-for-byte reproducible: a family spec always yields the same vertex
//! order, edge list, and name map.

use crate::graph::{cartesian_product, Graph};
use crate::DESK_SCALE_BOUND;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("family spec `{text}` is malformed: {reason}")]
    Parse { text: String, reason: String },
}

/// Textual forms: `Q:4`, `DO:3`, `C:10`, `PATH:5`, `GRID:3x4`, `KB:2,3`,
/// `Q3MINUS`, `PROD(Q:2,C:6)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Hypercube Q_n.
    Hypercube(u32),
    /// Doubled odd graph Õ_k.
    DoubledOdd(u32),
    /// Even cycle; the parameter is the vertex count (must be even, ≥ 4).
    Cycle(u32),
    /// Path on n vertices.
    Path(u32),
    /// m × n grid, the product of two paths.
    Grid(u32, u32),
    /// Complete bipartite K_{a,b}.
    CompleteBipartite(u32, u32),
    /// Q_3 minus one vertex.
    Q3Minus,
    /// Cartesian product of two family graphs.
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Hypercube(n) => write!(f, "Q:{n}"),
            FamilySpec::DoubledOdd(k) => write!(f, "DO:{k}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Path(n) => write!(f, "PATH:{n}"),
            FamilySpec::Grid(m, n) => write!(f, "GRID:{m}x{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "KB:{a},{b}"),
            FamilySpec::Q3Minus => write!(f, "Q3MINUS"),
            FamilySpec::Product(a, b) => write!(f, "PROD({a},{b})"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s.trim())
    }
}

fn parse_err(text: &str, reason: &str) -> FamilyError {
    FamilyError::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_u32(text: &str, token: &str) -> Result<u32, FamilyError> {
    token
        .parse::<u32>()
        .map_err(|_| parse_err(text, &format!("`{token}` is not a number")))
}

fn parse_spec(s: &str) -> Result<FamilySpec, FamilyError> {
    if s == "Q3MINUS" {
        return Ok(FamilySpec::Q3Minus);
    }
    if let Some(inner) = s.strip_prefix("PROD(").and_then(|r| r.strip_suffix(')')) {
        // split at the comma at depth zero
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| parse_err(s, "PROD needs two comma-separated factors"))?;
        let left = parse_spec(inner[..i].trim())?;
        let right = parse_spec(inner[i + 1..].trim())?;
        return Ok(FamilySpec::Product(Box::new(left), Box::new(right)));
    }
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| parse_err(s, "expected FAMILY:PARAMS"))?;
    match head {
        "Q" => Ok(FamilySpec::Hypercube(parse_u32(s, rest)?)),
        "DO" => Ok(FamilySpec::DoubledOdd(parse_u32(s, rest)?)),
        "C" => Ok(FamilySpec::Cycle(parse_u32(s, rest)?)),
        "PATH" => Ok(FamilySpec::Path(parse_u32(s, rest)?)),
        "GRID" => {
            let (m, n) = rest
                .split_once('x')
                .ok_or_else(|| parse_err(s, "GRID needs MxN"))?;
            Ok(FamilySpec::Grid(parse_u32(s, m)?, parse_u32(s, n)?))
        }
        "KB" => {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| parse_err(s, "KB needs A,B"))?;
            Ok(FamilySpec::CompleteBipartite(
                parse_u32(s, a)?,
                parse_u32(s, b)?,
            ))
        }
        other => Err(parse_err(s, &format!("unknown family `{other}`"))),
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Hypercube(n) => hypercube(*n),
            FamilySpec::DoubledOdd(k) => doubled_odd(*k),
            FamilySpec::Cycle(n) => {
                if n % 2 != 0 {
                    return Err(FamilyError::ParamRange(format!(
                        "C:{n} is odd; only even cycles are partial cubes"
                    )));
                }
                even_cycle(n / 2)
            }
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Grid(m, n) => grid(*m, *n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            FamilySpec::Q3Minus => Ok(q3_minus()),
            FamilySpec::Product(a, b) => {
                let (ga, gb) = (a.build()?, b.build()?);
                let size = ga.vertex_count().saturating_mul(gb.vertex_count());
                if size > DESK_SCALE_BOUND {
                    return Err(FamilyError::ParamRange(format!(
                        "product has {size} vertices, above the bound {DESK_SCALE_BOUND}"
                    )));
                }
                Ok(cartesian_product(&ga, &gb))
            }
        }
    }
}

/// Q_n: vertices are the integers 0..2^n read as bit strings, named by their
/// bits; i ~ j iff they differ in one bit.
pub fn hypercube(n: u32) -> Result<Graph, FamilyError> {
    if n > 16 {
        return Err(FamilyError::ParamRange(format!("Q:{n}; supported n ≤ 16")));
    }
    let count = 1usize << n;
    let mut pairs = Vec::with_capacity(count * n as usize / 2);
    for v in 0..count {
        for b in 0..n {
            let w = v ^ (1usize << b);
            if v < w {
                pairs.push((v, w));
            }
        }
    }
    let names = (0..count)
        .map(|v| {
            (0..n)
                .rev()
                .map(|b| if v >> b & 1 == 1 { '1' } else { '0' })
                .collect::<String>()
        })
        .collect();
    Ok(Graph::from_edge_list(&pairs, Some(count))
        .expect("generator in range")
        .with_names(names))
}

/// Subsets of {1..ground} of size k, in colexicographic order.
fn subsets_colex(ground: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    // colex: compare reversed tuples; generate by recursing on the largest
    // element last
    fn rec(ground: u32, k: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k as usize {
            out.push(current.clone());
            return;
        }
        let need = k - current.len() as u32;
        for top in need..=max {
            current.push(top);
            rec(ground, k, top - 1, current, out);
            current.pop();
        }
    }
    rec(ground, k, ground, &mut current, &mut out);
    for s in &mut out {
        s.reverse();
    }
    out.sort_by_key(|s| s.iter().rev().copied().collect::<Vec<u32>>());
    out
}

/// Doubled odd graph Õ_k: the (k−1)-subsets followed by the k-subsets of
/// {1..2k−1}, with S ~ T iff S ⊂ T. Õ_1 = K_2, Õ_2 ≅ C_6, Õ_3 is the
/// Desargues graph. k-regular, and for k ≥ 2 of girth 6.
pub fn doubled_odd(k: u32) -> Result<Graph, FamilyError> {
    if k == 0 || k > 8 {
        return Err(FamilyError::ParamRange(format!(
            "DO:{k}; supported 1 ≤ k ≤ 8"
        )));
    }
    let ground = 2 * k - 1;
    let small = subsets_colex(ground, k - 1);
    let large = subsets_colex(ground, k);
    let offset = small.len();
    let mut pairs = Vec::new();
    for (i, s) in small.iter().enumerate() {
        for (j, t) in large.iter().enumerate() {
            if s.iter().all(|x| t.contains(x)) {
                pairs.push((i, offset + j));
            }
        }
    }
    let name = |s: &[u32]| {
        let inner = s
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{inner}}}")
    };
    let names = small.iter().chain(large.iter()).map(|s| name(s)).collect();
    Ok(
        Graph::from_edge_list(&pairs, Some(small.len() + large.len()))
            .expect("generator in range")
            .with_names(names),
    )
}

/// C_2n for n ≥ 2.
pub fn even_cycle(n: u32) -> Result<Graph, FamilyError> {
    if n < 2 || n > 100_000 {
        return Err(FamilyError::ParamRange(format!(
            "even cycle C_{}; supported 2 ≤ n ≤ 100000",
            2 * n
        )));
    }
    let count = 2 * n as usize;
    let pairs: Vec<(usize, usize)> = (0..count).map(|i| (i, (i + 1) % count)).collect();
    Ok(Graph::from_edge_list(&pairs, Some(count)).expect("generator in range"))
}

/// Path on n ≥ 1 vertices.
pub fn path(n: u32) -> Result<Graph, FamilyError> {
    if n == 0 || n as usize > DESK_SCALE_BOUND {
        return Err(FamilyError::ParamRange(format!(
            "PATH:{n}; supported 1 ≤ n ≤ {DESK_SCALE_BOUND}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n as usize - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(&pairs, Some(n as usize)).expect("generator in range"))
}

/// The m × n grid P_m □ P_n.
pub fn grid(m: u32, n: u32) -> Result<Graph, FamilyError> {
    if m == 0 || n == 0 || (m as usize).saturating_mul(n as usize) > DESK_SCALE_BOUND {
        return Err(FamilyError::ParamRange(format!(
            "GRID:{m}x{n}; needs m, n ≥ 1 and mn ≤ {DESK_SCALE_BOUND}"
        )));
    }
    Ok(cartesian_product(&path(m)?, &path(n)?))
}

/// K_{a,b}: left part 0..a, right part a..a+b. A partial cube only for
/// a = b = 1 (K_2) and the stars K_{1,b}.
pub fn complete_bipartite(a: u32, b: u32) -> Result<Graph, FamilyError> {
    if a == 0 || b == 0 || (a + b) as usize > DESK_SCALE_BOUND {
        return Err(FamilyError::ParamRange(format!(
            "KB:{a},{b}; needs a, b ≥ 1 and a+b ≤ {DESK_SCALE_BOUND}"
        )));
    }
    let mut pairs = Vec::with_capacity((a * b) as usize);
    for i in 0..a as usize {
        for j in 0..b as usize {
            pairs.push((i, a as usize + j));
        }
    }
    Ok(Graph::from_edge_list(&pairs, Some((a + b) as usize)).expect("generator in range"))
}

/// Q_3 with vertex 111 deleted: 7 vertices, 9 edges; the smallest
/// almost-median graph that is not median.
pub fn q3_minus() -> Graph {
    let q3 = hypercube(3).expect("in range");
    let keep = crate::graph::VertexSet::from_iter(8, (0..8).filter(|&v| v != 0b111));
    crate::graph::induced_subgraph(&q3, &keep).0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusProfile {
    Small,
    Full,
}

impl std::str::FromStr for CorpusProfile {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "SMALL" => Ok(CorpusProfile::Small),
            "FULL" => Ok(CorpusProfile::Full),
            other => Err(FamilyError::Parse {
                text: other.to_string(),
                reason: "expected SMALL or FULL".to_string(),
            }),
        }
    }
}

/// The named test corpus, in a fixed deterministic order. SMALL stays within
/// hypercubes Q_4, doubled odds Õ_3, cycles C_12 and 4×4 grids; FULL extends
/// to Q_8, Õ_4 and C_20. K_{2,3} is the designated non-partial-cube.
pub fn corpus(profile: CorpusProfile) -> Vec<(String, Graph)> {
    let mut specs: Vec<&str> = vec![
        "Q:0", "Q:1", "Q:2", "Q:3", "Q:4",
        "DO:1", "DO:2", "DO:3",
        "C:4", "C:6", "C:8", "C:10", "C:12",
        "PATH:2", "PATH:3", "PATH:4",
        "GRID:2x2", "GRID:2x3", "GRID:2x4", "GRID:3x3", "GRID:3x4", "GRID:4x4",
        "Q3MINUS",
        "KB:2,3",
        "PROD(C:6,Q:1)",
        "PROD(Q:2,C:6)",
    ];
    if profile == CorpusProfile::Full {
        specs.extend([
            "Q:5", "Q:6", "Q:7", "Q:8",
            "DO:4",
            "C:14", "C:16", "C:18", "C:20",
        ]);
    }
    specs
        .into_iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().expect("corpus specs are well-formed");
            (s.to_string(), spec.build().expect("corpus specs in range"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, degree_profile, girth, is_bipartite, Bipartiteness};
    use crate::theta::{is_partial_cube, isometric_dimension, theta_partition};

    #[test]
    fn hypercube_shape() {
        let q0 = hypercube(0).unwrap();
        assert_eq!((q0.vertex_count(), q0.edge_count()), (1, 0));
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        assert_eq!(degree_profile(&q4).unwrap().regular(), Some(4));
        assert_eq!(girth(&q4), Some(4));
        assert_eq!(q4.vertex_name(0b1010), "1010");
        assert!(is_partial_cube(&q4).is_partial_cube());
    }

    #[test]
    fn doubled_odd_small_cases() {
        let do1 = doubled_odd(1).unwrap();
        assert_eq!((do1.vertex_count(), do1.edge_count()), (2, 1));

        let do2 = doubled_odd(2).unwrap();
        assert_eq!((do2.vertex_count(), do2.edge_count()), (6, 6));
        assert_eq!(girth(&do2), Some(6));
        match is_bipartite(&do2) {
            Bipartiteness::Bipartite { coloring } => {
                let ones: usize = coloring.iter().map(|&c| c as usize).sum();
                assert_eq!(ones, 3);
            }
            _ => panic!("doubled odd graphs are bipartite"),
        }
        assert_eq!(do2.vertex_name(0), "{1}");
        assert_eq!(do2.vertex_name(3), "{1,2}");
    }

    #[test]
    fn desargues_graph_facts() {
        let do3 = doubled_odd(3).unwrap();
        assert_eq!((do3.vertex_count(), do3.edge_count()), (20, 30));
        assert_eq!(degree_profile(&do3).unwrap().regular(), Some(3));
        assert_eq!(girth(&do3), Some(6));
        let d = all_pairs_distances(&do3);
        assert_eq!(d.diameter(), Some(5));
        let tp = theta_partition(&do3, &d).unwrap();
        assert_eq!(isometric_dimension(&tp), 5);
        assert!(is_partial_cube(&do3).is_partial_cube());
    }

    #[test]
    fn doubled_odd_is_k_regular_with_idim_2k_minus_1() {
        for k in 1..=4u32 {
            let g = doubled_odd(k).unwrap();
            assert_eq!(degree_profile(&g).unwrap().regular(), Some(k as usize));
            let d = all_pairs_distances(&g);
            let tp = theta_partition(&g, &d).unwrap();
            assert_eq!(isometric_dimension(&tp), (2 * k - 1) as usize);
        }
        assert_eq!(doubled_odd(4).unwrap().vertex_count(), 70);
    }

    #[test]
    fn even_cycle_and_path_shapes() {
        let c4 = even_cycle(2).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(even_cycle(1).is_err());
        let p1 = path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        let p5 = path(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count()), (5, 4));
    }

    #[test]
    fn grid_and_complete_bipartite_shapes() {
        let g34 = grid(3, 4).unwrap();
        assert_eq!((g34.vertex_count(), g34.edge_count()), (12, 17));
        assert!(is_partial_cube(&g34).is_partial_cube());

        let kb = complete_bipartite(2, 3).unwrap();
        assert_eq!((kb.vertex_count(), kb.edge_count()), (5, 6));
        assert!(!is_partial_cube(&kb).is_partial_cube());
    }

    #[test]
    fn q3_minus_shape() {
        let g = q3_minus();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 9));
        let mut degrees: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3, 3, 3]);
        assert!(is_partial_cube(&g).is_partial_cube());
    }

    #[test]
    fn spec_text_round_trip() {
        for text in [
            "Q:4",
            "DO:3",
            "C:10",
            "PATH:5",
            "GRID:3x4",
            "KB:2,3",
            "Q3MINUS",
            "PROD(Q:2,C:6)",
            "PROD(PROD(Q:1,Q:1),C:8)",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert!("Q4".parse::<FamilySpec>().is_err());
        assert!("Z:3".parse::<FamilySpec>().is_err());
        assert!("GRID:3".parse::<FamilySpec>().is_err());
        assert!("C:7".parse::<FamilySpec>().unwrap().build().is_err());
        assert!("Q:99".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn product_spec_builds_the_product() {
        let spec: FamilySpec = "PROD(C:6,Q:1)".parse().unwrap();
        let prism = spec.build().unwrap();
        assert_eq!((prism.vertex_count(), prism.edge_count()), (12, 18));
        assert_eq!(degree_profile(&prism).unwrap().regular(), Some(3));
    }

    #[test]
    fn corpus_contents_and_determinism() {
        let small = corpus(CorpusProfile::Small);
        let names: Vec<&str> = small.iter().map(|(n, _)| n.as_str()).collect();
        assert!(names.contains(&"Q:3"));
        assert!(names.contains(&"KB:2,3"));
        assert!(names.contains(&"Q3MINUS"));
        assert!(!names.contains(&"DO:4"));

        let full = corpus(CorpusProfile::Full);
        assert!(full.len() > small.len());
        let full_names: Vec<&str> = full.iter().map(|(n, _)| n.as_str()).collect();
        assert!(full_names.contains(&"DO:4"));
        assert!(full_names.contains(&"Q:8"));
        // partial cubes for the agreement suite: comfortably ≥ 15
        let pc_count = full
            .iter()
            .filter(|(_, g)| is_partial_cube(g).is_partial_cube())
            .count();
        assert!(pc_count >= 15, "{pc_count} partial cubes");

        let again = corpus(CorpusProfile::Full);
        for ((n1, g1), (n2, g2)) in full.iter().zip(again.iter()) {
            assert_eq!(n1, n2);
            assert_eq!(g1.edges(), g2.edges());
            assert_eq!(g1.names(), g2.names());
        }
    }

    #[test]
    fn colex_subset_order_is_stable() {
        let s = subsets_colex(4, 2);
        assert_eq!(
            s,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }
}
