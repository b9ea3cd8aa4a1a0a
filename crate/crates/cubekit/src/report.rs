//! JSON report payloads. The schema is stable and deterministic: maps are
//! ordered, vertices appear under their input names, and nothing
//! run-dependent (timing, machine, paths beyond the input descriptor) is
//! included. Optional fields are omitted when absent.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classes::{ClassReport, MedianMode};
use crate::classify::{Classification, ExclusionReason, Outcome};
use crate::convexity::ConvexCycleSet;
use crate::families::{doubled_odd, even_cycle};
use crate::graph::Graph;
use crate::suite::SuiteCheck;
use crate::theta::{NotPartialCubeWitness, PartialCubeCertificate, PartialCubeCheck};

#[derive(Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub command: String,
    pub input: String,
    pub payload: Payload,
}

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Report {
    pub fn new(command: &str, input: &str, payload: Payload) -> Self {
        Report {
            tool: ToolInfo {
                name: "cubekit",
                version: env!("CARGO_PKG_VERSION"),
            },
            command: command.to_string(),
            input: input.to_string(),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Recognize(RecognizePayload),
    ConvexCycles(ConvexCyclesPayload),
    Classify(ClassifyPayload),
    Classes(ClassesPayload),
    Embed(EmbedPayload),
    Generate(GeneratePayload),
    Corpus(CorpusPayload),
}

fn name(g: &Graph, v: usize) -> String {
    g.vertex_name(v)
}

fn edge_names(g: &Graph, u: usize, v: usize) -> [String; 2] {
    [name(g, u), name(g, v)]
}

#[derive(Serialize)]
#[serde(tag = "reason", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessPayload {
    NotConnected,
    NotBipartite {
        odd_cycle: Vec<String>,
    },
    ThetaNotTransitive {
        e: [String; 2],
        f: [String; 2],
        h: [String; 2],
    },
    LabelingNotIsometric {
        u: String,
        v: String,
    },
}

fn witness_payload(g: &Graph, w: &NotPartialCubeWitness) -> WitnessPayload {
    match w {
        NotPartialCubeWitness::NotConnected => WitnessPayload::NotConnected,
        NotPartialCubeWitness::NotBipartite { odd_cycle } => WitnessPayload::NotBipartite {
            odd_cycle: odd_cycle.iter().map(|&v| name(g, v)).collect(),
        },
        NotPartialCubeWitness::ThetaNotTransitive { e, f, h } => {
            WitnessPayload::ThetaNotTransitive {
                e: edge_names(g, e.0, e.1),
                f: edge_names(g, f.0, f.1),
                h: edge_names(g, h.0, h.1),
            }
        }
        NotPartialCubeWitness::LabelingNotIsometric { u, v } => {
            WitnessPayload::LabelingNotIsometric {
                u: name(g, *u),
                v: name(g, *v),
            }
        }
    }
}

#[derive(Serialize)]
pub struct RecognizePayload {
    pub vertices: usize,
    pub edges: usize,
    pub is_partial_cube: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isometric_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessPayload>,
}

pub fn recognize_payload(g: &Graph, check: &PartialCubeCheck) -> RecognizePayload {
    RecognizePayload {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        is_partial_cube: check.is_partial_cube(),
        isometric_dimension: check.certificate().map(|c| c.labeling.class_count()),
        witness: check.witness().map(|w| witness_payload(g, w)),
    }
}

#[derive(Serialize)]
pub struct OraclePayload {
    pub bound: usize,
    pub matched: bool,
    pub spectrum: BTreeMap<usize, usize>,
}

#[derive(Serialize)]
pub struct ConvexCyclesPayload {
    pub vertices: usize,
    pub edges: usize,
    pub count: usize,
    pub spectrum: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniform_length: Option<usize>,
    pub cycles: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OraclePayload>,
}

pub fn convex_cycles_payload(
    g: &Graph,
    cycles: &ConvexCycleSet,
    oracle: Option<(usize, &ConvexCycleSet)>,
) -> ConvexCyclesPayload {
    ConvexCyclesPayload {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        count: cycles.count(),
        spectrum: cycles.length_spectrum().clone(),
        uniform_length: cycles.uniform_length(),
        cycles: cycles
            .cycles()
            .iter()
            .map(|c| c.vertices().iter().map(|&v| name(g, v)).collect())
            .collect(),
        oracle: oracle.map(|(bound, o)| OraclePayload {
            bound,
            matched: o
                .cycles()
                .iter()
                .map(|c| c.vertices())
                .eq(cycles.cycles().iter().map(|c| c.vertices())),
            spectrum: o.length_spectrum().clone(),
        }),
    }
}

#[derive(Serialize)]
#[serde(tag = "reason", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReasonPayload {
    NotPartialCube {
        witness: WitnessPayload,
    },
    TrivialK1K2,
    NotRegular {
        min_degree: usize,
        max_degree: usize,
    },
    NoCycles,
    MixedCycleLengths {
        spectrum: BTreeMap<usize, usize>,
    },
}

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OutcomePayload {
    Hypercube { k: usize },
    DoubledOdd { k: usize },
    EvenCycle { n: usize },
    Excluded { exclusion: ReasonPayload },
}

pub fn outcome_payload(g: &Graph, outcome: &Outcome) -> OutcomePayload {
    match outcome {
        Outcome::Hypercube { k } => OutcomePayload::Hypercube { k: *k },
        Outcome::DoubledOdd { k } => OutcomePayload::DoubledOdd { k: *k },
        Outcome::EvenCycle { n } => OutcomePayload::EvenCycle { n: *n },
        Outcome::Excluded(reason) => OutcomePayload::Excluded {
            exclusion: match reason {
                ExclusionReason::NotPartialCube(w) => ReasonPayload::NotPartialCube {
                    witness: witness_payload(g, w),
                },
                ExclusionReason::TrivialK1K2 => ReasonPayload::TrivialK1K2,
                ExclusionReason::NotRegular {
                    min_degree,
                    max_degree,
                } => ReasonPayload::NotRegular {
                    min_degree: *min_degree,
                    max_degree: *max_degree,
                },
                ExclusionReason::NoCycles => ReasonPayload::NoCycles,
                ExclusionReason::MixedCycleLengths { spectrum } => {
                    ReasonPayload::MixedCycleLengths {
                        spectrum: spectrum.clone(),
                    }
                }
            },
        },
    }
}

#[derive(Serialize)]
pub struct ClassifyPayload {
    pub vertices: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub outcome: OutcomePayload,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex_cycle_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isometric_dimension: Option<usize>,
    /// Hypercube certificate: vertex name → bit string.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
    /// Certified isomorphism as [input vertex, generator vertex] pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn classify_payload(g: &Graph, c: &Classification) -> ClassifyPayload {
    let labels = c.labeling.as_ref().map(|lab| {
        (0..g.vertex_count())
            .map(|v| (name(g, v), lab.label_bitstring(v)))
            .collect()
    });
    let isomorphism = c.isomorphism.as_ref().map(|map| {
        let model = match &c.outcome {
            Outcome::DoubledOdd { k } => doubled_odd(*k as u32).expect("generator range"),
            Outcome::EvenCycle { n } => even_cycle(*n as u32).expect("generator range"),
            _ => unreachable!("isomorphism only certifies those two outcomes"),
        };
        map.iter()
            .enumerate()
            .map(|(v, &w)| [name(g, v), name(&model, w)])
            .collect()
    });
    ClassifyPayload {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        outcome: outcome_payload(g, &c.outcome),
        convex_cycle_length: c.convex_cycle_length,
        degree: c.degree,
        isometric_dimension: c.isometric_dimension,
        labels,
        isomorphism,
        note: c.note.clone(),
    }
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MedianModePayload {
    Exact,
    HypercubeShortcut,
    Sampled { triples: usize, seed: u64 },
}

#[derive(Serialize)]
pub struct ClassWitnessesPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_triple: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semi_median_edge: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub almost_median_edge: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub long_convex_cycle: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_partial_cube: Option<WitnessPayload>,
}

#[derive(Serialize)]
pub struct TilingPayload {
    pub square_count: usize,
    pub square_rank: usize,
    pub cycle_space_dim: usize,
}

#[derive(Serialize)]
pub struct ClassesPayload {
    pub vertices: usize,
    pub edges: usize,
    pub partial_cube: bool,
    pub hypercube: bool,
    pub median: bool,
    pub almost_median: bool,
    pub almost_median_via_cycles: bool,
    pub tiled: bool,
    pub semi_median: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_mode: Option<MedianModePayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tiling: Option<TilingPayload>,
    pub witnesses: ClassWitnessesPayload,
}

pub fn classes_payload(g: &Graph, r: &ClassReport) -> ClassesPayload {
    ClassesPayload {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        partial_cube: r.partial_cube,
        hypercube: r.hypercube,
        median: r.median,
        almost_median: r.almost_median,
        almost_median_via_cycles: r.almost_median_via_cycles,
        tiled: r.tiled,
        semi_median: r.semi_median,
        median_mode: r.median_mode.map(|m| match m {
            MedianMode::Exact => MedianModePayload::Exact,
            MedianMode::HypercubeShortcut => MedianModePayload::HypercubeShortcut,
            MedianMode::Sampled { triples, seed } => MedianModePayload::Sampled { triples, seed },
        }),
        tiling: r.tiling.map(|t| TilingPayload {
            square_count: t.square_count,
            square_rank: t.square_rank,
            cycle_space_dim: t.cycle_space_dim,
        }),
        witnesses: ClassWitnessesPayload {
            median_triple: r.median_witness.map(|w| {
                [
                    name(g, w.triple.0),
                    name(g, w.triple.1),
                    name(g, w.triple.2),
                ]
            }),
            median_count: r.median_witness.map(|w| w.median_count),
            semi_median_edge: r
                .semi_median_witness
                .as_ref()
                .map(|w| edge_names(g, w.edge.0, w.edge.1)),
            almost_median_edge: r
                .almost_median_witness
                .as_ref()
                .map(|w| edge_names(g, w.edge.0, w.edge.1)),
            long_convex_cycle: r
                .long_convex_cycle
                .as_ref()
                .map(|c| c.vertices().iter().map(|&v| name(g, v)).collect()),
            not_partial_cube: r.not_partial_cube.as_ref().map(|w| witness_payload(g, w)),
        },
    }
}

#[derive(Serialize)]
pub struct EmbedRow {
    pub vertex: String,
    pub label: String,
}

#[derive(Serialize)]
pub struct EmbedPayload {
    pub vertices: usize,
    pub edges: usize,
    pub classes: usize,
    pub labels: Vec<EmbedRow>,
}

pub fn embed_payload(g: &Graph, cert: &PartialCubeCertificate) -> EmbedPayload {
    EmbedPayload {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        classes: cert.labeling.class_count(),
        labels: (0..g.vertex_count())
            .map(|v| EmbedRow {
                vertex: name(g, v),
                label: cert.labeling.label_bitstring(v),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct GeneratePayload {
    pub spec: String,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
pub struct CheckPayload {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Serialize)]
pub struct CorpusGraphPayload {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub outcome: OutcomePayload,
    pub passed: bool,
    pub checks: Vec<CheckPayload>,
}

pub fn corpus_graph_payload(
    spec: &str,
    g: &Graph,
    outcome: &Outcome,
    checks: &[SuiteCheck],
) -> CorpusGraphPayload {
    CorpusGraphPayload {
        name: spec.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        outcome: outcome_payload(g, outcome),
        passed: checks.iter().all(|c| c.passed),
        checks: checks
            .iter()
            .map(|c| CheckPayload {
                name: c.name.to_string(),
                passed: c.passed,
                details: c.details.clone(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct CorpusPayload {
    pub profile: String,
    pub seed: u64,
    pub oracle_bound: usize,
    pub all_passed: bool,
    pub graphs: Vec<CorpusGraphPayload>,
}
