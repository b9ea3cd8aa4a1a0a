//! Command-line surface: graph ingestion, dispatch into the library, and
//! text or JSON reports. Exit codes: 0 success, 1 negative verdict or
//! property violation, 2 usage or parse error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cubekit::classify::{classify_with, ExclusionReason, Outcome};
use cubekit::convexity::{
    enumerate_convex_cycles, enumerate_convex_cycles_bruteforce, ConvexCycleSet,
    DEFAULT_ORACLE_BOUND,
};
use cubekit::families::{corpus, CorpusProfile, FamilySpec};
use cubekit::graph::Graph;
use cubekit::io::{detect_format, parse_by_format, write_edge_list, write_graph6};
use cubekit::report::{
    classes_payload, classify_payload, convex_cycles_payload, corpus_graph_payload,
    embed_payload, recognize_payload, CorpusPayload, GeneratePayload, Payload, Report,
};
use cubekit::suite::{run_suite, suite_passed, SuiteCheck, SuiteOptions};
use cubekit::theta::{is_partial_cube, NotPartialCubeWitness, PartialCubeCheck};

#[derive(Parser)]
#[command(
    name = "cubekit",
    version,
    about = "Partial-cube toolkit: recognition, convex cycles, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph is a partial cube, with certificate
    Recognize(InputArgs),
    /// Enumerate convex cycles and their length spectrum
    ConvexCycles {
        #[command(flatten)]
        input: InputArgs,
        /// Cross-check against the brute-force enumeration
        #[arg(long)]
        oracle: bool,
    },
    /// Classify regular partial cubes by their uniform convex cycle length
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Verify DOUBLED_ODD and EVEN_CYCLE outcomes by explicit isomorphism
        #[arg(long)]
        certify: bool,
    },
    /// Evaluate the class chain: median, almost-median, tiled, semi-median
    Classes(InputArgs),
    /// Print the isometric hypercube embedding, one bit string per vertex
    Embed(InputArgs),
    /// Write a generated family graph
    Generate {
        /// Family spec such as Q:4, DO:3, C:10, GRID:3x4, PROD(Q:2,C:6)
        spec: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Edges)]
        format: OutFormat,
        /// Output file; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print a JSON report after writing
        #[arg(long)]
        json: bool,
    },
    /// Run the full property suite over the named corpus
    Corpus {
        #[arg(long, default_value = "SMALL")]
        profile: String,
        #[arg(long)]
        json: bool,
        /// Seed for the sampled sweeps
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; output order stays deterministic
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Family spec such as Q:4, DO:3, C:10, GRID:3x4, PROD(Q:2,C:6)
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Graph file: .g6 for graph6, anything else as edge list
    file: Option<PathBuf>,
    /// Emit the JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    Edges,
}

struct CliError {
    message: String,
    code: u8,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        code: 2,
    }
}

fn violation(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        code: 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((code, out)) => {
            // A closed pipe downstream is not an error; keep the verdict.
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn load_input(input: &InputArgs) -> Result<(Graph, String), CliError> {
    match (&input.family, &input.file) {
        (Some(spec), None) => {
            let parsed: FamilySpec = spec
                .parse()
                .map_err(|e| usage(format!("bad family spec: {e}")))?;
            let g = parsed.build().map_err(|e| usage(format!("{e}")))?;
            Ok((g, format!("family {spec}")))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let format = detect_format(&path.to_string_lossy(), &text);
            let g = parse_by_format(format, &text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok((g, format!("file {}", path.display())))
        }
        (None, None) => Err(usage("provide --family SPEC or a graph file")),
        (Some(_), Some(_)) => Err(usage("choose either --family or a file, not both")),
    }
}

fn oracle_bound() -> Result<usize, CliError> {
    match std::env::var("CUBEKIT_ORACLE_BOUND") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("CUBEKIT_ORACLE_BOUND=`{text}` is not a number"))),
        Err(_) => Ok(DEFAULT_ORACLE_BOUND),
    }
}

fn describe_witness(g: &Graph, w: &NotPartialCubeWitness) -> String {
    let edge = |(u, v): (usize, usize)| format!("({}, {})", g.vertex_name(u), g.vertex_name(v));
    match w {
        NotPartialCubeWitness::NotConnected => "not connected".to_string(),
        NotPartialCubeWitness::NotBipartite { odd_cycle } => {
            let names: Vec<String> = odd_cycle.iter().map(|&v| g.vertex_name(v)).collect();
            format!("odd cycle: {}", names.join(" "))
        }
        NotPartialCubeWitness::ThetaNotTransitive { e, f, h } => format!(
            "theta not transitive: e={} f={} h={}; e~f and f~h but not e~h",
            edge(*e),
            edge(*f),
            edge(*h)
        ),
        NotPartialCubeWitness::LabelingNotIsometric { u, v } => format!(
            "labeling not isometric at ({}, {})",
            g.vertex_name(*u),
            g.vertex_name(*v)
        ),
    }
}

fn outcome_text(g: &Graph, outcome: &Outcome) -> String {
    match outcome {
        Outcome::Hypercube { k } => format!("HYPERCUBE({k})"),
        Outcome::DoubledOdd { k } => format!("DOUBLED_ODD({k})"),
        Outcome::EvenCycle { n } => format!("EVEN_CYCLE({n})"),
        Outcome::Excluded(reason) => match reason {
            ExclusionReason::NotPartialCube(w) => {
                format!("EXCLUDED(NOT_PARTIAL_CUBE: {})", describe_witness(g, w))
            }
            ExclusionReason::TrivialK1K2 => "EXCLUDED(TRIVIAL_K1_K2)".to_string(),
            ExclusionReason::NotRegular {
                min_degree,
                max_degree,
            } => format!("EXCLUDED(NOT_REGULAR: degrees {min_degree}..{max_degree})"),
            ExclusionReason::NoCycles => "EXCLUDED(NO_CYCLES)".to_string(),
            ExclusionReason::MixedCycleLengths { spectrum } => {
                format!("EXCLUDED(MIXED_CYCLE_LENGTHS: {})", spectrum_text(spectrum))
            }
        },
    }
}

fn spectrum_text(spectrum: &std::collections::BTreeMap<usize, usize>) -> String {
    if spectrum.is_empty() {
        return "(empty)".to_string();
    }
    spectrum
        .iter()
        .map(|(len, count)| format!("{len}:{count}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command) -> Result<(u8, String), CliError> {
    let mut out = String::new();
    match command {
        Command::Recognize(input) => {
            let (g, descriptor) = load_input(&input)?;
            let check = is_partial_cube(&g);
            if input.json {
                let report = Report::new(
                    "recognize",
                    &descriptor,
                    Payload::Recognize(recognize_payload(&g, &check)),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(out, "input: {descriptor}");
                let _ = writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
                match &check {
                    PartialCubeCheck::PartialCube(cert) => {
                        let _ = writeln!(out, "partial cube: yes");
                        let _ = writeln!(
                            out,
                            "isometric dimension: {}",
                            cert.labeling.class_count()
                        );
                    }
                    PartialCubeCheck::Not(witness) => {
                        let _ = writeln!(out, "partial cube: no");
                        let _ = writeln!(out, "witness: {}", describe_witness(&g, witness));
                    }
                }
            }
            Ok((if check.is_partial_cube() { 0 } else { 1 }, out))
        }

        Command::ConvexCycles { input, oracle } => {
            let (g, descriptor) = load_input(&input)?;
            let check = is_partial_cube(&g);
            let Some(cert) = check.certificate() else {
                return Err(violation(format!(
                    "not a partial cube: {}",
                    describe_witness(&g, check.witness().expect("negative check"))
                )));
            };
            let cycles = enumerate_convex_cycles(&g, &cert.distances, &cert.partition);
            let oracle_result: Option<(usize, ConvexCycleSet)> = if oracle {
                let bound = oracle_bound()?;
                let set = enumerate_convex_cycles_bruteforce(&g, &cert.distances, bound)
                    .map_err(|e| violation(format!("{e}")))?;
                Some((bound, set))
            } else {
                None
            };
            let matched = oracle_result
                .as_ref()
                .map(|(_, o)| o.cycles() == cycles.cycles());
            if input.json {
                let report = Report::new(
                    "convex-cycles",
                    &descriptor,
                    Payload::ConvexCycles(convex_cycles_payload(
                        &g,
                        &cycles,
                        oracle_result.as_ref().map(|(b, o)| (*b, o)),
                    )),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(out, "input: {descriptor}");
                let _ = writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
                let _ = writeln!(out, "convex cycles: {}", cycles.count());
                let _ = writeln!(out, "spectrum: {}", spectrum_text(cycles.length_spectrum()));
                let listed = cycles.cycles().len().min(50);
                for c in &cycles.cycles()[..listed] {
                    let names: Vec<String> =
                        c.vertices().iter().map(|&v| g.vertex_name(v)).collect();
                    let _ = writeln!(out, "  {}", names.join(" "));
                }
                if cycles.count() > listed {
                    let _ = writeln!(out, "  (and {} more)", cycles.count() - listed);
                }
                if let (Some(matched), Some((bound, o))) = (matched, &oracle_result) {
                    let _ = writeln!(
                        out,
                        "oracle: {} (bound {bound}, spectrum {})",
                        if matched { "MATCH" } else { "MISMATCH" },
                        spectrum_text(o.length_spectrum())
                    );
                }
            }
            Ok((if matched == Some(false) { 1 } else { 0 }, out))
        }

        Command::Classify { input, certify } => {
            let (g, descriptor) = load_input(&input)?;
            let classification =
                classify_with(&g, certify).map_err(|e| violation(format!("{e}")))?;
            if input.json {
                let report = Report::new(
                    "classify",
                    &descriptor,
                    Payload::Classify(classify_payload(&g, &classification)),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(out, "input: {descriptor}");
                let _ = writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
                let _ = writeln!(out, "outcome: {}", outcome_text(&g, &classification.outcome));
                if let Some(len) = classification.convex_cycle_length {
                    let _ = writeln!(out, "convex cycle length: {len}");
                }
                if let Some(degree) = classification.degree {
                    let _ = writeln!(out, "degree: {degree}");
                }
                if let Some(idim) = classification.isometric_dimension {
                    let _ = writeln!(out, "isometric dimension: {idim}");
                }
                if let Some(map) = &classification.isomorphism {
                    let _ = writeln!(out, "isomorphism: certified ({} vertices)", map.len());
                }
                if let Some(note) = &classification.note {
                    let _ = writeln!(out, "note: {note}");
                }
            }
            Ok((0, out))
        }

        Command::Classes(input) => {
            let (g, descriptor) = load_input(&input)?;
            let report = cubekit::classes::class_report(&g);
            if input.json {
                let report = Report::new(
                    "classes",
                    &descriptor,
                    Payload::Classes(classes_payload(&g, &report)),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(out, "input: {descriptor}");
                let _ = writeln!(out, "vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
                let yesno = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(out, "partial cube: {}", yesno(report.partial_cube));
                if let Some(w) = &report.not_partial_cube {
                    let _ = writeln!(out, "  witness: {}", describe_witness(&g, w));
                }
                let _ = writeln!(out, "hypercube: {}", yesno(report.hypercube));
                let mode = match report.median_mode {
                    Some(cubekit::classes::MedianMode::Exact) => " [exact]",
                    Some(cubekit::classes::MedianMode::HypercubeShortcut) => {
                        " [hypercube shortcut]"
                    }
                    Some(cubekit::classes::MedianMode::Sampled { .. }) => " [sampled]",
                    None => "",
                };
                let _ = writeln!(out, "median: {}{mode}", yesno(report.median));
                if let Some(w) = &report.median_witness {
                    let _ = writeln!(
                        out,
                        "  witness triple: ({}, {}, {}) with {} medians",
                        g.vertex_name(w.triple.0),
                        g.vertex_name(w.triple.1),
                        g.vertex_name(w.triple.2),
                        w.median_count
                    );
                }
                let _ = writeln!(out, "almost-median: {}", yesno(report.almost_median));
                if let Some(c) = &report.long_convex_cycle {
                    let names: Vec<String> =
                        c.vertices().iter().map(|&v| g.vertex_name(v)).collect();
                    let _ = writeln!(
                        out,
                        "  convex cycle of length {}: {}",
                        c.len(),
                        names.join(" ")
                    );
                }
                match &report.tiling {
                    Some(t) => {
                        let _ = writeln!(
                            out,
                            "tiled: {} [squares {}, rank {}, cycle space {}]",
                            yesno(report.tiled),
                            t.square_count,
                            t.square_rank,
                            t.cycle_space_dim
                        );
                    }
                    None => {
                        let _ = writeln!(out, "tiled: {}", yesno(report.tiled));
                    }
                }
                let _ = writeln!(out, "semi-median: {}", yesno(report.semi_median));
                if let Some(w) = &report.semi_median_witness {
                    let _ = writeln!(
                        out,
                        "  disconnected U-set at edge ({}, {})",
                        g.vertex_name(w.edge.0),
                        g.vertex_name(w.edge.1)
                    );
                }
            }
            Ok((0, out))
        }

        Command::Embed(input) => {
            let (g, descriptor) = load_input(&input)?;
            let check = is_partial_cube(&g);
            let Some(cert) = check.certificate() else {
                return Err(violation(format!(
                    "not a partial cube: {}",
                    describe_witness(&g, check.witness().expect("negative check"))
                )));
            };
            if input.json {
                let report = Report::new(
                    "embed",
                    &descriptor,
                    Payload::Embed(embed_payload(&g, cert)),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(out, "input: {descriptor}");
                let _ = writeln!(out, "classes: {}", cert.labeling.class_count());
                let width = (0..g.vertex_count())
                    .map(|v| g.vertex_name(v).len())
                    .max()
                    .unwrap_or(0);
                for v in 0..g.vertex_count() {
                    let _ = writeln!(
                        out,
                        "{:width$}  {}",
                        g.vertex_name(v),
                        cert.labeling.label_bitstring(v)
                    );
                }
            }
            Ok((0, out))
        }

        Command::Generate {
            spec,
            format,
            output,
            json,
        } => {
            let parsed: FamilySpec = spec
                .parse()
                .map_err(|e| usage(format!("bad family spec: {e}")))?;
            let g = parsed.build().map_err(|e| usage(format!("{e}")))?;
            let (text, format_name) = match format {
                OutFormat::G6 => (write_graph6(&g) + "\n", "g6"),
                OutFormat::Edges => (write_edge_list(&g), "edges"),
            };
            match &output {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => out.push_str(&text),
            }
            if json {
                let payload = GeneratePayload {
                    spec: spec.clone(),
                    format: format_name.to_string(),
                    path: output.map(|p| p.display().to_string()),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                };
                let report = Report::new("generate", &spec, Payload::Generate(payload));
                out.push_str(&report.to_json());
            }
            Ok((0, out))
        }

        Command::Corpus {
            profile,
            json,
            seed,
            jobs,
        } => {
            let parsed: CorpusProfile = profile.parse().map_err(|e| usage(format!("{e}")))?;
            let opts = SuiteOptions {
                oracle_bound: oracle_bound()?,
                seed,
                ..SuiteOptions::default()
            };
            let graphs = corpus(parsed);
            let results = run_corpus(&graphs, &opts, jobs.max(1));
            let all_passed = results.iter().all(|(_, checks)| suite_passed(checks));
            if json {
                let payload = CorpusPayload {
                    profile: profile.to_ascii_uppercase(),
                    seed,
                    oracle_bound: opts.oracle_bound,
                    all_passed,
                    graphs: graphs
                        .iter()
                        .zip(&results)
                        .map(|((name, g), (outcome, checks))| {
                            corpus_graph_payload(name, g, outcome, checks)
                        })
                        .collect(),
                };
                let report = Report::new(
                    "corpus",
                    &format!("profile {}", profile.to_ascii_uppercase()),
                    Payload::Corpus(payload),
                );
                out.push_str(&report.to_json());
            } else {
                let _ = writeln!(
                    out,
                    "profile: {}  seed: {seed}  oracle bound: {}",
                    profile.to_ascii_uppercase(),
                    opts.oracle_bound
                );
                for ((name, g), (outcome, checks)) in graphs.iter().zip(&results) {
                    let ok = suite_passed(checks);
                    let _ = writeln!(
                        out,
                        "{name:<16} {} ({} checks)  {}",
                        if ok { "pass" } else { "FAIL" },
                        checks.len(),
                        outcome_text(g, outcome)
                    );
                    for c in checks.iter().filter(|c| !c.passed) {
                        let _ = writeln!(out, "    FAIL {}: {}", c.name, c.details);
                    }
                }
                let _ = writeln!(
                    out,
                    "corpus: {} ({}/{} graphs)",
                    if all_passed { "PASS" } else { "FAIL" },
                    results
                        .iter()
                        .filter(|(_, checks)| suite_passed(checks))
                        .count(),
                    results.len()
                );
            }
            Ok((if all_passed { 0 } else { 1 }, out))
        }
    }
}

/// Runs classification and the suite per graph, fanning out over `jobs`
/// threads; slot-indexed results keep the output order independent of
/// scheduling.
fn run_corpus(
    graphs: &[(String, Graph)],
    opts: &SuiteOptions,
    jobs: usize,
) -> Vec<(Outcome, Vec<SuiteCheck>)> {
    let mut results: Vec<Option<(Outcome, Vec<SuiteCheck>)>> = Vec::new();
    results.resize_with(graphs.len(), || None);
    if jobs <= 1 || graphs.len() <= 1 {
        for (slot, (_, g)) in graphs.iter().enumerate() {
            results[slot] = Some((cubekit::classify::classify(g).outcome, run_suite(g, opts)));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots = std::sync::Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(graphs.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= graphs.len() {
                        break;
                    }
                    let g = &graphs[i].1;
                    let outcome = cubekit::classify::classify(g).outcome;
                    let checks = run_suite(g, opts);
                    slots.lock().expect("no poisoned workers")[i] = Some((outcome, checks));
                });
            }
        });
    }
    results
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}
