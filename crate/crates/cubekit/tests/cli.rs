//! End-to-end runs of the compiled binary: exit codes, report determinism,
//! and generate/ingest round trips.

use std::process::{Command, Output};

use cubekit::classify::verify_isomorphism;
use cubekit::families::FamilySpec;
use cubekit::io::{detect_format, parse_by_format};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubekit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn corpus_json_is_byte_identical_across_runs_and_jobs() {
    let a = run(&["corpus", "--profile", "SMALL", "--json"]);
    let b = run(&["corpus", "--profile", "SMALL", "--json", "--jobs", "4"]);
    assert!(a.status.success(), "first run failed: {}", stderr_of(&a));
    assert!(b.status.success(), "second run failed: {}", stderr_of(&b));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout_of(&a);
    assert!(text.contains("\"all_passed\": true"));
    assert!(text.contains("\"profile\": \"SMALL\""));
}

#[test]
fn generate_then_ingest_matches_the_generator() {
    let dir = tempfile::tempdir().expect("tempdir");
    for spec_text in ["Q:3", "DO:3", "C:12", "GRID:3x4"] {
        let spec: FamilySpec = spec_text.parse().unwrap();
        let direct = spec.build().unwrap();
        for format in ["g6", "edges"] {
            let path = dir.path().join(format!(
                "{}.{format}",
                spec_text.replace([':', 'x'], "_")
            ));
            let out = run(&[
                "generate",
                spec_text,
                "--format",
                format,
                "-o",
                path.to_str().unwrap(),
            ]);
            assert!(out.status.success(), "{}", stderr_of(&out));
            let text = std::fs::read_to_string(&path).unwrap();
            let parsed = parse_by_format(detect_format(&path.to_string_lossy(), &text), &text)
                .expect("written file parses back");
            assert_eq!(parsed.vertex_count(), direct.vertex_count());
            assert_eq!(parsed.edge_count(), direct.edge_count());
            let map = verify_isomorphism(&parsed, &direct).expect("within size bound");
            assert!(map.is_some(), "{spec_text} as {format} lost its structure");
        }
    }
}

#[test]
fn exit_codes_follow_the_verdicts() {
    let ok = run(&["recognize", "--family", "Q:3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout_of(&ok).contains("partial cube: yes"));

    let negative = run(&["recognize", "--family", "KB:2,3"]);
    assert_eq!(negative.status.code(), Some(1));
    assert!(stdout_of(&negative).contains("partial cube: no"));
    assert!(stdout_of(&negative).contains("theta not transitive"));

    let excluded = run(&["classify", "--family", "GRID:3x3"]);
    assert_eq!(excluded.status.code(), Some(0));
    assert!(stdout_of(&excluded).contains("EXCLUDED(NOT_REGULAR: degrees 2..4)"));

    let embed_bad = run(&["embed", "--family", "KB:2,3"]);
    assert_eq!(embed_bad.status.code(), Some(1));
    assert!(stderr_of(&embed_bad).contains("not a partial cube"));

    let bad_spec = run(&["classify", "--family", "Q:notanumber"]);
    assert_eq!(bad_spec.status.code(), Some(2));

    let no_input = run(&["recognize"]);
    assert_eq!(no_input.status.code(), Some(2));

    let unknown_flag = run(&["recognize", "--family", "Q:2", "--bogus"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
}

#[test]
fn file_ingestion_reports_errors_with_positions() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.edges");
    std::fs::write(&path, "n=3\n0 1\n1 4\n").unwrap();
    let out = run(&["recognize", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("line 3"), "missing position: {err}");
    assert!(err.contains("vertex 4 out of range"), "{err}");
}

#[test]
fn named_vertices_survive_into_witnesses() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("triangle.edges");
    std::fs::write(&path, "ann bob\nbob cal\ncal ann\n").unwrap();
    let out = run(&["recognize", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("odd cycle"), "{text}");
    for name in ["ann", "bob", "cal"] {
        assert!(text.contains(name), "witness lost the name {name}: {text}");
    }
}

#[test]
fn oracle_bound_env_is_honored() {
    let out = bin()
        .args(["convex-cycles", "--family", "Q:3", "--oracle"])
        .env("CUBEKIT_ORACLE_BOUND", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("oracle bound 4"));

    let ok = bin()
        .args(["convex-cycles", "--family", "Q:3", "--oracle"])
        .env("CUBEKIT_ORACLE_BOUND", "8")
        .output()
        .expect("binary runs");
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout_of(&ok).contains("oracle: MATCH (bound 8"));

    let junk = bin()
        .args(["corpus", "--profile", "SMALL"])
        .env("CUBEKIT_ORACLE_BOUND", "soon")
        .output()
        .expect("binary runs");
    assert_eq!(junk.status.code(), Some(2));
}

#[test]
fn generate_stdout_parses_as_graph6() {
    let out = run(&["generate", "Q:4", "--format", "g6"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let g = cubekit::io::parse_graph6(&text).expect("stdout is graph6");
    assert_eq!((g.vertex_count(), g.edge_count()), (16, 32));
}
