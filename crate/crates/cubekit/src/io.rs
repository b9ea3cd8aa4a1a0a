//! Graph serialization: the graph6 format and a plain edge-list text format.
//!
//! Edge lists come in two modes. With an `n=<count>` header every token must
//! be an integer index below the count. Without one, tokens are arbitrary
//! whitespace-free identifiers, numbered by first appearance and kept as
//! vertex names. `#` starts a comment anywhere on a line.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Unwritable(String),
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

const G6_HEADER: &str = ">>graph6<<";

/// Number of bytes carrying the upper-triangle bits of an n-vertex graph.
fn g6_body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses the first graph on the line, tolerating the optional format header.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, 1, "empty graph6 input"))?;
    let line_no = line_no + 1;
    let mut offset = 0usize;
    let mut line = line.trim_end();
    if let Some(rest) = line.strip_prefix(G6_HEADER) {
        line = rest;
        offset = G6_HEADER.len();
    }
    let bytes = line.as_bytes();
    let col = |i: usize| offset + i + 1;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                line_no,
                col(i),
                format!("byte {b} outside the graph6 range 63..=126"),
            ));
        }
    }
    if bytes.is_empty() {
        return Err(err(line_no, col(0), "empty graph6 input"));
    }

    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(line_no, col(bytes.len()), "truncated vertex count"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(line_no, col(bytes.len()), "truncated vertex count"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };

    let body = &bytes[body_start..];
    let need = if n == 0 { 0 } else { g6_body_len(n) };
    if body.len() != need {
        return Err(err(
            line_no,
            col(body_start + body.len().min(need)),
            format!(
                "{n} vertices need {need} adjacency bytes, found {}",
                body.len()
            ),
        ));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    while k < need * 6 {
        if bit(k) {
            return Err(err(
                line_no,
                col(body_start + k / 6),
                "nonzero padding bits",
            ));
        }
        k += 1;
    }
    Graph::from_edge_list(&pairs, Some(n))
        .map_err(|e| err(line_no, col(body_start), e.to_string()))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12u32, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            bytes.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    if n > 1 {
        let mut body = vec![0u8; g6_body_len(n)];
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(i, j) {
                    body[k / 6] |= 1 << (5 - k % 6);
                }
                k += 1;
            }
        }
        bytes.extend(body.iter().map(|b| b + 63));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut lines = Vec::new();
    let mut saw_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if !saw_content {
            saw_content = true;
            if let Some(rest) = line.strip_prefix("n=") {
                declared = Some(rest.trim().parse::<usize>().map_err(|_| {
                    err(i + 1, raw.find("n=").unwrap_or(0) + 3, "bad vertex count")
                })?);
                continue;
            }
        }
        lines.push((i + 1, raw, line));
    }
    if !saw_content {
        return Err(err(1, 1, "empty edge list"));
    }

    let token_column = |raw: &str, token: &str| raw.find(token).map_or(1, |p| p + 1);
    let mut pairs = Vec::new();

    if let Some(count) = declared {
        for (line_no, raw, line) in lines {
            let mut tokens = line.split_whitespace();
            let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                return Err(err(line_no, 1, "expected exactly two vertices per line"));
            };
            let index = |t: &str| -> Result<usize, FormatError> {
                let v: usize = t.parse().map_err(|_| {
                    err(
                        line_no,
                        token_column(raw, t),
                        format!("`{t}` is not an integer index (integer mode: header n={count})"),
                    )
                })?;
                if v >= count {
                    return Err(err(
                        line_no,
                        token_column(raw, t),
                        format!("vertex {v} out of range for n={count}"),
                    ));
                }
                Ok(v)
            };
            pairs.push((index(a)?, index(b)?));
        }
        return Graph::from_edge_list(&pairs, Some(count)).map_err(|e| err(1, 1, e.to_string()));
    }

    let mut names: Vec<String> = Vec::new();
    let mut lookup: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let mut intern = |t: &str| -> usize {
        if let Some(&i) = lookup.get(t) {
            return i;
        }
        let i = names.len();
        names.push(t.to_string());
        lookup.insert(t.to_string(), i);
        i
    };
    for (line_no, _raw, line) in lines {
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(err(line_no, 1, "expected exactly two vertices per line"));
        };
        pairs.push((intern(a), intern(b)));
    }
    let count = names.len();
    Ok(Graph::from_edge_list(&pairs, Some(count))
        .map_err(|e| err(1, 1, e.to_string()))?
        .with_names(names))
}

/// Index mode with an `n=` header; vertex names, when present, ride along as
/// comments for human readers.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n={}\n", g.vertex_count()));
    if let Some(names) = g.names() {
        for (i, name) in names.iter().enumerate() {
            out.push_str(&format!("# {i} = {name}\n"));
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// `.g6` extension or a graph6 header selects graph6; everything else is
/// read as an edge list.
pub fn detect_format(path: &str, content: &str) -> Format {
    if path.ends_with(".g6") || content.trim_start().starts_with(G6_HEADER) {
        Format::Graph6
    } else {
        Format::EdgeList
    }
}

pub fn parse_by_format(format: Format, content: &str) -> Result<Graph, FormatError> {
    match format {
        Format::Graph6 => parse_graph6(content),
        Format::EdgeList => parse_edge_list(content),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corpus, hypercube, CorpusProfile};

    #[test]
    fn known_graph6_vectors() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(k4.has_edge(u, v));
            }
        }
        assert_eq!(write_graph6(&k4), "C~");

        // the reference vector: DQc is the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4
        let g = parse_graph6("DQc").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        assert_eq!(g.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g), "DQc");

        // C_5 packs its bits 101001 1001(00) = "Dhc"
        let c5 = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], Some(5)).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap().edges(), c5.edges());
    }

    #[test]
    fn graph6_header_and_errors() {
        let q1 = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!((q1.vertex_count(), q1.edge_count()), (2, 1));

        assert!(matches!(
            parse_graph6(""),
            Err(FormatError::Parse { line: 1, column: 1, .. })
        ));
        // byte below 63
        assert!(parse_graph6("C!").is_err());
        // wrong body length
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        // padding bits must be zero: K_2 needs one bit, five padding
        assert!(parse_graph6("A~").is_err());
        assert!(parse_graph6("A_").is_ok());
    }

    #[test]
    fn graph6_round_trips_the_corpus() {
        for (name, g) in corpus(CorpusProfile::Small) {
            let text = write_graph6(&g);
            let back = parse_graph6(&text).unwrap();
            assert_eq!(back.vertex_count(), g.vertex_count(), "{name}");
            assert_eq!(back.edges(), g.edges(), "{name}");
        }
    }

    #[test]
    fn graph6_long_form_for_63_plus_vertices() {
        let edges: Vec<(usize, usize)> = (0..63).map(|i| (i, i + 1)).collect();
        let p64 = Graph::from_edge_list(&edges, Some(64)).unwrap();
        let text = write_graph6(&p64);
        assert_eq!(&text[..1], "~");
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back.vertex_count(), 64);
        assert_eq!(back.edges(), p64.edges());
    }

    #[test]
    fn edge_list_integer_mode() {
        let g = parse_edge_list("# a square\nn=4\n0 1\n1 2 # chord-free\n2 3\n0 3\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!(g.names().is_none());

        let e = parse_edge_list("n=3\n0 5\n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 2, .. }));
        let e = parse_edge_list("n=3\na b\n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 2, .. }));
        let e = parse_edge_list("n=3\n0 1 2\n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 2, .. }));
    }

    #[test]
    fn edge_list_identifier_mode_keeps_names() {
        let g = parse_edge_list("s t\nt u\nu s\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        assert_eq!(g.vertex_name(0), "s");
        assert_eq!(g.vertex_name(1), "t");
        assert_eq!(g.vertex_name(2), "u");

        // numbers without a header are identifiers too
        let g = parse_edge_list("7 3\n3 5\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.vertex_name(0), "7");
    }

    #[test]
    fn edge_list_round_trip() {
        let q3 = hypercube(3).unwrap();
        let text = write_edge_list(&q3);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.vertex_count(), 8);
        assert_eq!(back.edges(), q3.edges());
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("x.g6", "whatever"), Format::Graph6);
        assert_eq!(detect_format("x.txt", ">>graph6<<C~"), Format::Graph6);
        assert_eq!(detect_format("x.txt", "0 1\n"), Format::EdgeList);
    }
}
