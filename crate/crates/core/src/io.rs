//! Edge-list and graph6 readers/writers, and report serialization.
//!
//! Edge-list files start with a line `n m` followed by `m` lines `u v`
//! (1-indexed); `#` starts a comment. File order is the edge labeling.
//! Only the short graph6 form (`n < 63`) is supported.

use std::fmt::Write as _;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::verify::{round_significant, Status, Value, VerificationItem, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("graph6: character {ch:?} at position {position} is outside '?'..='~'")]
    BadChecksumChar { position: usize, ch: char },
    #[error("graph6: expected {expected} data characters, found {found}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("graph6: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    pub name: Option<String>,
    pub graph: Graph,
    pub source: SourceFormat,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let malformed = |message: String| ParseError::Malformed { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| {
        let raw = fields.next().ok_or_else(|| malformed(format!("missing {what}")))?;
        raw.parse::<usize>().map_err(|_| malformed(format!("{what} {raw:?} is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(malformed(format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edgelist(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (header_line, header) =
        lines.next().ok_or(ParseError::Malformed { line: 1, message: "missing header \"n m\"".into() })?;
    let (n, m) = parse_pair(header, header_line)?;
    if n == 0 {
        return Err(ParseError::Malformed { line: header_line, message: "graph needs at least one vertex".into() });
    }
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(text, line)?;
        edges.push((u, v));
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch { declared: m, found: edges.len() });
    }
    let graph = Graph::from_one_indexed(n, &edges).map_err(|source| {
        let index = match &source {
            GraphError::SelfLoop { index, .. }
            | GraphError::DuplicateEdge { index, .. }
            | GraphError::VertexOutOfRange { index, .. } => *index,
            GraphError::IndexOutOfRange { .. } => 1,
        };
        ParseError::Graph { line: edge_lines[index - 1], source }
    })?;
    Ok(GraphDocument { name: None, graph, source: SourceFormat::EdgeList })
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<GraphDocument, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    for (position, ch) in text.chars().enumerate() {
        if !('?'..='~').contains(&ch) {
            return Err(ParseError::BadChecksumChar { position, ch });
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(ParseError::TruncatedBits { expected: 1, found: 0 });
    };
    if first == b'~' {
        return Err(ParseError::Unsupported("long form (n >= 63) is not supported".into()));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(ParseError::Unsupported("graph needs at least one vertex".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(ParseError::TruncatedBits { expected, found: data.len() });
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(ParseError::Unsupported("nonzero padding bits".into()));
    }
    let graph = Graph::new(n, edges).expect("upper-triangle bits describe a simple graph");
    Ok(GraphDocument { name: None, graph, source: SourceFormat::Graph6 })
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n < 63, "only the short graph6 form is supported");
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Edge list if the first meaningful line is `n m`, otherwise one graph6
/// string per line.
pub fn parse_graphs(text: &str) -> Result<Vec<GraphDocument>, ParseError> {
    let first = text.lines().map(strip_comment).find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2 => Ok(vec![parse_edgelist(text)?]),
        _ => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Int(x) => s.serialize_str(&x.to_string()),
            Value::Real(x) if x.is_finite() => s.serialize_f64(round_significant(*x, 12)),
            Value::Real(_) => s.serialize_none(),
            Value::Bool(b) => s.serialize_bool(*b),
            Value::List(xs) => {
                let mut seq = s.serialize_seq(Some(xs.len()))?;
                for x in xs {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    name: Option<&'a str>,
    graph: SummaryJson,
    all_passed: bool,
    budget_exceeded: bool,
    items: Vec<ItemJson<'a>>,
}

#[derive(Serialize)]
struct SummaryJson {
    n: usize,
    m: usize,
    connected: bool,
    bipartite: bool,
    oc: String,
    ous: Option<String>,
    t: Option<String>,
}

#[derive(Serialize)]
struct ItemJson<'a> {
    theorem_id: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<usize>,
    status: &'static str,
    relation: &'static str,
    lhs: Option<&'a Value>,
    rhs: Option<&'a Value>,
    passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equality: Option<EqualityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skip_reason: Option<&'a str>,
    elapsed_us: u64,
}

#[derive(Serialize)]
struct EqualityJson {
    predicate: &'static str,
    predicate_holds: bool,
    equality_holds: bool,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    vertex: Option<usize>,
    edges: Option<Vec<usize>>,
    note: &'a str,
}

fn item_json(item: &VerificationItem) -> ItemJson<'_> {
    ItemJson {
        theorem_id: item.theorem.as_str(),
        vertex: item.vertex.map(|v| v + 1),
        status: item.status.as_str(),
        relation: item.relation.as_str(),
        lhs: item.lhs.as_ref(),
        rhs: item.rhs.as_ref(),
        passed: item.passed(),
        equality: item.equality.as_ref().map(|e| EqualityJson {
            predicate: e.predicate,
            predicate_holds: e.predicate_holds,
            equality_holds: e.equality_holds,
        }),
        witness: item.witness.as_ref().map(|w| WitnessJson {
            vertex: w.vertex.map(|v| v + 1),
            edges: w.edges.as_ref().map(|es| es.iter().map(|e| e + 1).collect()),
            note: &w.note,
        }),
        skip_reason: item.skip_reason.as_deref(),
        elapsed_us: item.elapsed.as_micros() as u64,
    }
}

pub fn report_json(report: &VerificationReport) -> String {
    let s = &report.summary;
    let doc = ReportJson {
        name: report.name.as_deref(),
        graph: SummaryJson {
            n: s.n,
            m: s.m,
            connected: s.connected,
            bipartite: s.bipartite,
            oc: s.odd_cycles.to_string(),
            ous: s.ous.map(|x| x.to_string()),
            t: s.spanning_trees.map(|x| x.to_string()),
        },
        all_passed: report.all_passed(),
        budget_exceeded: report.budget_exceeded(),
        items: report.items.iter().map(item_json).collect(),
    };
    serde_json::to_string(&doc).expect("report serializes")
}

pub fn report_text(report: &VerificationReport) -> String {
    let s = &report.summary;
    let opt = |x: Option<u64>| x.map_or("n/a".to_string(), |v| v.to_string());
    let mut out = String::new();
    if let Some(name) = &report.name {
        writeln!(out, "graph {name}").unwrap();
    }
    writeln!(
        out,
        "n={} m={} connected={} bipartite={} t(G)={} oc(G)={} ous(G)={}",
        s.n,
        s.m,
        s.connected,
        s.bipartite,
        opt(s.spanning_trees),
        s.odd_cycles,
        opt(s.ous)
    )
    .unwrap();
    let rows: Vec<[String; 5]> = report
        .items
        .iter()
        .map(|item| {
            let (lhs, rhs) = match (&item.lhs, &item.rhs) {
                (Some(l), Some(r)) => (l.to_string(), r.to_string()),
                _ => ("-".into(), "-".into()),
            };
            let status = match item.status {
                Status::Skipped => format!("skipped ({})", item.skip_reason.as_deref().unwrap_or("")),
                Status::Failed => {
                    let w = item.witness.as_ref();
                    let mut s = "FAILED".to_string();
                    if let Some(v) = w.and_then(|w| w.vertex) {
                        write!(s, " vertex={}", v + 1).unwrap();
                    }
                    if let Some(es) = w.and_then(|w| w.edges.as_ref()) {
                        let es: Vec<String> = es.iter().map(|e| (e + 1).to_string()).collect();
                        write!(s, " S={{{}}}", es.join(",")).unwrap();
                    }
                    if let Some(note) = w.map(|w| &w.note).filter(|n| !n.is_empty()) {
                        write!(s, " {note}").unwrap();
                    }
                    s
                }
                Status::Passed => "ok".into(),
            };
            [item.theorem.as_str().to_string(), item.statement(), lhs, item.relation.symbol().to_string() + " " + &rhs, status]
        })
        .collect();
    let widths: Vec<usize> = (0..4).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    for r in &rows {
        for c in 0..4 {
            write!(out, "{}{}  ", r[c], " ".repeat(widths[c] - r[c].chars().count())).unwrap();
        }
        writeln!(out, "{}", r[4]).unwrap();
    }
    out
}

pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report_json(report),
        ReportFormat::Text => report_text(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{signless_laplacian, IntMatrix};
    use crate::verify::verify_all;

    #[test]
    fn edgelist_paw() {
        let doc = parse_edgelist("4 4\n1 2\n2 3\n3 4\n2 4").unwrap();
        assert_eq!(doc.graph, Graph::paw());
        assert_eq!(
            signless_laplacian(&doc.graph),
            IntMatrix::from_rows(&[vec![1, 1, 0, 0], vec![1, 3, 1, 1], vec![0, 1, 2, 1], vec![0, 1, 1, 2]])
        );
        assert_eq!(write_edgelist(&doc.graph), "4 4\n1 2\n2 3\n3 4\n2 4\n");
    }

    #[test]
    fn edgelist_edge_cases() {
        let single = parse_edgelist("1 0").unwrap();
        assert_eq!((single.graph.vertex_count(), single.graph.edge_count()), (1, 0));
        let commented = parse_edgelist("# paw\n4 4 # header\n1 2\n\n2 3\n3 4 # triangle\n2 4\n").unwrap();
        assert_eq!(commented.graph, Graph::paw());
        assert!(matches!(
            parse_edgelist("3 2\n1 2\n1 2"),
            Err(ParseError::Graph { line: 3, source: GraphError::DuplicateEdge { .. } })
        ));
        assert!(matches!(
            parse_edgelist("3 1\n2 2"),
            Err(ParseError::Graph { source: GraphError::SelfLoop { .. }, .. })
        ));
        assert_eq!(parse_edgelist("3 2\n1 2"), Err(ParseError::CountMismatch { declared: 2, found: 1 }));
        assert!(matches!(parse_edgelist("3 1\n1 x"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(parse_edgelist(""), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_edgelist("0 0"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_edgelist("2 1\n1 2 3"), Err(ParseError::Malformed { line: 2, .. })));
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("C~").unwrap().graph, Graph::complete(4));
        let edge = parse_graph6("A_").unwrap().graph;
        assert_eq!(edge.edges(), &[(0, 1)]);
        assert_eq!(parse_graph6("A?").unwrap().graph.edge_count(), 0);
        let single = parse_graph6("@").unwrap().graph;
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::path(2)), "A_");
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().graph, Graph::complete(4));
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("C ~"), Err(ParseError::BadChecksumChar { position: 1, ch: ' ' })));
        assert_eq!(parse_graph6("D"), Err(ParseError::TruncatedBits { expected: 2, found: 0 }));
        assert_eq!(parse_graph6("C~~"), Err(ParseError::TruncatedBits { expected: 1, found: 2 }));
        assert!(matches!(parse_graph6("~?@?"), Err(ParseError::Unsupported(_))));
        // n = 2 has one data bit; 'A' + 0b000001 sets a padding bit
        assert!(matches!(parse_graph6("A@"), Err(ParseError::Unsupported(_))));
    }

    #[test]
    fn auto_detection() {
        let docs = parse_graphs("C~\nA_\n\n@\n").unwrap();
        assert_eq!(docs.len(), 3);
        let docs = parse_graphs("# comment\n4 4\n1 2\n2 3\n3 4\n2 4\n").unwrap();
        assert_eq!(docs[0].graph, Graph::paw());
        assert_eq!(docs[0].source, SourceFormat::EdgeList);
    }

    #[test]
    fn json_report_shape() {
        let json = report_json(&verify_all(&Graph::paw()));
        assert!(json.contains(r#""theorem_id":"MINOR_FORMULA","vertex":1,"status":"passed","relation":"equals","lhs":"7","rhs":"7","passed":true"#), "{json}");
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["graph"]["t"], "3");
        let k4 = report_json(&verify_all(&Graph::complete(4)));
        assert!(k4.contains(r#""theorem_id":"DET_FORMULA","status":"passed","relation":"equals","lhs":"48""#));
        let lone = report_json(&verify_all(&Graph::empty(1)));
        let parsed: serde_json::Value = serde_json::from_str(&lone).unwrap();
        assert_eq!(parsed["items"][0]["status"], "skipped");
    }

    #[test]
    fn reports_are_deterministic() {
        fn strip(v: &mut serde_json::Value) {
            for item in v["items"].as_array_mut().unwrap() {
                item.as_object_mut().unwrap().remove("elapsed_us");
            }
        }
        let g = parse_edgelist("5 6\n1 2\n2 3\n3 1\n3 4\n4 5\n5 3").unwrap().graph;
        let mut a: serde_json::Value = serde_json::from_str(&report_json(&verify_all(&g))).unwrap();
        let mut b: serde_json::Value = serde_json::from_str(&report_json(&verify_all(&g))).unwrap();
        strip(&mut a);
        strip(&mut b);
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(report_text(&verify_all(&g)), report_text(&verify_all(&g)));
    }

    #[test]
    fn text_report_mentions_minors() {
        let text = report_text(&verify_all(&Graph::paw()));
        assert!(text.contains("det(Q(1)) = Σ4^c(H)"));
        assert!(text.lines().any(|l| l.starts_with("MINOR_FORMULA") && l.contains(" 7 ") && l.ends_with("ok")));
    }
}
