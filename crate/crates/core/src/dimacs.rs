//! DIMACS `.col` reading and canonical writing.
//!
//! Accepted input: `c` comment lines, blank lines, exactly one
//! `p edge <n> <m>` line (`p col` is accepted as a synonym) before any edge,
//! and `e <u> <v>` lines with 1-based ids. The declared edge count is
//! advisory. Output is canonical: one `p` line, then each edge once as
//! `e u v` with `u < v`, sorted, no comments.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("missing `p edge <n> <m>` line")]
    MissingProblemLine,
    #[error("line {line}: edge before the `p` line")]
    EdgeBeforeProblem { line: usize },
    #[error("line {line}: second `p` line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

/// Non-fatal findings while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimacsWarning {
    EdgeCountMismatch { declared: usize, distinct: usize },
}

impl std::fmt::Display for DimacsWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimacsWarning::EdgeCountMismatch { declared, distinct } => write!(
                f,
                "`p` line declares {declared} edges but {distinct} distinct edges were read"
            ),
        }
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    parse_dimacs_with_warnings(text).map(|(g, _)| g)
}

pub fn parse_dimacs_with_warnings(text: &str) -> Result<(Graph, Vec<DimacsWarning>), DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateProblemLine { line });
                }
                let format = fields.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(malformed(line, "expected `p edge <n> <m>`"));
                }
                let n = number(fields.next(), line, "vertex count")?;
                let m = number(fields.next(), line, "edge count")?;
                trailing(fields.next(), line)?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(DimacsError::EdgeBeforeProblem { line });
                };
                let u = number(fields.next(), line, "endpoint")?;
                let v = number(fields.next(), line, "endpoint")?;
                trailing(fields.next(), line)?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(DimacsError::VertexOutOfRange { line, vertex, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, vertex: u });
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(malformed(line, &format!("unknown line type `{other}`"))),
        }
    }

    let (n, declared) = header.ok_or(DimacsError::MissingProblemLine)?;
    let graph = Graph::from_edge_list(n, edges).expect("edges validated while parsing");
    let mut warnings = Vec::new();
    if graph.edge_count() != declared {
        warnings.push(DimacsWarning::EdgeCountMismatch {
            declared,
            distinct: graph.edge_count(),
        });
    }
    Ok((graph, warnings))
}

/// Canonical DIMACS text for `graph`.
pub fn serialize_dimacs(graph: &Graph) -> String {
    let mut out = String::with_capacity(16 + 16 * graph.edge_count());
    writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn malformed(line: usize, reason: &str) -> DimacsError {
    DimacsError::Malformed {
        line,
        reason: reason.to_string(),
    }
}

fn number(field: Option<&str>, line: usize, what: &str) -> Result<usize, DimacsError> {
    let field = field.ok_or_else(|| malformed(line, &format!("missing {what}")))?;
    field
        .parse()
        .map_err(|_| malformed(line, &format!("invalid {what} `{field}`")))
}

fn trailing(field: Option<&str>, line: usize) -> Result<(), DimacsError> {
    match field {
        None => Ok(()),
        Some(extra) => Err(malformed(line, &format!("unexpected trailing field `{extra}`"))),
    }
}
