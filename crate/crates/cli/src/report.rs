//! Result documents: rendering and reading back.
//!
//! Text form uses 1-based vertex ids and colors:
//!
//! ```text
//! c <digest and per-component lines>
//! s COLORING <k>
//! v <vertex> <color>
//! ```
//!
//! or `s OBSTRUCTION clique|oddcycle` followed by `w <vertex> ...`. JSON form
//! is a single object with 0-based ids.

use std::fmt::Write as _;

use brooks_core::{ColorOutcome, Graph, Obstruction};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::solve::{ComponentSummary, Solved};

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub k: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionDoc>,
    pub component_count: usize,
    pub components: Vec<ComponentSummary>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionDoc {
    pub kind: String,
    pub vertices: Vec<usize>,
}

impl RunReport {
    pub fn new(g: &Graph, solved: &Solved, millis: u64) -> Self {
        let (outcome, colors_used, colors, obstruction) = match &solved.outcome {
            ColorOutcome::Colored(c) => ("coloring", Some(c.colors_used()), Some(c.as_slice().to_vec()), None),
            ColorOutcome::Obstructed(obs) => ("obstruction", None, None, Some(ObstructionDoc::from(obs))),
        };
        RunReport {
            n: g.vertex_count(),
            m: g.edge_count(),
            max_degree: g.max_degree(),
            k: solved.k,
            outcome,
            colors_used,
            colors,
            obstruction,
            component_count: solved.component_count,
            components: solved.components.clone(),
            millis,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Text form; carries no timing so identical runs print identical bytes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "c n {} m {} max_degree {} components {}",
            self.n,
            self.m,
            self.max_degree,
            self.component_count
        )
        .unwrap();
        for (i, c) in self.components.iter().enumerate() {
            write!(
                out,
                "c component {} first {} size {} max_degree {} budget {}",
                i + 1,
                c.first_vertex + 1,
                c.size,
                c.max_degree,
                c.budget
            )
            .unwrap();
            match c.colors_used {
                Some(used) => writeln!(out, " colors {used}").unwrap(),
                None => writeln!(out, " obstructed").unwrap(),
            }
        }
        if let Some(colors) = &self.colors {
            writeln!(out, "c colors_used {}", self.colors_used.unwrap_or(0)).unwrap();
            writeln!(out, "s COLORING {}", self.k).unwrap();
            for (v, c) in colors.iter().enumerate() {
                writeln!(out, "v {} {}", v + 1, c + 1).unwrap();
            }
        }
        if let Some(obs) = &self.obstruction {
            writeln!(out, "s OBSTRUCTION {}", obs.kind).unwrap();
            let ids: Vec<String> = obs.vertices.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "w {}", ids.join(" ")).unwrap();
        }
        out
    }
}

impl From<&Obstruction> for ObstructionDoc {
    fn from(obs: &Obstruction) -> Self {
        let kind = match obs {
            Obstruction::Clique(_) => "clique",
            Obstruction::OddCycle(_) => "oddcycle",
        };
        ObstructionDoc {
            kind: kind.to_string(),
            vertices: obs.vertices().to_vec(),
        }
    }
}

/// A result read back from disk, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimedResult {
    Coloring { k: usize, colors: Vec<usize> },
    Obstruction { k: usize, obstruction: Obstruction },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultParseError {
    #[error("line {line}: {reason}")]
    Text { line: usize, reason: String },
    #[error("json: {0}")]
    Json(String),
    #[error("no `s` status line")]
    MissingStatus,
}

#[derive(Deserialize)]
struct JsonResult {
    n: usize,
    k: usize,
    outcome: String,
    colors: Option<Vec<usize>>,
    obstruction: Option<ObstructionDoc>,
}

fn obstruction_of(kind: &str, vertices: Vec<usize>) -> Option<Obstruction> {
    match kind {
        "clique" => Some(Obstruction::Clique(vertices)),
        "oddcycle" => Some(Obstruction::OddCycle(vertices)),
        _ => None,
    }
}

/// Reads either form; JSON is recognized by a leading `{`. `n` is the
/// graph's order, used to size the coloring.
pub fn parse_result(text: &str, n: usize) -> Result<ClaimedResult, ResultParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, n)
    } else {
        parse_text(text, n)
    }
}

fn parse_json(text: &str, n: usize) -> Result<ClaimedResult, ResultParseError> {
    let doc: JsonResult = serde_json::from_str(text).map_err(|e| ResultParseError::Json(e.to_string()))?;
    if doc.n != n {
        return Err(ResultParseError::Json(format!("result is for {} vertices, graph has {n}", doc.n)));
    }
    match (doc.outcome.as_str(), doc.colors, doc.obstruction) {
        ("coloring", Some(colors), None) => Ok(ClaimedResult::Coloring { k: doc.k, colors }),
        ("obstruction", None, Some(o)) => {
            let obstruction = obstruction_of(&o.kind, o.vertices)
                .ok_or_else(|| ResultParseError::Json(format!("unknown obstruction kind `{}`", o.kind)))?;
            Ok(ClaimedResult::Obstruction { k: doc.k, obstruction })
        }
        (other, _, _) => Err(ResultParseError::Json(format!("inconsistent document for outcome `{other}`"))),
    }
}

fn parse_text(text: &str, n: usize) -> Result<ClaimedResult, ResultParseError> {
    enum Status {
        Coloring(usize),
        Obstruction(String),
    }
    let err = |line: usize, reason: String| ResultParseError::Text { line, reason };
    let one_based = |line: usize, field: Option<&str>| -> Result<usize, ResultParseError> {
        let f = field.ok_or_else(|| err(line, "missing field".into()))?;
        match f.parse::<usize>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(err(line, format!("expected a positive integer, got `{f}`"))),
        }
    };

    let mut status = None;
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut witness = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("s") => {
                if status.is_some() {
                    return Err(err(line, "second status line".into()));
                }
                status = Some(match (fields.next(), fields.next()) {
                    (Some("COLORING"), Some(k)) => {
                        Status::Coloring(k.parse().map_err(|_| err(line, format!("bad budget `{k}`")))?)
                    }
                    (Some("OBSTRUCTION"), Some(kind)) => Status::Obstruction(kind.to_string()),
                    _ => return Err(err(line, "expected `s COLORING <k>` or `s OBSTRUCTION <kind>`".into())),
                });
            }
            Some("v") => {
                let v = one_based(line, fields.next())?;
                let c = one_based(line, fields.next())?;
                if v >= n {
                    return Err(err(line, format!("vertex {} out of range", v + 1)));
                }
                if colors[v].replace(c).is_some() {
                    return Err(err(line, format!("vertex {} colored twice", v + 1)));
                }
            }
            Some("w") => {
                for f in fields {
                    witness.push(one_based(line, Some(f))?);
                }
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }

    match status.ok_or(ResultParseError::MissingStatus)? {
        Status::Coloring(k) => {
            let colors = colors
                .into_iter()
                .enumerate()
                .map(|(v, c)| c.ok_or_else(|| err(0, format!("vertex {} has no color", v + 1))))
                .collect::<Result<_, _>>()?;
            Ok(ClaimedResult::Coloring { k, colors })
        }
        Status::Obstruction(kind) => {
            let k = if kind == "oddcycle" { 2 } else { witness.len().saturating_sub(1) };
            let obstruction =
                obstruction_of(&kind, witness).ok_or_else(|| err(0, format!("unknown obstruction kind `{kind}`")))?;
            Ok(ClaimedResult::Obstruction { k, obstruction })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::color_per_component;

    fn k4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn obstruction_text() {
        let g = k4();
        let report = RunReport::new(&g, &color_per_component(&g).unwrap(), 0);
        let text = report.to_text();
        assert!(text.ends_with("s OBSTRUCTION clique\nw 1 2 3 4\n"), "{text}");
        assert_eq!(
            parse_result(&text, 4).unwrap(),
            ClaimedResult::Obstruction { k: 3, obstruction: Obstruction::Clique(vec![0, 1, 2, 3]) }
        );
    }

    #[test]
    fn coloring_both_forms_agree() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let report = RunReport::new(&g, &color_per_component(&g).unwrap(), 5);
        let text = report.to_text();
        assert!(text.contains("s COLORING 2\nv 1 1\nv 2 2\nv 3 1\n"));
        assert_eq!(parse_result(&text, 3).unwrap(), parse_result(&report.to_json(), 3).unwrap());
    }

    #[test]
    fn malformed_text() {
        assert_eq!(parse_result("c nothing\n", 2), Err(ResultParseError::MissingStatus));
        assert!(parse_result("s COLORING 2\nv 1 1\n", 2).is_err());
        assert!(parse_result("s COLORING 2\nv 1 1\nv 1 2\n", 2).is_err());
        assert!(parse_result("s COLORING 2\nv 0 1\n", 1).is_err());
        assert!(parse_result("s OBSTRUCTION star\nw 1\n", 1).is_err());
        assert!(parse_json("{\"n\": 3, \"k\": 2, \"outcome\": \"coloring\", \"colors\": [0, 1]}", 2).is_err());
    }
}
