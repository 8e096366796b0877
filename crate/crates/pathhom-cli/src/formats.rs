//! Digraph input formats and the machine-readable report schema.
//!
//! Two digraph formats are accepted and auto-detected: a line-oriented text
//! format (`vertex <label>` / `arrow <tail> <head>`, `#` comments) and a
//! structured JSON document with `"vertices"` and `"arrows"` lists. Both
//! preserve vertex declaration order, which fixes basis ordering downstream.

use pathhom::digraph::{Digraph, DigraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error(transparent)]
    Validation(#[from] DigraphError),
}

/// A parsed digraph document: the validated digraph plus optional metadata.
#[derive(Debug, Clone)]
pub struct DigraphDocument {
    pub digraph: Digraph,
    pub name: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDigraph {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<String>,
    arrows: Vec<[String; 2]>,
}

/// Parses either supported format, auto-detected by the leading character.
pub fn parse_digraph(input: &str) -> Result<DigraphDocument, ParseError> {
    match input.trim_start().chars().next() {
        Some('{') => parse_json(input),
        _ => parse_text(input),
    }
}

fn parse_text(input: &str) -> Result<DigraphDocument, ParseError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String)> = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut tokens = Vec::new();
        let mut col = 0usize;
        for tok in content.split_whitespace() {
            // Column of the token's first byte, 1-based.
            let at = content[col..].find(tok).map(|p| col + p + 1).unwrap_or(col + 1);
            tokens.push((tok, at));
            col = at - 1 + tok.len();
        }
        match tokens.as_slice() {
            [("vertex", _), (label, _)] => vertices.push((*label).to_owned()),
            [("arrow", _), (t, _), (h, _)] => arrows.push(((*t).to_owned(), (*h).to_owned())),
            [(other, column), ..] if *other != "vertex" && *other != "arrow" => {
                return Err(ParseError::Syntax {
                    line,
                    column: *column,
                    message: format!("expected `vertex` or `arrow`, found `{other}`"),
                });
            }
            [(kw, column), rest @ ..] => {
                let want = if *kw == "vertex" { 1 } else { 2 };
                return Err(ParseError::Syntax {
                    line,
                    column: *column,
                    message: format!("`{kw}` takes {want} argument(s), found {}", rest.len()),
                });
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }
    let digraph = Digraph::new(&vertices, &arrows)?;
    Ok(DigraphDocument { digraph, name: None })
}

fn parse_json(input: &str) -> Result<DigraphDocument, ParseError> {
    let doc: JsonDigraph = serde_json::from_str(input).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let arrows: Vec<(String, String)> =
        doc.arrows.iter().map(|[t, h]| (t.clone(), h.clone())).collect();
    let digraph = Digraph::new(&doc.vertices, &arrows)?;
    Ok(DigraphDocument { digraph, name: doc.name })
}

/// Structured form of a digraph, used when embedding digraphs in reports.
pub fn digraph_to_json(g: &Digraph, name: Option<&str>) -> String {
    let doc = JsonDigraph {
        name: name.map(str::to_owned),
        vertices: g.labels().to_vec(),
        arrows: g
            .arrows()
            .iter()
            .map(|&(t, h)| [g.label(t).to_owned(), g.label(h).to_owned()])
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("digraph serializes")
}

/// One degree of a homology report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub n: usize,
    pub betti: usize,
    /// Invariant factors above one, decimal strings (exact at any size).
    pub torsion: Vec<String>,
    pub basis_rank: usize,
    pub boundary_rank: usize,
}

/// The stable machine-readable report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theory: String,
    pub coefficients: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub from: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub to: Option<String>,
    pub reduced: bool,
    pub degrees: Vec<DegreeRecord>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("theory: {}", self.theory));
        if let Some(a) = &self.from {
            out.push_str(&format!("  from: {a}"));
        }
        if let Some(b) = &self.to {
            out.push_str(&format!("  to: {b}"));
        }
        out.push_str(&format!("  coefficients: {}", self.coefficients));
        if self.reduced {
            out.push_str("  (reduced)");
        }
        out.push('\n');
        out.push_str("degree  betti  torsion       basis_rank  boundary_rank\n");
        for d in &self.degrees {
            let torsion =
                if d.torsion.is_empty() { "-".to_owned() } else { d.torsion.join(",") };
            out.push_str(&format!(
                "{:<6}  {:<5}  {:<12}  {:<10}  {}\n",
                d.n, d.betti, torsion, d.basis_rank, d.boundary_rank
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_parse_roundtrip() {
        let src = "# a square\nvertex 0\nvertex 1\nvertex 2\nvertex 3\narrow 0 1\narrow 0 2\narrow 1 3\narrow 2 3\n";
        let doc = parse_digraph(src).unwrap();
        assert_eq!(doc.digraph, Digraph::n_cube(2));
        assert_eq!(doc.digraph.to_text(), src.lines().skip(1).collect::<Vec<_>>().join("\n") + "\n");
    }

    #[test]
    fn text_parse_errors_carry_location() {
        let err = parse_digraph("vertex 0\nedge 0 1\n").unwrap_err();
        match err {
            ParseError::Syntax { line, column, .. } => {
                assert_eq!((line, column), (2, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_digraph("vertex 0\nvertex 1\narrow 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        let err = parse_digraph("vertex 0\narrow 0 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Validation(DigraphError::LoopArrow(_))));
    }

    #[test]
    fn json_parse() {
        let src = r#"{"vertices":["0","1"],"arrows":[["0","1"]]}"#;
        let doc = parse_digraph(src).unwrap();
        assert_eq!(doc.digraph.arrow_count(), 1);
        let round = parse_digraph(&digraph_to_json(&doc.digraph, None)).unwrap();
        assert_eq!(round.digraph, doc.digraph);
    }

    #[test]
    fn report_json_roundtrip() {
        let report = Report {
            theory: "cluster".into(),
            coefficients: "Z".into(),
            from: Some("0".into()),
            to: Some("3".into()),
            reduced: false,
            degrees: vec![DegreeRecord {
                n: 2,
                betti: 1,
                torsion: vec!["2".into()],
                basis_rank: 1,
                boundary_rank: 0,
            }],
        };
        assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
    }
}
