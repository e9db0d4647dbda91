//! The on-disk system format: a small JSON schema for sparsity patterns.
//!
//! ```json
//! {
//!   "n": 3, "r": 1, "m": 2,
//!   "subsystems": [
//!     { "A": [[0,0,0],[0,0,0],[0,0,0]], "B": [[0],[0],["lam1"]] },
//!     { "A": [[0,0,0],[0,0,"lam2"],[0,0,0]], "B": [["lam3"],[0],[0]] }
//!   ]
//! }
//! ```
//!
//! Each cell is the number `0` (fixed zero), the string `"*"` (anonymous
//! free parameter, auto-named `p{i}_{row}_{col}` with B columns offset by
//! `n`), or a quoted parameter name. Names must be globally unique across
//! all matrices; duplicates are rejected because the analysis only covers
//! independent parameters.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::system::{auto_name, Block, Param, StructuredMatrix, SwitchedSystem, SystemError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error(transparent)]
    System(#[from] SystemError),
}

/// One cell of a pattern: `0`, `"*"`, or a parameter name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Zero(u64),
    Text(String),
}

/// Serialized form of a subsystem pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemPattern {
    #[serde(rename = "A")]
    pub a: Vec<Vec<Cell>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Cell>>,
}

/// The document model: explicit dimensions plus per-subsystem patterns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub subsystems: Vec<SubsystemPattern>,
}

fn schema_err(location: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema {
        location: location.into(),
        message: message.into(),
    }
}

impl SystemDocument {
    /// Validates the document shape and builds the system.
    pub fn into_system(self) -> Result<SwitchedSystem, FormatError> {
        if self.m != self.subsystems.len() {
            return Err(schema_err(
                "subsystems",
                format!("m = {} but {} subsystems given", self.m, self.subsystems.len()),
            ));
        }
        let mut pairs = Vec::with_capacity(self.subsystems.len());
        for (idx, sub) in self.subsystems.iter().enumerate() {
            let i = idx + 1;
            let a = parse_pattern(&sub.a, i, Block::A, self.n, self.n, self.n)?;
            let b = parse_pattern(&sub.b, i, Block::B, self.n, self.r, self.n)?;
            pairs.push((a, b));
        }
        Ok(SwitchedSystem::new(self.n, self.r, pairs)?)
    }

    /// Canonical document for a system; every cell carries its explicit
    /// parameter name, so parsing it back reproduces the system exactly.
    pub fn from_system(sys: &SwitchedSystem) -> SystemDocument {
        let render = |pattern: &StructuredMatrix| -> Vec<Vec<Cell>> {
            (0..pattern.rows())
                .map(|row| {
                    (0..pattern.cols())
                        .map(|col| match pattern.get(row, col) {
                            Some(param) => Cell::Text(param.name.clone()),
                            None => Cell::Zero(0),
                        })
                        .collect()
                })
                .collect()
        };
        SystemDocument {
            n: sys.n(),
            r: sys.r(),
            m: sys.m(),
            subsystems: sys
                .subsystems()
                .iter()
                .map(|sub| SubsystemPattern {
                    a: render(sub.a()),
                    b: render(sub.b()),
                })
                .collect(),
        }
    }
}

fn parse_pattern(
    cells: &[Vec<Cell>],
    subsystem: usize,
    block: Block,
    want_rows: usize,
    want_cols: usize,
    n: usize,
) -> Result<StructuredMatrix, FormatError> {
    let block_name = match block {
        Block::A => "A",
        Block::B => "B",
    };
    let location = |row: Option<usize>| match row {
        Some(row) => format!("subsystem {subsystem}, {block_name}, row {}", row + 1),
        None => format!("subsystem {subsystem}, {block_name}"),
    };
    if cells.len() != want_rows {
        return Err(schema_err(
            location(None),
            format!("has {} rows, expected {}", cells.len(), want_rows),
        ));
    }
    let mut pattern = StructuredMatrix::zeros(want_rows, want_cols);
    for (row, row_cells) in cells.iter().enumerate() {
        if row_cells.len() != want_cols {
            return Err(schema_err(
                location(Some(row)),
                format!("has {} cells, expected {}", row_cells.len(), want_cols),
            ));
        }
        for (col, cell) in row_cells.iter().enumerate() {
            let name = match cell {
                Cell::Zero(0) => continue,
                Cell::Zero(v) => {
                    return Err(schema_err(
                        location(Some(row)),
                        format!("cell {} is {v}; cells must be 0, \"*\", or a name", col + 1),
                    ))
                }
                Cell::Text(s) if s == "*" => auto_name(subsystem, block, row, col, n),
                Cell::Text(s) if s.is_empty() => {
                    return Err(schema_err(
                        location(Some(row)),
                        format!("cell {} is an empty string", col + 1),
                    ))
                }
                Cell::Text(s) => s.clone(),
            };
            pattern
                .set_free(row, col, Param::subsystem(name, subsystem, block))
                .map_err(FormatError::System)?;
        }
    }
    Ok(pattern)
}

/// Parses a system document from JSON text.
pub fn parse_system(text: &str) -> Result<SwitchedSystem, FormatError> {
    let doc: SystemDocument = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.into_system()
}

/// Renders a system as canonical pretty-printed JSON. Parsing the output
/// reproduces the system exactly.
pub fn render_system(sys: &SwitchedSystem) -> String {
    let doc = SystemDocument::from_system(sys);
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "n": 3, "r": 1, "m": 2,
        "subsystems": [
            { "A": [[0,0,0],[0,0,0],[0,0,0]], "B": [[0],[0],["lam1"]] },
            { "A": [[0,0,0],[0,0,"lam2"],[0,0,0]], "B": [["lam3"],[0],[0]] }
        ]
    }"#;

    #[test]
    fn parses_sample_document() {
        let sys = parse_system(SAMPLE).unwrap();
        assert_eq!((sys.n(), sys.r(), sys.m()), (3, 1, 2));
        assert_eq!(sys.params().count(), 3);
        assert_eq!(
            sys.subsystems()[1].a().get(1, 2).unwrap().name,
            "lam2"
        );
    }

    #[test]
    fn roundtrip_is_identity() {
        let sys = parse_system(SAMPLE).unwrap();
        let rendered = render_system(&sys);
        assert_eq!(parse_system(&rendered).unwrap(), sys);
    }

    #[test]
    fn star_cells_get_auto_names() {
        let text = r#"{"n":2,"r":1,"m":1,"subsystems":[{"A":[["*",0],[0,0]],"B":[[0],["*"]]}]}"#;
        let sys = parse_system(text).unwrap();
        let names: Vec<_> = sys.params().map(|p| p.name.clone()).collect();
        assert_eq!(names, vec!["p1_1_1", "p1_2_3"]);
    }

    #[test]
    fn wrong_row_length_reports_location() {
        let text = r#"{"n":2,"r":1,"m":1,"subsystems":[{"A":[[0,0,0],[0,0]],"B":[[0],[0]]}]}"#;
        let err = parse_system(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("subsystem 1, A, row 1"), "got {msg}");
        assert!(msg.contains("expected 2"), "got {msg}");
    }

    #[test]
    fn duplicate_name_rejected() {
        let text = r#"{"n":2,"r":1,"m":2,"subsystems":[
            {"A":[[0,0],[0,0]],"B":[["lam1"],[0]]},
            {"A":[[0,0],[0,0]],"B":[["lam1"],[0]]}
        ]}"#;
        match parse_system(text).unwrap_err() {
            FormatError::System(SystemError::DuplicateParameter { name }) => {
                assert_eq!(name, "lam1");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_system("{ \"n\": 3,").unwrap_err();
        assert!(matches!(err, FormatError::Json { line: 1, .. }));
    }

    #[test]
    fn nonzero_number_rejected() {
        let text = r#"{"n":1,"r":1,"m":1,"subsystems":[{"A":[[2]],"B":[["x"]]}]}"#;
        let msg = parse_system(text).unwrap_err().to_string();
        assert!(msg.contains("cells must be 0"), "got {msg}");
    }

    #[test]
    fn m_mismatch_rejected() {
        let text = r#"{"n":1,"r":1,"m":2,"subsystems":[{"A":[[0]],"B":[["x"]]}]}"#;
        let msg = parse_system(text).unwrap_err().to_string();
        assert!(msg.contains("m = 2 but 1 subsystems"), "got {msg}");
    }
}
