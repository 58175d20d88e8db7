//! The machine file format: one JSON object per machine.
//!
//! ```json
//! {"version": 1, "kind": "moore", "input": ["0","1"], "output": ["0","1"],
//!  "states": ["q0","q1"], "delta": {"q0": {"0": "q0", "1": "q1"}, ...},
//!  "out": {"q0": "0", "q1": "1"}}
//! ```
//!
//! A Mealy `out` table is keyed by state and then letter, like `delta`.

use std::collections::BTreeMap;
use std::path::Path;

use moore_core::composition::Cell;
use moore_core::machine::{validate_mealy, validate_moore};
use moore_core::{Kind, RawMachine, RawOutput};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {found}; expected {FORMAT_VERSION}")]
    VersionMismatch { found: String },
    #[error("invalid machine: {0}")]
    Invalid(#[from] moore_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileKind {
    Mealy,
    Moore,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OutTable {
    PerLetter(BTreeMap<String, BTreeMap<String, String>>),
    PerState(BTreeMap<String, String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineFile {
    pub version: u64,
    pub kind: FileKind,
    pub input: Vec<String>,
    pub output: Vec<String>,
    pub states: Vec<String>,
    pub delta: BTreeMap<String, BTreeMap<String, String>>,
    pub out: OutTable,
}

impl MachineFile {
    pub fn to_raw(&self) -> RawMachine {
        RawMachine {
            input: self.input.clone(),
            output: self.output.clone(),
            states: self.states.clone(),
            delta: self.delta.clone(),
            out: match &self.out {
                OutTable::PerLetter(t) => RawOutput::PerLetter(t.clone()),
                OutTable::PerState(t) => RawOutput::PerState(t.clone()),
            },
        }
    }

    pub fn from_cell(cell: &Cell) -> Self {
        let (kind, raw) = match cell {
            Cell::Mealy(m) => (FileKind::Mealy, m.to_raw()),
            Cell::Moore(m) => (FileKind::Moore, m.to_raw()),
        };
        MachineFile {
            version: FORMAT_VERSION,
            kind,
            input: raw.input,
            output: raw.output,
            states: raw.states,
            delta: raw.delta,
            out: match raw.out {
                RawOutput::PerLetter(t) => OutTable::PerLetter(t),
                RawOutput::PerState(t) => OutTable::PerState(t),
            },
        }
    }

    /// Validates the tables against the declared kind.
    pub fn validate(&self) -> Result<Cell, FormatError> {
        let raw = self.to_raw();
        Ok(match self.kind {
            FileKind::Mealy => validate_mealy(&raw)?.into(),
            FileKind::Moore => validate_moore(&raw)?.into(),
        })
    }
}

impl From<Kind> for FileKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Mealy => FileKind::Mealy,
            Kind::Moore => FileKind::Moore,
        }
    }
}

fn syntax(e: serde_json::Error) -> FormatError {
    FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses a machine file without validating its tables.
pub fn parse_machine_file(text: &str) -> Result<MachineFile, FormatError> {
    // the version decides how the rest is read, so check it first
    let value: serde_json::Value = serde_json::from_str(text).map_err(syntax)?;
    match value.get("version") {
        Some(v) if v.as_u64() == Some(FORMAT_VERSION) => {}
        Some(v) => return Err(FormatError::VersionMismatch { found: v.to_string() }),
        None => {
            return Err(FormatError::VersionMismatch {
                found: "none".into(),
            })
        }
    }
    // parse the text again so that field errors carry positions
    serde_json::from_str(text).map_err(syntax)
}

pub fn serialize(file: &MachineFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn serialize_cell(cell: &Cell) -> String {
    serialize(&MachineFile::from_cell(cell))
}

pub fn read_machine(path: &Path) -> Result<Cell, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_machine_file(&text)?.validate()
}

pub fn write_machine(path: &Path, cell: &Cell) -> Result<(), FormatError> {
    std::fs::write(path, serialize_cell(cell)).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
