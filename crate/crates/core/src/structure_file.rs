//! JSON structure files.
//!
//! ```json
//! {"order":2,"table":[[[0],[0]],[[1],[1]]]}
//! ```
//!
//! `table[a][b]` lists the elements of `a∘b`, 0-based and strictly ascending.
//! [`to_json`] writes exactly this compact form, so saving is byte-stable.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergroupoid::Hypergroupoid;
use crate::subset::{Subset, ORDER_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub order: usize,
    pub table: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid structure: {0}")]
    Invalid(String),
}

impl From<&Hypergroupoid> for StructureFile {
    fn from(h: &Hypergroupoid) -> Self {
        let n = h.order();
        StructureFile {
            order: n,
            table: (0..n)
                .map(|a| (0..n).map(|b| h.cell(a, b).iter().collect()).collect())
                .collect(),
        }
    }
}

impl StructureFile {
    /// Checks every invariant of the file format and builds the structure.
    pub fn into_hypergroupoid(self) -> Result<Hypergroupoid, LoadError> {
        let n = self.order;
        if n == 0 || n > ORDER_CAP {
            return Err(LoadError::Invalid(format!(
                "order must be between 1 and {ORDER_CAP}, got {n}"
            )));
        }
        if self.table.len() != n {
            return Err(LoadError::Invalid(format!(
                "table has {} rows, expected {n}",
                self.table.len()
            )));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(LoadError::Invalid(format!(
                    "row {a} has {} cells, expected {n}",
                    row.len()
                )));
            }
            for (b, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(LoadError::Invalid(format!("empty cell ({a},{b})")));
                }
                if let Some(&x) = cell.iter().find(|&&x| x >= n) {
                    return Err(LoadError::Invalid(format!(
                        "cell ({a},{b}) contains {x}, outside 0..{n}"
                    )));
                }
                if cell.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(LoadError::Invalid(format!(
                        "cell ({a},{b}) is not strictly ascending"
                    )));
                }
                cells.push(
                    Subset::from_elements(cell.iter().copied()).expect("checked against order"),
                );
            }
        }
        Ok(Hypergroupoid::new(n, cells).expect("all table invariants checked"))
    }
}

pub fn from_json(text: &str) -> Result<Hypergroupoid, LoadError> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_hypergroupoid()
}

/// Compact single-line JSON, no trailing newline.
pub fn to_json(h: &Hypergroupoid) -> String {
    serde_json::to_string(&StructureFile::from(h)).expect("plain data always serializes")
}

pub fn load(path: impl AsRef<Path>) -> Result<Hypergroupoid, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

/// Writes [`to_json`] followed by a newline.
pub fn save(h: &Hypergroupoid, path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, to_json(h) + "\n")
}
