//! Flat-file formats: labeled matrices as JSON documents, state vectors as
//! JSON arrays of amplitudes. Serialization goes through serde_json, whose
//! float printing is shortest-round-trip, so a document written and re-read
//! reproduces every entry bit for bit.

use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use qschur_core::matrix::LabeledMatrix;
use qschur_core::{Error, QParam};

/// Tag for the basis conventions baked into every emitted matrix: shapes in
/// descending lexicographic order, tableaux ordered by their row-reading
/// words, Q varying slower than P inside a shape block, words big-endian
/// with the first letter most significant.
pub const BASIS_ORDER: &str = "desc-lex-shapes/reading-word-tableaux/v1";

/// `q` as its document tag: `zero`, `infinity`, or a decimal with 17
/// significant digits (enough to reparse the exact f64).
pub fn q_tag(q: &QParam<f64>) -> String {
    match q {
        QParam::Zero => "zero".to_string(),
        QParam::Infinity => "infinity".to_string(),
        QParam::Finite(v) => format!("{v:.16e}"),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    pub n: usize,
    pub d: usize,
    pub q: String,
    /// Source shape, present only on Pieri-transform documents.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub basis_order: String,
}

/// Matrix payload: dense row-major, or `(row, col, value)` triples with
/// exact zeros omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Entries {
    Dense(Vec<f64>),
    Sparse(Vec<(usize, usize, f64)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Dense,
    Sparse,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub metadata: Metadata,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Entries,
}

impl MatrixDocument {
    pub fn from_matrix(metadata: Metadata, m: &LabeledMatrix<f64>, format: Format) -> Self {
        let entries = match format {
            Format::Dense => Entries::Dense(m.data.iter().copied().collect()),
            Format::Sparse => Entries::Sparse(
                m.data
                    .indexed_iter()
                    .filter(|&(_, &v)| v != 0.0)
                    .map(|((r, c), &v)| (r, c, v))
                    .collect(),
            ),
        };
        MatrixDocument {
            metadata,
            row_labels: m.row_labels.clone(),
            col_labels: m.col_labels.clone(),
            entries,
        }
    }

    /// Rebuilds the labeled matrix, checking the payload against the label
    /// counts.
    pub fn to_matrix(&self) -> Result<LabeledMatrix<f64>, Error> {
        let (rows, cols) = (self.row_labels.len(), self.col_labels.len());
        let mut data = ndarray::Array2::zeros((rows, cols));
        match &self.entries {
            Entries::Dense(flat) => {
                if flat.len() != rows * cols {
                    return Err(Error::DimensionMismatch(format!(
                        "{} dense entries for a {rows}×{cols} document",
                        flat.len()
                    )));
                }
                for (k, &v) in flat.iter().enumerate() {
                    data[[k / cols, k % cols]] = v;
                }
            }
            Entries::Sparse(triples) => {
                for &(r, c, v) in triples {
                    if r >= rows || c >= cols {
                        return Err(Error::DimensionMismatch(format!(
                            "sparse entry ({r}, {c}) outside a {rows}×{cols} document"
                        )));
                    }
                    data[[r, c]] = v;
                }
            }
        }
        LabeledMatrix::new(self.row_labels.clone(), self.col_labels.clone(), data)
    }
}

/// Reads a state vector: a JSON array of decimals.
pub fn read_state(path: &Path) -> Result<Vec<f64>, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read state file {}: {e}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}
