//! On-disk formats and report rendering.
//!
//! The canonical format is a JSON frame file whose entries are decimal
//! strings: entries routinely exceed 64-bit ranges and round trips must be
//! bit exact. A plain CSV form (one matrix row per line, integer cells) is
//! accepted and produced for interoperability.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use intframe::analysis::FrameReport;
use intframe::{FrameMatrix, Int};

pub const FORMAT_TAG: &str = "entif-frame-v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub format: String,
    pub dim: usize,
    pub count: usize,
    /// Row-major decimal strings.
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Metadata {
    pub recipe: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
}

impl FrameFile {
    pub fn from_matrix(m: &FrameMatrix, metadata: Option<Metadata>) -> Self {
        let entries = (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        Self {
            format: FORMAT_TAG.to_string(),
            dim: m.rows(),
            count: m.cols(),
            entries,
            metadata,
        }
    }

    pub fn to_matrix(&self) -> Result<FrameMatrix, String> {
        if self.format != FORMAT_TAG {
            return Err(format!(
                "unsupported format tag {:?} (expected {FORMAT_TAG:?})",
                self.format
            ));
        }
        if self.entries.len() != self.dim {
            return Err(format!(
                "entry rows ({}) do not match dim ({})",
                self.entries.len(),
                self.dim
            ));
        }
        let mut rows = Vec::with_capacity(self.dim);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.count {
                return Err(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.count
                ));
            }
            let parsed: Result<Vec<Int>, String> = row
                .iter()
                .map(|s| Int::from_str(s.trim()).map_err(|e| format!("row {i}: {e} ({s:?})")))
                .collect();
            rows.push(parsed?);
        }
        FrameMatrix::from_rows(rows).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("frame files serialize");
        text.push('\n');
        text
    }
}

pub fn matrix_to_csv(m: &FrameMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn csv_to_matrix(text: &str) -> Result<FrameMatrix, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed: Result<Vec<Int>, String> = line
            .split(',')
            .map(|cell| {
                Int::from_str(cell.trim()).map_err(|e| format!("line {}: {e} ({cell:?})", i + 1))
            })
            .collect();
        rows.push(parsed?);
    }
    if rows.is_empty() {
        return Err("no rows found".to_string());
    }
    FrameMatrix::from_rows(rows).map_err(|e| e.to_string())
}

/// Read a frame from a JSON frame file or a CSV file, deciding by extension
/// (anything that is not `.csv` is treated as JSON).
pub fn read_frame(path: &Path) -> Result<FrameMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        csv_to_matrix(&text)
    } else {
        let file: FrameFile =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        file.to_matrix()
    }
}

/// One-line human report: dimensions, tight value or eigenvalue diagonal,
/// norm data, and the spark when it was computed.
pub fn report_line(r: &FrameReport) -> String {
    let join = |xs: &[Int]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut s = format!(
        "dim={} count={} frame={}",
        r.dim,
        r.count,
        if r.is_frame { "yes" } else { "no" }
    );
    match &r.tight_value {
        Some(t) => s.push_str(&format!(" tight={t}")),
        None => s.push_str(&format!(" eigen=[{}]", join(&r.eigen_diagonal))),
    }
    match &r.equal_norm_sq {
        Some(v) => s.push_str(&format!(" norm2={v}")),
        None => s.push_str(&format!(" norms2=[{}]", join(&r.column_norms_sq))),
    }
    if let Some(d) = &r.angle_value {
        s.push_str(&format!(" angle={d}"));
    }
    if let Some(k) = r.spark {
        s.push_str(&format!(" spark={k}"));
    }
    s
}

/// Machine-readable report; arbitrary-precision values are decimal strings.
#[derive(Serialize)]
struct ReportJson {
    dim: usize,
    count: usize,
    rank: usize,
    is_frame: bool,
    rows_orthogonal: bool,
    eigen_diagonal: Vec<String>,
    is_tight: bool,
    tight_value: Option<String>,
    column_norms_sq: Vec<String>,
    is_equal_norm: bool,
    equal_norm_sq: Option<String>,
    is_equiangular_signed: bool,
    is_equiangular_modulus: bool,
    angle_value: Option<String>,
    spark: Option<usize>,
}

pub fn report_json(r: &FrameReport) -> String {
    let strings = |xs: &[Int]| xs.iter().map(|x| x.to_string()).collect();
    let view = ReportJson {
        dim: r.dim,
        count: r.count,
        rank: r.rank,
        is_frame: r.is_frame,
        rows_orthogonal: r.rows_orthogonal,
        eigen_diagonal: strings(&r.eigen_diagonal),
        is_tight: r.is_tight,
        tight_value: r.tight_value.as_ref().map(|x| x.to_string()),
        column_norms_sq: strings(&r.column_norms_sq),
        is_equal_norm: r.is_equal_norm,
        equal_norm_sq: r.equal_norm_sq.as_ref().map(|x| x.to_string()),
        is_equiangular_signed: r.is_equiangular_signed,
        is_equiangular_modulus: r.is_equiangular_modulus,
        angle_value: r.angle_value.as_ref().map(|x| x.to_string()),
        spark: r.spark,
    };
    let mut text = serde_json::to_string_pretty(&view).expect("reports serialize");
    text.push('\n');
    text
}
