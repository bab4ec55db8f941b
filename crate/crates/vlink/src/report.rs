//! Aggregated invariants for one diagram, with JSON and CSV renderings.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::adequacy::{
    adequacy_report, classicality_obstruction_with_limit, euler_characteristic, Classicality,
};
use crate::bracket::{bracket_with_limit, kmt_bound, BracketError};
use crate::codec::{self, CodecError};
use crate::diagram::Diagram;
use crate::laurent::LaurentPoly;

/// Everything the CLI reports for one diagram. Field names are the stable
/// JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub c: usize,
    pub virtual_count: usize,
    pub free_loops: u32,
    #[serde(rename = "comp_sA")]
    pub comp_s_a: usize,
    #[serde(rename = "comp_sB")]
    pub comp_s_b: usize,
    pub euler_char: i64,
    pub kmt_bound: i64,
    pub bracket: LaurentPoly,
    pub span: u64,
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub adequate: bool,
    pub pseudo_adequate: bool,
    pub classicality: Classicality,
}

impl InvariantReport {
    pub fn compute(d: &Diagram, max_crossings: u32) -> Result<Self, BracketError> {
        let bracket = bracket_with_limit(d, max_crossings)?;
        let verdict = classicality_obstruction_with_limit(d, max_crossings)?;
        let adequacy = adequacy_report(d);
        Ok(Self {
            c: d.real_crossing_count(),
            virtual_count: d.virtual_crossing_count(),
            free_loops: d.free_loops(),
            comp_s_a: d.splice(&d.state_all_a())?.component_count(),
            comp_s_b: d.splice(&d.state_all_b())?.component_count(),
            euler_char: euler_characteristic(d),
            kmt_bound: kmt_bound(d),
            bracket,
            span: verdict.span,
            a_adequate: adequacy.a_adequate,
            b_adequate: adequacy.b_adequate,
            adequate: adequacy.adequate,
            pseudo_adequate: adequacy.pseudo_adequate,
            classicality: verdict.verdict,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "c:               {}", self.c);
        let _ = writeln!(out, "virtual_count:   {}", self.virtual_count);
        let _ = writeln!(out, "free_loops:      {}", self.free_loops);
        let _ = writeln!(out, "comp_sA:         {}", self.comp_s_a);
        let _ = writeln!(out, "comp_sB:         {}", self.comp_s_b);
        let _ = writeln!(out, "euler_char:      {}", self.euler_char);
        let _ = writeln!(out, "kmt_bound:       {}", self.kmt_bound);
        let _ = writeln!(out, "bracket:         {}", self.bracket);
        let _ = writeln!(out, "span:            {}", self.span);
        let _ = writeln!(out, "a_adequate:      {}", self.a_adequate);
        let _ = writeln!(out, "b_adequate:      {}", self.b_adequate);
        let _ = writeln!(out, "adequate:        {}", self.adequate);
        let _ = writeln!(out, "pseudo_adequate: {}", self.pseudo_adequate);
        let _ = writeln!(out, "classicality:    {:?}", self.classicality);
        out
    }

    /// Fixed CSV column order (after the leading `file` column).
    pub const CSV_COLUMNS: [&'static str; 15] = [
        "file",
        "c",
        "virtual_count",
        "free_loops",
        "comp_sA",
        "comp_sB",
        "euler_char",
        "kmt_bound",
        "span",
        "a_adequate",
        "b_adequate",
        "adequate",
        "pseudo_adequate",
        "classicality",
        "bracket",
    ];

    pub fn csv_record(&self, file: &str) -> Vec<String> {
        vec![
            file.to_string(),
            self.c.to_string(),
            self.virtual_count.to_string(),
            self.free_loops.to_string(),
            self.comp_s_a.to_string(),
            self.comp_s_b.to_string(),
            self.euler_char.to_string(),
            self.kmt_bound.to_string(),
            self.span.to_string(),
            self.a_adequate.to_string(),
            self.b_adequate.to_string(),
            self.adequate.to_string(),
            self.pseudo_adequate.to_string(),
            format!("{:?}", self.classicality),
            self.bracket.to_string(),
        ]
    }
}

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: CodecError },
    #[error("{path}: {source}")]
    Compute { path: PathBuf, source: BracketError },
}

/// Computes one CSV row per `.vlk` file in `dir`, sorted by file name. The
/// output is deterministic: identical inputs give byte-identical CSV.
pub fn batch_csv(dir: &Path, max_crossings: u32) -> Result<String, BatchError> {
    let io_err = |source| BatchError::Io { path: dir.to_path_buf(), source };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err)?
        .collect::<Result<Vec<_>, _>>()
        .map_err(io_err)?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|p| p.extension().is_some_and(|e| e == "vlk"))
        .collect();
    files.sort();

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(InvariantReport::CSV_COLUMNS)
        .expect("in-memory write");
    for path in files {
        let text = fs::read_to_string(&path)
            .map_err(|source| BatchError::Io { path: path.clone(), source })?;
        let diagram = codec::parse(&text)
            .map_err(|source| BatchError::Parse { path: path.clone(), source })?;
        let report = InvariantReport::compute(&diagram, max_crossings)
            .map_err(|source| BatchError::Compute { path: path.clone(), source })?;
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        writer.write_record(report.csv_record(&name)).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}
