//! Report assembly and rendering.
//!
//! JSON and CSV carry full `f64` precision (shortest round-trip form);
//! markdown tables round to two decimals. Rows are sorted before rendering,
//! and metadata holds only file names and digests, so identical inputs
//! always render to identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::corpus::CollectionSpec;
use crate::metrics::{Band, DominanceRow, ProfileRow};
use crate::stats::TestResult;

/// t-test p below this earns a `*`; anything else gets `†`.
pub const MARKER_ALPHA: f64 = 0.001;
pub const SIGNIFICANT_MARK: &str = "*";
pub const NOT_SIGNIFICANT_MARK: &str = "†";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            other => Err(format!(
                "unknown format `{other}` (expected json, csv or md)"
            )),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(name: impl Into<String>, bytes: &[u8]) -> Self {
        Self {
            name: name.into(),
            sha256: sha256_hex(bytes),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lexicon: Option<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<CollectionSpec>,
    pub inputs: Vec<InputDigest>,
}

impl Metadata {
    pub fn new(command: &str) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            lexicon: None,
            spec: None,
            inputs: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceReportRow {
    pub label: String,
    pub coverage_target: f64,
    pub coverage_control: f64,
    pub dominance: Option<f64>,
    pub band: Band,
    /// Inside the [0.8, 1.2] band; kept for auditability.
    pub filtered: bool,
}

impl From<DominanceRow> for DominanceReportRow {
    fn from(row: DominanceRow) -> Self {
        Self {
            filtered: row.band == Band::Filtered,
            label: row.label,
            coverage_target: row.coverage_target,
            coverage_control: row.coverage_control,
            dominance: row.dominance,
            band: row.band,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceReport {
    pub metadata: Metadata,
    pub target: String,
    pub control: String,
    pub target_tokens: u64,
    pub control_tokens: u64,
    pub rows: Vec<DominanceReportRow>,
}

/// t-test and F-test of one collection's index against the control.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub t: f64,
    pub t_df: f64,
    pub t_p: f64,
    pub marker: String,
    pub f: Option<f64>,
    pub f_df: Option<(f64, f64)>,
    pub f_p: Option<f64>,
}

impl Comparison {
    pub fn new(t: &TestResult, f: Option<&TestResult>) -> Self {
        Self {
            t: t.statistic,
            t_df: t.df.0,
            t_p: t.p_value,
            marker: marker_for(t.p_value).to_string(),
            f: f.map(|r| r.statistic),
            f_df: f.map(|r| (r.df.0, r.df.1.unwrap_or(f64::NAN))),
            f_p: f.map(|r| r.p_value),
        }
    }
}

pub fn marker_for(p: f64) -> &'static str {
    if p < MARKER_ALPHA {
        SIGNIFICANT_MARK
    } else {
        NOT_SIGNIFICANT_MARK
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadabilityRow {
    pub dataset: String,
    pub n: usize,
    pub skipped: usize,
    pub fog_mean: f64,
    pub fog_sd: f64,
    pub flesch_mean: f64,
    pub flesch_sd: f64,
    /// Absent on the control row.
    pub fog_vs_control: Option<Comparison>,
    pub flesch_vs_control: Option<Comparison>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadabilityReport {
    pub metadata: Metadata,
    pub control: String,
    pub rows: Vec<ReadabilityRow>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileReport {
    pub metadata: Metadata,
    pub abstract_name: String,
    pub words: usize,
    pub sentences: usize,
    pub fog: f64,
    pub flesch: f64,
    pub met: usize,
    pub total: usize,
    pub fraction_met: f64,
    pub rows: Vec<ProfileRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Dominance(DominanceReport),
    Readability(ReadabilityReport),
    Profile(ProfileReport),
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Md => self.to_markdown(),
        }
    }

    fn metadata(&self) -> &Metadata {
        match self {
            Report::Dominance(r) => &r.metadata,
            Report::Readability(r) => &r.metadata,
            Report::Profile(r) => &r.metadata,
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        let meta = serde_json::to_string(self.metadata()).expect("metadata serializes");
        writeln!(out, "# metadata: {meta}").unwrap();
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        match self {
            Report::Dominance(r) => {
                writeln!(out, "# target: {}", r.target).unwrap();
                writeln!(out, "# control: {}", r.control).unwrap();
                w.write_record([
                    "label",
                    "coverage_target",
                    "coverage_control",
                    "dominance",
                    "band",
                    "filtered",
                ])
                .unwrap();
                for row in &r.rows {
                    w.write_record([
                        row.label.clone(),
                        num(row.coverage_target),
                        num(row.coverage_control),
                        opt(row.dominance),
                        row.band.to_string(),
                        row.filtered.to_string(),
                    ])
                    .unwrap();
                }
            }
            Report::Readability(r) => {
                writeln!(out, "# control: {}", r.control).unwrap();
                for warning in &r.warnings {
                    writeln!(out, "# warning: {warning}").unwrap();
                }
                let mut header: Vec<String> = [
                    "dataset",
                    "n",
                    "skipped",
                    "fog_mean",
                    "fog_sd",
                    "flesch_mean",
                    "flesch_sd",
                ]
                .map(String::from)
                .to_vec();
                for index in ["fog", "flesch"] {
                    for col in ["t", "t_df", "t_p", "marker", "f", "f_df1", "f_df2", "f_p"] {
                        header.push(format!("{index}_{col}"));
                    }
                }
                w.write_record(&header).unwrap();
                for row in &r.rows {
                    let mut rec = vec![
                        row.dataset.clone(),
                        row.n.to_string(),
                        row.skipped.to_string(),
                        num(row.fog_mean),
                        num(row.fog_sd),
                        num(row.flesch_mean),
                        num(row.flesch_sd),
                    ];
                    for cmp in [&row.fog_vs_control, &row.flesch_vs_control] {
                        match cmp {
                            Some(c) => rec.extend([
                                num(c.t),
                                num(c.t_df),
                                num(c.t_p),
                                c.marker.clone(),
                                opt(c.f),
                                opt(c.f_df.map(|d| d.0)),
                                opt(c.f_df.map(|d| d.1)),
                                opt(c.f_p),
                            ]),
                            None => rec.extend(std::iter::repeat_n(String::new(), 8)),
                        }
                    }
                    w.write_record(&rec).unwrap();
                }
            }
            Report::Profile(r) => {
                writeln!(out, "# abstract: {}", r.abstract_name).unwrap();
                writeln!(out, "# words: {}", r.words).unwrap();
                writeln!(out, "# sentences: {}", r.sentences).unwrap();
                writeln!(out, "# fog: {}", num(r.fog)).unwrap();
                writeln!(out, "# flesch: {}", num(r.flesch)).unwrap();
                writeln!(out, "# met: {}/{}", r.met, r.total).unwrap();
                writeln!(out, "# fraction_met: {}", num(r.fraction_met)).unwrap();
                w.write_record([
                    "label",
                    "target",
                    "coverage_target",
                    "coverage_control",
                    "dominance",
                    "band",
                    "met",
                ])
                .unwrap();
                for row in &r.rows {
                    w.write_record([
                        row.row.label.clone(),
                        format!("{:?}", row.target),
                        num(row.row.coverage_target),
                        num(row.row.coverage_control),
                        opt(row.row.dominance),
                        row.row.band.to_string(),
                        row.met.to_string(),
                    ])
                    .unwrap();
                }
            }
        }
        out.push_str(&String::from_utf8(w.into_inner().unwrap()).unwrap());
        out
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        let meta = self.metadata();
        match self {
            Report::Dominance(r) => {
                writeln!(out, "# Dominance: {} vs {}\n", r.target, r.control).unwrap();
                write_meta(&mut out, meta);
                writeln!(
                    out,
                    "Tokens: target {}, control {}\n",
                    r.target_tokens, r.control_tokens
                )
                .unwrap();
                out.push_str(
                    "| Class | Coverage (target) | Coverage (control) | Dominance | Band |\n",
                );
                out.push_str("|---|---:|---:|---:|---|\n");
                for row in &r.rows {
                    writeln!(
                        out,
                        "| {} | {:.4} | {:.4} | {} | {} |",
                        row.label,
                        row.coverage_target,
                        row.coverage_control,
                        fixed2(row.dominance),
                        row.band
                    )
                    .unwrap();
                }
            }
            Report::Readability(r) => {
                writeln!(out, "# Readability vs {}\n", r.control).unwrap();
                write_meta(&mut out, meta);
                out.push_str(
                    "| Dataset | n | Fog μ | Fog σ | Flesch μ | Flesch σ | Fog t (p) | Flesch t (p) | Fog F (p) | Flesch F (p) |\n",
                );
                out.push_str("|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n");
                for row in &r.rows {
                    let t_cell = |c: &Option<Comparison>| match c {
                        Some(c) => format!("{:.2} ({:.2e})", c.t, c.t_p),
                        None => "—".to_string(),
                    };
                    let f_cell = |c: &Option<Comparison>| match c {
                        Some(Comparison {
                            f: Some(f),
                            f_p: Some(p),
                            ..
                        }) => format!("{f:.2} ({p:.2e})"),
                        _ => "—".to_string(),
                    };
                    fn mark(c: &Option<Comparison>) -> &str {
                        c.as_ref().map_or("", |c| c.marker.as_str())
                    }
                    writeln!(
                        out,
                        "| {} | {} | {:.2}{} | {:.2} | {:.2}{} | {:.2} | {} | {} | {} | {} |",
                        row.dataset,
                        row.n,
                        row.fog_mean,
                        mark(&row.fog_vs_control),
                        row.fog_sd,
                        row.flesch_mean,
                        mark(&row.flesch_vs_control),
                        row.flesch_sd,
                        t_cell(&row.fog_vs_control),
                        t_cell(&row.flesch_vs_control),
                        f_cell(&row.fog_vs_control),
                        f_cell(&row.flesch_vs_control),
                    )
                    .unwrap();
                }
                writeln!(
                    out,
                    "\n`{SIGNIFICANT_MARK}` Welch t-test p < {MARKER_ALPHA} against the control; `{NOT_SIGNIFICANT_MARK}` otherwise."
                )
                .unwrap();
                for warning in &r.warnings {
                    writeln!(out, "\n> warning: {warning}").unwrap();
                }
            }
            Report::Profile(r) => {
                writeln!(out, "# Profile: {}\n", r.abstract_name).unwrap();
                write_meta(&mut out, meta);
                writeln!(out, "- Words: {}, sentences: {}", r.words, r.sentences).unwrap();
                writeln!(out, "- Fog index: {:.2}", r.fog).unwrap();
                writeln!(out, "- Flesch index: {:.2}", r.flesch).unwrap();
                writeln!(
                    out,
                    "- Classes met: {}/{} ({:.1}%)\n",
                    r.met,
                    r.total,
                    100.0 * r.fraction_met
                )
                .unwrap();
                out.push_str("| Class | Target | Dominance | Band | Met |\n");
                out.push_str("|---|---|---:|---|---|\n");
                for row in &r.rows {
                    writeln!(
                        out,
                        "| {} | {:?} | {} | {} | {} |",
                        row.row.label,
                        row.target,
                        fixed2(row.row.dominance),
                        row.row.band,
                        if row.met { "yes" } else { "no" }
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

fn write_meta(out: &mut String, meta: &Metadata) {
    writeln!(out, "- Tool: {} {}", meta.tool, meta.version).unwrap();
    if let Some(lex) = &meta.lexicon {
        writeln!(out, "- Lexicon: {} (sha256 {})", lex.name, lex.sha256).unwrap();
    }
    for input in &meta.inputs {
        writeln!(out, "- Input: {} (sha256 {})", input.name, input.sha256).unwrap();
    }
    out.push('\n');
}

fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:?}")
    } else {
        String::new()
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn fixed2(v: Option<f64>) -> String {
    v.map_or_else(|| "—".to_string(), |d| format!("{d:.2}"))
}
