//! Paper records and the four analysis collections.
//!
//! A viral collection holds every record at or above its indicator threshold;
//! a record may sit in several of them. The control collection is a seeded
//! uniform sample of records that score zero on all three indicators.

use std::collections::HashMap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::textseg::RawDocument;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("line {line}: malformed record: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: missing field `{field}`")]
    MissingField { line: usize, field: &'static str },
    #[error("line {line}: field `{field}` must be a non-negative integer, got {value}")]
    InvalidCount {
        line: usize,
        field: &'static str,
        value: String,
    },
    #[error("duplicate id `{id}` on lines {first} and {second}")]
    DuplicateId {
        id: String,
        first: usize,
        second: usize,
    },
    #[error("input contains no records")]
    NoRecords,
    #[error("no record scores zero on all three indicators; control collection is empty")]
    EmptyControl,
    #[error("invalid collection spec: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperRecord {
    pub id: String,
    #[serde(rename = "abstract")]
    pub abstract_text: String,
    pub downloads: u64,
    pub citations: u64,
    pub bookmarks: u64,
}

impl PaperRecord {
    pub fn is_zero_scored(&self) -> bool {
        self.downloads == 0 && self.citations == 0 && self.bookmarks == 0
    }

    pub fn to_document(&self) -> RawDocument {
        RawDocument::new(self.id.clone(), self.abstract_text.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    /// One JSON object per line.
    #[default]
    JsonLines,
    /// Header-free CSV: id, abstract, downloads, citations, bookmarks.
    Csv,
}

const FIELDS: [&str; 5] = ["id", "abstract", "downloads", "citations", "bookmarks"];

pub fn parse_records_as(
    content: &str,
    format: InputFormat,
) -> Result<Vec<PaperRecord>, CorpusError> {
    match format {
        InputFormat::JsonLines => parse_records(content),
        InputFormat::Csv => parse_records_csv(content),
    }
}

/// Parse newline-delimited JSON records, preserving input order. Blank lines
/// are skipped.
pub fn parse_records(content: &str) -> Result<Vec<PaperRecord>, CorpusError> {
    let mut records = Vec::new();
    let mut seen = HashMap::new();
    for (idx, raw) in content.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(raw).map_err(|e| CorpusError::Malformed {
            line,
            message: e.to_string(),
        })?;
        let Value::Object(map) = value else {
            return Err(CorpusError::Malformed {
                line,
                message: "expected a JSON object".into(),
            });
        };
        if let Some(extra) = map.keys().find(|k| !FIELDS.contains(&k.as_str())) {
            return Err(CorpusError::Malformed {
                line,
                message: format!("unexpected field `{extra}`"),
            });
        }
        let text_field = |field: &'static str| -> Result<String, CorpusError> {
            match map.get(field) {
                None => Err(CorpusError::MissingField { line, field }),
                Some(Value::String(s)) => Ok(s.clone()),
                Some(other) => Err(CorpusError::Malformed {
                    line,
                    message: format!("field `{field}` must be a string, got {other}"),
                }),
            }
        };
        let count_field = |field: &'static str| -> Result<u64, CorpusError> {
            let v = map
                .get(field)
                .ok_or(CorpusError::MissingField { line, field })?;
            v.as_u64().ok_or_else(|| CorpusError::InvalidCount {
                line,
                field,
                value: v.to_string(),
            })
        };
        let record = PaperRecord {
            id: text_field("id")?,
            abstract_text: text_field("abstract")?,
            downloads: count_field("downloads")?,
            citations: count_field("citations")?,
            bookmarks: count_field("bookmarks")?,
        };
        push_unique(&mut records, &mut seen, record, line)?;
    }
    Ok(records)
}

/// Parse header-free CSV records with the same five columns.
pub fn parse_records_csv(content: &str) -> Result<Vec<PaperRecord>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(content.as_bytes());
    let mut records = Vec::new();
    let mut seen = HashMap::new();
    for result in reader.records() {
        let row = result.map_err(|e| CorpusError::Malformed {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        if row.len() == 1 && row[0].trim().is_empty() {
            continue;
        }
        if row.len() > FIELDS.len() {
            return Err(CorpusError::Malformed {
                line,
                message: format!("expected {} columns, got {}", FIELDS.len(), row.len()),
            });
        }
        let get = |i: usize| {
            row.get(i).ok_or(CorpusError::MissingField {
                line,
                field: FIELDS[i],
            })
        };
        let count = |i: usize| -> Result<u64, CorpusError> {
            let raw = get(i)?.trim();
            raw.parse::<u64>().map_err(|_| CorpusError::InvalidCount {
                line,
                field: FIELDS[i],
                value: raw.to_string(),
            })
        };
        let record = PaperRecord {
            id: get(0)?.to_string(),
            abstract_text: get(1)?.to_string(),
            downloads: count(2)?,
            citations: count(3)?,
            bookmarks: count(4)?,
        };
        push_unique(&mut records, &mut seen, record, line)?;
    }
    Ok(records)
}

fn push_unique(
    records: &mut Vec<PaperRecord>,
    seen: &mut HashMap<String, usize>,
    record: PaperRecord,
    line: usize,
) -> Result<(), CorpusError> {
    if record.id.is_empty() {
        return Err(CorpusError::Malformed {
            line,
            message: "empty id".into(),
        });
    }
    if let Some(&first) = seen.get(&record.id) {
        return Err(CorpusError::DuplicateId {
            id: record.id,
            first,
            second: line,
        });
    }
    seen.insert(record.id.clone(), line);
    records.push(record);
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionSpec {
    pub cite_min: u64,
    pub download_min: u64,
    pub bookmark_min: u64,
    pub control_size: usize,
    /// Optional cap on each viral collection, applied by seeded sampling.
    pub viral_cap: Option<usize>,
    pub seed: u64,
}

impl Default for CollectionSpec {
    fn default() -> Self {
        Self {
            cite_min: 350,
            download_min: 330,
            bookmark_min: 8,
            control_size: 3000,
            viral_cap: None,
            seed: 0,
        }
    }
}

impl CollectionSpec {
    pub fn validate(&self) -> Result<(), CorpusError> {
        for (name, v) in [
            ("cite_min", self.cite_min),
            ("download_min", self.download_min),
            ("bookmark_min", self.bookmark_min),
        ] {
            if v < 1 {
                return Err(CorpusError::InvalidSpec(format!(
                    "{name} must be at least 1"
                )));
            }
        }
        if self.control_size < 1 {
            return Err(CorpusError::InvalidSpec(
                "control_size must be at least 1".into(),
            ));
        }
        if self.viral_cap == Some(0) {
            return Err(CorpusError::InvalidSpec(
                "viral_cap must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Record ids per collection, each list in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionSet {
    pub cited: Vec<String>,
    pub downloaded: Vec<String>,
    pub bookmarked: Vec<String>,
    pub control: Vec<String>,
}

impl CollectionSet {
    pub const NAMES: [&'static str; 4] = ["bookmarked", "cited", "control", "downloaded"];

    /// Collections in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &[String])> {
        [
            ("bookmarked", self.bookmarked.as_slice()),
            ("cited", self.cited.as_slice()),
            ("control", self.control.as_slice()),
            ("downloaded", self.downloaded.as_slice()),
        ]
        .into_iter()
    }
}

pub fn build_collections(
    records: &[PaperRecord],
    spec: &CollectionSpec,
) -> Result<CollectionSet, CorpusError> {
    spec.validate()?;
    if records.is_empty() {
        return Err(CorpusError::NoRecords);
    }
    let select = |pred: &dyn Fn(&PaperRecord) -> bool, stream: u64| -> Vec<String> {
        let ids: Vec<String> = records
            .iter()
            .filter(|r| pred(r))
            .map(|r| r.id.clone())
            .collect();
        match spec.viral_cap {
            Some(cap) if ids.len() > cap => {
                control_sample(&ids, cap, spec.seed.wrapping_add(stream))
            }
            _ => ids,
        }
    };
    let cited = select(&|r| r.citations >= spec.cite_min, 1);
    let downloaded = select(&|r| r.downloads >= spec.download_min, 2);
    let bookmarked = select(&|r| r.bookmarks >= spec.bookmark_min, 3);

    let candidates: Vec<String> = records
        .iter()
        .filter(|r| r.is_zero_scored())
        .map(|r| r.id.clone())
        .collect();
    if candidates.is_empty() {
        return Err(CorpusError::EmptyControl);
    }
    let control = control_sample(&candidates, spec.control_size, spec.seed);
    Ok(CollectionSet {
        cited,
        downloaded,
        bookmarked,
        control,
    })
}

/// Uniform sample without replacement, returned in candidate order.
/// Returns every candidate when `size` is at least the candidate count.
pub fn control_sample<S: AsRef<str>>(candidates: &[S], size: usize, seed: u64) -> Vec<String> {
    if size >= candidates.len() {
        return candidates.iter().map(|c| c.as_ref().to_string()).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = index::sample(&mut rng, candidates.len(), size).into_vec();
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|i| candidates[i].as_ref().to_string())
        .collect()
}
