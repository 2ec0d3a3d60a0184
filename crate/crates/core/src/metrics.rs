//! Class coverage, dominance scores, readability indices and single-abstract
//! profile scoring.
//!
//! Coverage of class C in corpus A is the number of token occurrences that
//! belong to C divided by the number of tokens in A. Dominance divides the
//! target corpus coverage by the control corpus coverage. A token that
//! belongs to several classes counts once in each of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::CategoryLexicon;
use crate::stats::{self, SampleSummary, StatsError};
use crate::textseg::TokenizedDocument;

/// Dominance strictly above this is `Dominant`.
pub const DOMINANT_ABOVE: f64 = 1.2;
/// Dominance strictly below this is `Avoided`.
pub const AVOIDED_BELOW: f64 = 0.8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("coverage undefined for an empty corpus")]
    UndefinedCoverage,
    #[error("unknown or excluded class label `{0}`")]
    UnknownLabel(String),
    #[error("document `{0}` has no words or no sentences; readability undefined")]
    UndefinedReadability(String),
    #[error("need at least 2 scoreable documents, got {scoreable} ({skipped} skipped)")]
    InsufficientData { scoreable: usize, skipped: usize },
    #[error("profile classes missing from the lexicon: {}", .0.join(", "))]
    ProfileLabelsMissing(Vec<String>),
    #[error("profile line {line}: {message}")]
    ProfileParse { line: usize, message: String },
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Token totals for a corpus: `size` words, and per-class occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCounts {
    pub size: u64,
    pub class_freq: BTreeMap<String, u64>,
}

impl CorpusCounts {
    /// Zero counts for every active class of `lex`.
    pub fn new(lex: &CategoryLexicon) -> Self {
        Self {
            size: 0,
            class_freq: lex.labels().iter().map(|l| (l.clone(), 0)).collect(),
        }
    }

    pub fn add_document(&mut self, doc: &TokenizedDocument, lex: &CategoryLexicon) {
        let labels = lex.labels();
        let mut per_label = vec![0u64; labels.len()];
        for token in &doc.tokens {
            for idx in lex.label_indices(&token.normalized) {
                per_label[idx as usize] += 1;
            }
        }
        self.size += doc.tokens.len() as u64;
        for (label, n) in labels.iter().zip(per_label) {
            *self.class_freq.entry(label.clone()).or_insert(0) += n;
        }
    }

    /// Add another corpus's counts. Integer sums, so order never matters.
    pub fn merge(&mut self, other: &CorpusCounts) {
        self.size += other.size;
        for (label, n) in &other.class_freq {
            *self.class_freq.entry(label.clone()).or_insert(0) += n;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }
}

pub fn corpus_counts<'a, I>(docs: I, lex: &CategoryLexicon) -> CorpusCounts
where
    I: IntoIterator<Item = &'a TokenizedDocument>,
{
    let mut counts = CorpusCounts::new(lex);
    for doc in docs {
        counts.add_document(doc, lex);
    }
    counts
}

pub fn class_coverage(counts: &CorpusCounts, label: &str) -> Result<f64, MetricsError> {
    let freq = counts
        .class_freq
        .get(label)
        .ok_or_else(|| MetricsError::UnknownLabel(label.to_string()))?;
    if counts.size == 0 {
        return Err(MetricsError::UndefinedCoverage);
    }
    Ok(*freq as f64 / counts.size as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Band {
    Dominant,
    Avoided,
    Filtered,
    Undefined,
}

impl Band {
    pub fn classify(dominance: Option<f64>) -> Band {
        match dominance {
            None => Band::Undefined,
            Some(d) if d > DOMINANT_ABOVE => Band::Dominant,
            Some(d) if d < AVOIDED_BELOW => Band::Avoided,
            Some(_) => Band::Filtered,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Band::Dominant => "Dominant",
            Band::Avoided => "Avoided",
            Band::Filtered => "Filtered",
            Band::Undefined => "Undefined",
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceRow {
    pub label: String,
    pub coverage_target: f64,
    pub coverage_control: f64,
    /// `None` when the control coverage is zero.
    pub dominance: Option<f64>,
    pub band: Band,
}

pub fn dominance_score(
    target: &CorpusCounts,
    control: &CorpusCounts,
    label: &str,
) -> Result<DominanceRow, MetricsError> {
    let coverage_target = class_coverage(target, label)?;
    let coverage_control = class_coverage(control, label)?;
    let dominance = (coverage_control > 0.0).then(|| coverage_target / coverage_control);
    Ok(DominanceRow {
        label: label.to_string(),
        coverage_target,
        coverage_control,
        dominance,
        band: Band::classify(dominance),
    })
}

/// One row per active class of `lex`, sorted by label.
pub fn dominance_table(
    target: &CorpusCounts,
    control: &CorpusCounts,
    lex: &CategoryLexicon,
) -> Result<Vec<DominanceRow>, MetricsError> {
    lex.labels()
        .iter()
        .map(|label| dominance_score(target, control, label))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReadabilityScores {
    pub fog: f64,
    pub flesch: f64,
}

fn check_scoreable(doc: &TokenizedDocument) -> Result<(f64, f64), MetricsError> {
    let words = doc.word_count();
    let sentences = doc.sentence_count();
    if words == 0 || sentences == 0 {
        return Err(MetricsError::UndefinedReadability(doc.doc_id.clone()));
    }
    Ok((words as f64, sentences as f64))
}

/// Gunning Fog: `0.4 · (words/sentences + 100 · complex/words)`.
pub fn fog_index(doc: &TokenizedDocument) -> Result<f64, MetricsError> {
    let (words, sentences) = check_scoreable(doc)?;
    let complex = doc.complex_word_count() as f64;
    Ok(0.4 * (words / sentences + 100.0 * complex / words))
}

/// Flesch Reading Ease: `206.835 − 1.015 · words/sentences − 84.6 · syllables/words`.
pub fn flesch_index(doc: &TokenizedDocument) -> Result<f64, MetricsError> {
    let (words, sentences) = check_scoreable(doc)?;
    let syllables = doc.syllable_count() as f64;
    Ok(206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words))
}

pub fn readability(doc: &TokenizedDocument) -> Result<ReadabilityScores, MetricsError> {
    Ok(ReadabilityScores {
        fog: fog_index(doc)?,
        flesch: flesch_index(doc)?,
    })
}

/// Per-document scores for every scoreable document, plus the skip count.
pub fn score_documents<'a, I>(docs: I) -> (Vec<ReadabilityScores>, usize)
where
    I: IntoIterator<Item = &'a TokenizedDocument>,
{
    let mut scores = Vec::new();
    let mut skipped = 0;
    for doc in docs {
        match readability(doc) {
            Ok(s) => scores.push(s),
            Err(_) => skipped += 1,
        }
    }
    (scores, skipped)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadabilitySummary {
    pub fog: SampleSummary,
    pub flesch: SampleSummary,
    pub skipped: usize,
}

/// Mean and sample standard deviation of per-document Fog and Flesch scores.
pub fn readability_summary<'a, I>(docs: I) -> Result<ReadabilitySummary, MetricsError>
where
    I: IntoIterator<Item = &'a TokenizedDocument>,
{
    let (scores, skipped) = score_documents(docs);
    summarize_scores(&scores, skipped)
}

pub fn summarize_scores(
    scores: &[ReadabilityScores],
    skipped: usize,
) -> Result<ReadabilitySummary, MetricsError> {
    if scores.len() < 2 {
        return Err(MetricsError::InsufficientData {
            scoreable: scores.len(),
            skipped,
        });
    }
    let fog: Vec<f64> = scores.iter().map(|s| s.fog).collect();
    let flesch: Vec<f64> = scores.iter().map(|s| s.flesch).collect();
    Ok(ReadabilitySummary {
        fog: stats::summarize(&fog)?,
        flesch: stats::summarize(&flesch)?,
        skipped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    Dominant,
    Avoided,
}

impl Direction {
    pub fn is_met_by(self, band: Band) -> bool {
        matches!(
            (self, band),
            (Direction::Dominant, Band::Dominant) | (Direction::Avoided, Band::Avoided)
        )
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dominant" => Ok(Direction::Dominant),
            "avoided" => Ok(Direction::Avoided),
            other => Err(format!("expected `dominant` or `avoided`, got `{other}`")),
        }
    }
}

/// The fourteen classes dominant across all three viral collections; PAST is
/// the only one the viral abstracts avoid.
pub const DEFAULT_PROFILE_CLASSES: [(&str, Direction); 14] = [
    ("CERTAIN", Direction::Dominant),
    ("DISCREP", Direction::Dominant),
    ("EXCL", Direction::Dominant),
    ("FUTURE", Direction::Dominant),
    ("NEGATE", Direction::Dominant),
    ("OTHREF", Direction::Dominant),
    ("PAST", Direction::Avoided),
    ("PRONOUN", Direction::Dominant),
    ("SELF", Direction::Dominant),
    ("SENSES", Direction::Dominant),
    ("SIMILES", Direction::Dominant),
    ("SOCIAL", Direction::Dominant),
    ("TENTAT", Direction::Dominant),
    ("WE", Direction::Dominant),
];

/// Target band direction for each class a single abstract is scored on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViralityProfile {
    pub targets: BTreeMap<String, Direction>,
}

impl Default for ViralityProfile {
    fn default() -> Self {
        Self {
            targets: DEFAULT_PROFILE_CLASSES
                .iter()
                .map(|(l, d)| (l.to_string(), *d))
                .collect(),
        }
    }
}

impl ViralityProfile {
    /// Parse `LABEL: dominant|avoided` lines; `#` comments and blank lines
    /// are ignored.
    pub fn parse(text: &str) -> Result<Self, MetricsError> {
        let mut targets = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| MetricsError::ProfileParse {
                line: idx + 1,
                message,
            };
            let (label, dir) = line
                .split_once(':')
                .ok_or_else(|| err("expected `LABEL: dominant|avoided`".into()))?;
            let label = label.trim().to_uppercase();
            if label.is_empty() {
                return Err(err("empty label".into()));
            }
            targets.insert(label, dir.parse().map_err(err)?);
        }
        if targets.is_empty() {
            return Err(MetricsError::ProfileParse {
                line: 0,
                message: "profile has no classes".into(),
            });
        }
        Ok(Self { targets })
    }

    /// Every profile class must be an active class of `lex`.
    pub fn validate(&self, lex: &CategoryLexicon) -> Result<(), MetricsError> {
        let missing: Vec<String> = self
            .targets
            .keys()
            .filter(|l| !lex.labels().contains(l))
            .cloned()
            .collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(MetricsError::ProfileLabelsMissing(missing))
        }
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileRow {
    #[serde(flatten)]
    pub row: DominanceRow,
    pub target: Direction,
    pub met: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileScore {
    pub met: usize,
    pub total: usize,
    pub fraction_met: f64,
    pub rows: Vec<ProfileRow>,
}

/// Score one abstract against the profile, treating it as a one-document
/// corpus. A class is met when its band matches the target direction; an
/// `Undefined` band is never met.
pub fn profile_score(
    doc: &TokenizedDocument,
    control: &CorpusCounts,
    profile: &ViralityProfile,
    lex: &CategoryLexicon,
) -> Result<ProfileScore, MetricsError> {
    profile.validate(lex)?;
    if doc.is_empty() || control.is_empty() {
        return Err(MetricsError::UndefinedCoverage);
    }
    let target = corpus_counts([doc], lex);
    let mut rows = Vec::with_capacity(profile.len());
    for (label, &direction) in &profile.targets {
        let row = dominance_score(&target, control, label)?;
        let met = direction.is_met_by(row.band);
        rows.push(ProfileRow {
            row,
            target: direction,
            met,
        });
    }
    let met = rows.iter().filter(|r| r.met).count();
    Ok(ProfileScore {
        met,
        total: rows.len(),
        fraction_met: met as f64 / rows.len() as f64,
        rows,
    })
}
