//! Command-line surface: `collections`, `dominance`, `readability`, `coach`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::corpus::{
    build_collections, parse_records_as, CollectionSet, CollectionSpec, CorpusError, InputFormat,
    PaperRecord,
};
use crate::lexicon::{parse_lexicon, CategoryLexicon, LexiconError, DEMO_LEXICON, PROFILE_LEXICON};
use crate::metrics::{
    corpus_counts, dominance_table, profile_score, readability, score_documents, summarize_scores,
    MetricsError, ReadabilityScores, ViralityProfile,
};
use crate::report::{
    Comparison, DominanceReport, Format, InputDigest, Metadata, ProfileReport, ReadabilityReport,
    ReadabilityRow, Report,
};
use crate::stats::{f_test_variance, welch_t_test, StatsError};
use crate::textseg::{tokenize, RawDocument, TokenizedDocument};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    NoInput {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Corpus { path: PathBuf, source: CorpusError },
    #[error("{path}: {source}")]
    Lexicon { path: String, source: LexiconError },
    #[error("{0}")]
    Metrics(#[from] MetricsError),
    #[error("{0}")]
    Stats(#[from] StatsError),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::NoInput { .. } => EXIT_NO_INPUT,
            CliError::Io { .. } => EXIT_IO,
            _ => EXIT_DATA,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "viralstyle",
    version,
    about = "Word-class dominance and readability analysis of abstract corpora"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split a record file into cited, downloaded, bookmarked and control id lists.
    Collections(CollectionsArgs),
    /// Per-class coverage and dominance of a target collection against the control.
    Dominance(DominanceArgs),
    /// Fog and Flesch statistics per collection, tested against the control.
    Readability(ReadabilityArgs),
    /// Score a single abstract against the virality profile.
    Coach(CoachArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Record file (JSON lines, or CSV with --csv).
    #[arg(long)]
    pub input: PathBuf,
    /// Read the record file as header-free CSV.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format: json, csv or md.
    #[arg(long, default_value = "md", value_parser = parse_format)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct CollectionsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Directory for the id lists and manifest.
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 350)]
    pub cite_min: u64,
    #[arg(long, default_value_t = 330)]
    pub download_min: u64,
    #[arg(long, default_value_t = 8)]
    pub bookmark_min: u64,
    #[arg(long, default_value_t = 3000)]
    pub control_size: usize,
    /// Sample each viral collection down to at most this many records.
    #[arg(long)]
    pub viral_cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct DominanceArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Id list of the target collection.
    #[arg(long)]
    pub target: PathBuf,
    /// Id list of the control collection.
    #[arg(long)]
    pub control: PathBuf,
    /// Lexicon file, or `builtin:demo` / `builtin:profile`.
    #[arg(long, default_value = "builtin:demo")]
    pub lexicon: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReadabilityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Id list of the control collection.
    #[arg(long)]
    pub control: PathBuf,
    /// Id lists of the collections to compare; named by file stem.
    pub collections: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CoachArgs {
    /// Plain-text file holding the abstract to score.
    pub abstract_file: PathBuf,
    #[command(flatten)]
    pub input: InputArgs,
    /// Id list of the control collection.
    #[arg(long)]
    pub control: PathBuf,
    /// Lexicon file, or `builtin:demo` / `builtin:profile`.
    #[arg(long, default_value = "builtin:profile")]
    pub lexicon: String,
    /// Profile file of `LABEL: dominant|avoided` lines; defaults to the
    /// fourteen-class profile.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::NoInput {
        path: path.to_path_buf(),
        source,
    })
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let bytes = read_bytes(path)?;
    String::from_utf8(bytes)
        .map_err(|_| CliError::Data(format!("{}: not valid UTF-8", path.display())))
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn file_stem(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parsed record file plus its digest.
pub struct LoadedRecords {
    pub records: Vec<PaperRecord>,
    pub digest: InputDigest,
}

impl LoadedRecords {
    pub fn load(args: &InputArgs) -> Result<Self, CliError> {
        let text = read_text(&args.input)?;
        let format = if args.csv {
            InputFormat::Csv
        } else {
            InputFormat::JsonLines
        };
        let records = parse_records_as(&text, format).map_err(|source| CliError::Corpus {
            path: args.input.clone(),
            source,
        })?;
        if records.is_empty() {
            return Err(CliError::Corpus {
                path: args.input.clone(),
                source: CorpusError::NoRecords,
            });
        }
        Ok(Self {
            records,
            digest: InputDigest::new(file_name(&args.input), text.as_bytes()),
        })
    }

    fn by_id(&self) -> HashMap<&str, &PaperRecord> {
        self.records.iter().map(|r| (r.id.as_str(), r)).collect()
    }

    /// Tokenize the records named in an id-list file.
    pub fn collection(
        &self,
        path: &Path,
    ) -> Result<(Vec<TokenizedDocument>, InputDigest), CliError> {
        let text = read_text(path)?;
        let ids =
            parse_id_list(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let index = self.by_id();
        let docs = ids
            .iter()
            .map(|id| {
                index
                    .get(id.as_str())
                    .map(|r| tokenize(&r.to_document()))
                    .ok_or_else(|| {
                        CliError::Data(format!(
                            "{}: id `{id}` not found in record file",
                            path.display()
                        ))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((docs, InputDigest::new(file_name(path), text.as_bytes())))
    }
}

/// One id per line; blank lines ignored; duplicates rejected.
pub fn parse_id_list(text: &str) -> Result<Vec<String>, String> {
    let mut seen = HashSet::new();
    let mut ids = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let id = line.trim();
        if id.is_empty() {
            continue;
        }
        if !seen.insert(id) {
            return Err(format!("line {}: duplicate id `{id}`", i + 1));
        }
        ids.push(id.to_string());
    }
    Ok(ids)
}

pub fn load_lexicon(spec: &str) -> Result<(CategoryLexicon, InputDigest), CliError> {
    let (name, text) = match spec {
        "builtin:demo" => (spec.to_string(), DEMO_LEXICON.to_string()),
        "builtin:profile" => (spec.to_string(), PROFILE_LEXICON.to_string()),
        path => {
            let p = Path::new(path);
            (file_name(p), read_text(p)?)
        }
    };
    let lex = parse_lexicon(&text).map_err(|source| CliError::Lexicon {
        path: name.clone(),
        source,
    })?;
    Ok((lex, InputDigest::new(name, text.as_bytes())))
}

#[derive(Debug, Serialize)]
struct ManifestEntry {
    name: &'static str,
    file: String,
    size: usize,
}

#[derive(Debug, Serialize)]
struct Manifest {
    tool: String,
    version: String,
    input: InputDigest,
    spec: CollectionSpec,
    collections: Vec<ManifestEntry>,
}

/// Manifest JSON plus the id-list file bodies, keyed by file name.
pub fn collections_outputs(
    loaded: &LoadedRecords,
    spec: &CollectionSpec,
) -> Result<(CollectionSet, BTreeMap<String, String>), CliError> {
    let set = build_collections(&loaded.records, spec).map_err(|source| CliError::Corpus {
        path: PathBuf::from(&loaded.digest.name),
        source,
    })?;
    let mut files = BTreeMap::new();
    let mut entries = Vec::new();
    for (name, ids) in set.iter() {
        let file = format!("{name}.txt");
        let mut body = ids.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        files.insert(file.clone(), body);
        entries.push(ManifestEntry {
            name,
            file,
            size: ids.len(),
        });
    }
    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        input: loaded.digest.clone(),
        spec: spec.clone(),
        collections: entries,
    };
    let mut json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    json.push('\n');
    files.insert("manifest.json".into(), json);
    Ok((set, files))
}

pub fn run_collections(args: &CollectionsArgs) -> Result<String, CliError> {
    let loaded = LoadedRecords::load(&args.input)?;
    let spec = CollectionSpec {
        cite_min: args.cite_min,
        download_min: args.download_min,
        bookmark_min: args.bookmark_min,
        control_size: args.control_size,
        viral_cap: args.viral_cap,
        seed: args.seed,
    };
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let (set, files) = collections_outputs(&loaded, &spec)?;
    fs::create_dir_all(&args.out_dir).map_err(|source| CliError::Io {
        path: args.out_dir.clone(),
        source,
    })?;
    for (name, body) in &files {
        write_file(&args.out_dir.join(name), body)?;
    }
    let mut summary = String::new();
    for (name, ids) in set.iter() {
        summary.push_str(&format!("{name}\t{}\n", ids.len()));
    }
    Ok(summary)
}

pub fn dominance_report(args: &DominanceArgs) -> Result<Report, CliError> {
    let loaded = LoadedRecords::load(&args.input)?;
    let (lex, lex_digest) = load_lexicon(&args.lexicon)?;
    let (target_docs, target_digest) = loaded.collection(&args.target)?;
    let (control_docs, control_digest) = loaded.collection(&args.control)?;
    let target = corpus_counts(&target_docs, &lex);
    let control = corpus_counts(&control_docs, &lex);
    if control.is_empty() {
        return Err(CliError::Data(format!(
            "control collection {} has no words",
            args.control.display()
        )));
    }
    if target.is_empty() {
        return Err(CliError::Data(format!(
            "target collection {} has no words",
            args.target.display()
        )));
    }
    let rows = dominance_table(&target, &control, &lex)?;
    let mut metadata = Metadata::new("dominance");
    metadata.lexicon = Some(lex_digest);
    metadata.inputs = vec![loaded.digest.clone(), target_digest, control_digest];
    Ok(Report::Dominance(DominanceReport {
        metadata,
        target: file_stem(&args.target),
        control: file_stem(&args.control),
        target_tokens: target.size,
        control_tokens: control.size,
        rows: rows.into_iter().map(Into::into).collect(),
    }))
}

fn comparison(a: &[f64], b: &[f64]) -> Result<Comparison, CliError> {
    let t = welch_t_test(a, b)?;
    let f = f_test_variance(a, b).ok();
    Ok(Comparison::new(&t, f.as_ref()))
}

/// Build readability rows for named score sets against a control score set.
pub fn readability_rows(
    control_name: &str,
    control: (&[ReadabilityScores], usize),
    collections: &[(String, Vec<ReadabilityScores>, usize)],
) -> Result<(Vec<ReadabilityRow>, Vec<String>), CliError> {
    let (control_scores, control_skipped) = control;
    let control_summary = summarize_scores(control_scores, control_skipped)
        .map_err(|e| CliError::Data(format!("control collection {control_name}: {e}")))?;
    let control_fog: Vec<f64> = control_scores.iter().map(|s| s.fog).collect();
    let control_flesch: Vec<f64> = control_scores.iter().map(|s| s.flesch).collect();

    let mut rows = vec![ReadabilityRow {
        dataset: control_name.to_string(),
        n: control_summary.fog.n,
        skipped: control_skipped,
        fog_mean: control_summary.fog.mean,
        fog_sd: control_summary.fog.stddev.unwrap_or(0.0),
        flesch_mean: control_summary.flesch.mean,
        flesch_sd: control_summary.flesch.stddev.unwrap_or(0.0),
        fog_vs_control: None,
        flesch_vs_control: None,
    }];
    let mut warnings = Vec::new();
    for (name, scores, skipped) in collections {
        let summary = match summarize_scores(scores, *skipped) {
            Ok(s) => s,
            Err(e) => {
                warnings.push(format!("{name}: {e}; row omitted"));
                continue;
            }
        };
        let fog: Vec<f64> = scores.iter().map(|s| s.fog).collect();
        let flesch: Vec<f64> = scores.iter().map(|s| s.flesch).collect();
        rows.push(ReadabilityRow {
            dataset: name.clone(),
            n: summary.fog.n,
            skipped: *skipped,
            fog_mean: summary.fog.mean,
            fog_sd: summary.fog.stddev.unwrap_or(0.0),
            flesch_mean: summary.flesch.mean,
            flesch_sd: summary.flesch.stddev.unwrap_or(0.0),
            fog_vs_control: Some(comparison(&fog, &control_fog)?),
            flesch_vs_control: Some(comparison(&flesch, &control_flesch)?),
        });
    }
    rows.sort_by(|a, b| a.dataset.cmp(&b.dataset));
    Ok((rows, warnings))
}

pub fn readability_report(args: &ReadabilityArgs) -> Result<Report, CliError> {
    let loaded = LoadedRecords::load(&args.input)?;
    let (control_docs, control_digest) = loaded.collection(&args.control)?;
    let (control_scores, control_skipped) = score_documents(&control_docs);
    let mut inputs = vec![loaded.digest.clone(), control_digest];
    let mut named = Vec::new();
    for path in &args.collections {
        let (docs, digest) = loaded.collection(path)?;
        let (scores, skipped) = score_documents(&docs);
        named.push((file_stem(path), scores, skipped));
        inputs.push(digest);
    }
    let control_name = file_stem(&args.control);
    let (rows, warnings) =
        readability_rows(&control_name, (&control_scores, control_skipped), &named)?;
    let mut metadata = Metadata::new("readability");
    metadata.inputs = inputs;
    Ok(Report::Readability(ReadabilityReport {
        metadata,
        control: control_name,
        rows,
        warnings,
    }))
}

pub fn coach_report(args: &CoachArgs) -> Result<Report, CliError> {
    let text = read_text(&args.abstract_file)?;
    let doc = tokenize(&RawDocument::new(
        file_stem(&args.abstract_file),
        text.clone(),
    ));
    if doc.is_empty() {
        return Err(CliError::Data(format!(
            "{}: abstract has no words",
            args.abstract_file.display()
        )));
    }
    let loaded = LoadedRecords::load(&args.input)?;
    let (lex, lex_digest) = load_lexicon(&args.lexicon)?;
    let profile = match &args.profile {
        Some(path) => ViralityProfile::parse(&read_text(path)?)?,
        None => ViralityProfile::default(),
    };
    let (control_docs, control_digest) = loaded.collection(&args.control)?;
    let control = corpus_counts(&control_docs, &lex);
    let score = profile_score(&doc, &control, &profile, &lex)?;
    let scores = readability(&doc)?;

    let mut metadata = Metadata::new("coach");
    metadata.lexicon = Some(lex_digest);
    metadata.inputs = vec![
        InputDigest::new(file_name(&args.abstract_file), text.as_bytes()),
        loaded.digest.clone(),
        control_digest,
    ];
    Ok(Report::Profile(ProfileReport {
        metadata,
        abstract_name: file_stem(&args.abstract_file),
        words: doc.word_count(),
        sentences: doc.sentence_count(),
        fog: scores.fog,
        flesch: scores.flesch,
        met: score.met,
        total: score.total,
        fraction_met: score.fraction_met,
        rows: score.rows,
    }))
}

fn emit(report: &Report, output: &OutputArgs) -> Result<String, CliError> {
    let rendered = report.render(output.format);
    match &output.output {
        Some(path) => {
            write_file(path, &rendered)?;
            Ok(String::new())
        }
        None => Ok(rendered),
    }
}

/// Run a parsed command; returns what should go to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Collections(args) => run_collections(args),
        Command::Dominance(args) => emit(&dominance_report(args)?, &args.output),
        Command::Readability(args) => emit(&readability_report(args)?, &args.output),
        Command::Coach(args) => emit(&coach_report(args)?, &args.output),
    }
}
