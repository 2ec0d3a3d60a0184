//! Word-class dominance and readability analysis for corpora of scientific
//! abstracts.
//!
//! The pipeline: [`corpus`] reads paper records and splits them into viral
//! and control collections, [`textseg`] turns abstracts into tokens and
//! sentences, [`lexicon`] maps tokens to word classes, [`metrics`] computes
//! coverage, dominance and readability, [`stats`] runs the significance
//! tests, and [`report`] renders results as JSON, CSV or markdown.

pub mod cli;
pub mod corpus;
pub mod lexicon;
pub mod metrics;
pub mod report;
pub mod stats;
pub mod textseg;

pub use corpus::{CollectionSet, CollectionSpec, PaperRecord};
pub use lexicon::{CategoryLexicon, LexEntry};
pub use metrics::{Band, CorpusCounts, DominanceRow, ReadabilityScores, ViralityProfile};
pub use stats::{SampleSummary, TestResult};
pub use textseg::{RawDocument, Token, TokenizedDocument};
