//! Category lexicons: named word classes made of exact words and `stem*`
//! prefixes.
//!
//! File format, one directive per line:
//!
//! ```text
//! # comment
//! CERTAIN: all, very, fact*, exact*, certain*, completely
//! !exclude RELIGION, MUSIC
//! ```
//!
//! Entries are case-insensitive and apostrophes inside them are dropped, so
//! they compare directly against normalized tokens.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid entry `{entry}`: {reason}")]
    InvalidEntry {
        line: usize,
        entry: String,
        reason: &'static str,
    },
    #[error("line {line}: category {label} has no entries")]
    EmptyCategory { line: usize, label: String },
    #[error("lexicon defines no categories")]
    NoCategories,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Exact,
    Stem,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LexEntry {
    /// Lowercase letters; for stems, the prefix without the trailing `*`.
    pub pattern: String,
    pub kind: EntryKind,
}

impl LexEntry {
    /// Parse one entry as written in a lexicon file (`word` or `stem*`).
    pub fn parse(raw: &str) -> Result<Self, &'static str> {
        let raw = raw.trim();
        let (body, kind) = match raw.strip_suffix('*') {
            Some(prefix) => (prefix, EntryKind::Stem),
            None => (raw, EntryKind::Exact),
        };
        if body.contains('*') {
            return Err("wildcard allowed only as the final character");
        }
        let pattern: String = body
            .chars()
            .filter(|c| *c != '\'' && *c != '\u{2019}')
            .flat_map(char::to_lowercase)
            .collect();
        if pattern.is_empty() {
            return Err("empty pattern");
        }
        if !pattern.chars().all(char::is_alphabetic) {
            return Err("patterns must be alphabetic");
        }
        if kind == EntryKind::Stem && pattern.chars().count() < 2 {
            return Err("stem prefix must have at least two letters");
        }
        Ok(Self { pattern, kind })
    }

    pub fn matches(&self, word: &str) -> bool {
        match self.kind {
            EntryKind::Exact => word == self.pattern,
            EntryKind::Stem => word.starts_with(&self.pattern),
        }
    }
}

impl std::fmt::Display for LexEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            EntryKind::Exact => f.write_str(&self.pattern),
            EntryKind::Stem => write!(f, "{}*", self.pattern),
        }
    }
}

#[derive(Debug, Default, Clone)]
struct TrieNode {
    children: HashMap<char, usize>,
    exact: Vec<u32>,
    stem: Vec<u32>,
}

/// Prefix trie over all entries, storing label indices at terminal nodes.
#[derive(Debug, Clone)]
struct Matcher {
    nodes: Vec<TrieNode>,
}

impl Matcher {
    fn build<'a>(entries: impl Iterator<Item = (u32, &'a LexEntry)>) -> Self {
        let mut nodes = vec![TrieNode::default()];
        for (label, entry) in entries {
            let mut cur = 0;
            for c in entry.pattern.chars() {
                cur = match nodes[cur].children.get(&c) {
                    Some(&next) => next,
                    None => {
                        nodes.push(TrieNode::default());
                        let next = nodes.len() - 1;
                        nodes[cur].children.insert(c, next);
                        next
                    }
                };
            }
            let slot = match entry.kind {
                EntryKind::Exact => &mut nodes[cur].exact,
                EntryKind::Stem => &mut nodes[cur].stem,
            };
            if !slot.contains(&label) {
                slot.push(label);
            }
        }
        Self { nodes }
    }

    fn collect(&self, word: &str, out: &mut Vec<u32>) {
        let mut cur = 0;
        for c in word.chars() {
            match self.nodes[cur].children.get(&c) {
                Some(&next) => {
                    cur = next;
                    out.extend_from_slice(&self.nodes[cur].stem);
                }
                None => return,
            }
        }
        out.extend_from_slice(&self.nodes[cur].exact);
    }
}

/// Immutable set of word classes, with exclusions applied at query time.
#[derive(Debug, Clone)]
pub struct CategoryLexicon {
    categories: BTreeMap<String, BTreeSet<LexEntry>>,
    excluded: BTreeSet<String>,
    /// Active (non-excluded) labels in sorted order; trie stores indices into it.
    active: Vec<String>,
    matcher: Matcher,
}

impl CategoryLexicon {
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        parse_lexicon(text)
    }

    pub fn from_categories(
        categories: BTreeMap<String, BTreeSet<LexEntry>>,
        excluded: BTreeSet<String>,
    ) -> Result<Self, LexiconError> {
        if categories.is_empty() {
            return Err(LexiconError::NoCategories);
        }
        if let Some((label, _)) = categories.iter().find(|(_, e)| e.is_empty()) {
            return Err(LexiconError::EmptyCategory {
                line: 0,
                label: label.clone(),
            });
        }
        let active: Vec<String> = categories
            .keys()
            .filter(|l| !excluded.contains(*l))
            .cloned()
            .collect();
        let matcher = Matcher::build(
            active
                .iter()
                .enumerate()
                .flat_map(|(i, label)| categories[label].iter().map(move |e| (i as u32, e))),
        );
        Ok(Self {
            categories,
            excluded,
            active,
            matcher,
        })
    }

    /// Non-excluded labels, sorted.
    pub fn labels(&self) -> &[String] {
        &self.active
    }

    pub fn all_labels(&self) -> impl Iterator<Item = &str> {
        self.categories.keys().map(String::as_str)
    }

    pub fn excluded_labels(&self) -> &BTreeSet<String> {
        &self.excluded
    }

    pub fn is_excluded(&self, label: &str) -> bool {
        self.excluded.contains(label)
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.categories.contains_key(label)
    }

    pub fn entries(&self, label: &str) -> Option<&BTreeSet<LexEntry>> {
        self.categories.get(label)
    }

    /// Indices into [`labels`](Self::labels) for every active class that
    /// contains `word`, sorted and deduplicated.
    pub fn label_indices(&self, word: &str) -> Vec<u32> {
        let mut out = Vec::new();
        self.matcher.collect(word, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Active labels whose class contains `word` (exact or stem match).
    pub fn categories_of(&self, word: &str) -> BTreeSet<&str> {
        self.label_indices(word)
            .into_iter()
            .map(|i| self.active[i as usize].as_str())
            .collect()
    }

    /// Canonical text form: sorted labels, sorted entries, exclusions last.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        for (label, entries) in &self.categories {
            let list: Vec<String> = entries.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{label}: {}\n", list.join(", ")));
        }
        if !self.excluded.is_empty() {
            let list: Vec<&str> = self.excluded.iter().map(String::as_str).collect();
            out.push_str(&format!("!exclude {}\n", list.join(", ")));
        }
        out
    }
}

fn parse_label(raw: &str, line: usize) -> Result<String, LexiconError> {
    let label = raw.trim().to_uppercase();
    let mut chars = label.chars();
    let valid = chars.next().is_some_and(|c| c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_uppercase() || c.is_ascii_digit() || c == '_');
    if !valid {
        return Err(LexiconError::Parse {
            line,
            message: format!("invalid category label `{}`", raw.trim()),
        });
    }
    Ok(label)
}

/// Parse lexicon file content.
pub fn parse_lexicon(text: &str) -> Result<CategoryLexicon, LexiconError> {
    let mut categories: BTreeMap<String, BTreeSet<LexEntry>> = BTreeMap::new();
    let mut excluded = BTreeSet::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix('!') {
            let rest = rest.trim_start();
            let Some(labels) = rest.strip_prefix("exclude") else {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: format!("unknown directive `!{rest}`"),
                });
            };
            let labels = labels.trim_start_matches(':');
            for label in labels.split(',').filter(|s| !s.trim().is_empty()) {
                excluded.insert(parse_label(label, line_no)?);
            }
            continue;
        }

        let Some((label, entries)) = line.split_once(':') else {
            return Err(LexiconError::Parse {
                line: line_no,
                message: "expected `LABEL: entry, entry, ...`".to_string(),
            });
        };
        let label = parse_label(label, line_no)?;
        let mut parsed = BTreeSet::new();
        for raw in entries.split(',') {
            if raw.trim().is_empty() {
                continue;
            }
            let entry = LexEntry::parse(raw).map_err(|reason| LexiconError::InvalidEntry {
                line: line_no,
                entry: raw.trim().to_string(),
                reason,
            })?;
            parsed.insert(entry);
        }
        if parsed.is_empty() {
            return Err(LexiconError::EmptyCategory {
                line: line_no,
                label,
            });
        }
        categories.entry(label).or_default().extend(parsed);
    }

    CategoryLexicon::from_categories(categories, excluded)
}

/// Seven-class demo lexicon built from published sample words.
pub const DEMO_LEXICON: &str = include_str!("../data/demo.lex");

/// Open approximation of the fourteen profile classes.
pub const PROFILE_LEXICON: &str = include_str!("../data/profile.lex");
