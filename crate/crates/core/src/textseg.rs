//! Tokenization, sentence segmentation and syllable counting.
//!
//! Tokens are maximal runs of letters. An apostrophe is kept inside a token
//! only when it sits between two letters, and it is dropped from the
//! normalized form. Everything else (digits, hyphens, math, punctuation)
//! separates tokens. All functions here are pure.

use std::ops::Range;

use serde::{Deserialize, Serialize};

/// One abstract, as read from a corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDocument {
    pub id: String,
    pub text: String,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    /// Original substring, apostrophes and case preserved.
    pub surface: String,
    /// Lowercase letters only.
    pub normalized: String,
    pub syllables: u32,
    /// Byte span of `surface` in the source text.
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedDocument {
    pub doc_id: String,
    pub tokens: Vec<Token>,
    /// Token-index ranges, contiguous and covering `tokens` exactly.
    pub sentence_bounds: Vec<Range<usize>>,
}

impl TokenizedDocument {
    pub fn word_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_bounds.len()
    }

    pub fn syllable_count(&self) -> u64 {
        self.tokens.iter().map(|t| u64::from(t.syllables)).sum()
    }

    pub fn complex_word_count(&self) -> usize {
        self.tokens.iter().filter(|t| is_complex(t)).count()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Tokenize a document and attach its sentence boundaries.
pub fn tokenize(doc: &RawDocument) -> TokenizedDocument {
    let tokens = scan_tokens(&doc.text);
    let sentence_bounds = bounds_from_terminators(&tokens, &terminator_offsets(&doc.text));
    TokenizedDocument {
        doc_id: doc.id.clone(),
        tokens,
        sentence_bounds,
    }
}

/// Sentence boundaries of a document as token-index ranges.
///
/// A sentence ends at `.`, `!`, `?` or `;` when the mark is followed by
/// whitespace and then an uppercase letter, or by nothing but whitespace up
/// to the end of the text. Known abbreviations never end a sentence, and a
/// decimal point never qualifies because it is not followed by whitespace.
/// Sentences that would contain no tokens are dropped.
pub fn segment_sentences(doc: &RawDocument) -> Vec<Range<usize>> {
    let tokens = scan_tokens(&doc.text);
    bounds_from_terminators(&tokens, &terminator_offsets(&doc.text))
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

fn scan_tokens(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if !chars[i].1.is_alphabetic() {
            i += 1;
            continue;
        }
        let start = i;
        let mut end = i + 1;
        while end < chars.len() {
            let c = chars[end].1;
            if c.is_alphabetic() {
                end += 1;
            } else if is_apostrophe(c)
                && chars.get(end + 1).is_some_and(|&(_, n)| n.is_alphabetic())
            {
                end += 2;
            } else {
                break;
            }
        }
        let byte_start = chars[start].0;
        let byte_end = chars.get(end).map_or(text.len(), |&(b, _)| b);
        let surface = &text[byte_start..byte_end];
        let normalized: String = surface
            .chars()
            .filter(|c| !is_apostrophe(*c))
            .flat_map(char::to_lowercase)
            .filter(|c| c.is_alphabetic())
            .collect();
        let syllables = count_syllables(&normalized);
        tokens.push(Token {
            surface: surface.to_string(),
            normalized,
            syllables,
            span: byte_start..byte_end,
        });
        i = end;
    }
    tokens
}

/// Whitespace-delimited words ending in '.' that do not close a sentence.
const ABBREVIATIONS: &[&str] = &[
    "e.g.", "i.e.", "al.", "vs.", "cf.", "fig.", "figs.", "eq.", "eqs.", "approx.", "resp.",
    "ref.", "refs.", "sec.", "sect.", "tab.", "dr.", "prof.", "mr.", "mrs.", "ms.",
];

fn is_abbreviation(text: &str, dot: usize) -> bool {
    let word_start = text[..dot].rfind(char::is_whitespace).map_or(0, |p| {
        p + text[p..].chars().next().map_or(1, char::len_utf8)
    });
    let word = text[word_start..=dot]
        .trim_start_matches(['(', '[', '{', '"', '\'', '\u{201C}'])
        .to_lowercase();
    ABBREVIATIONS.contains(&word.as_str())
}

fn terminator_offsets(text: &str) -> Vec<usize> {
    let mut out = Vec::new();
    for (pos, c) in text.char_indices() {
        if !matches!(c, '.' | '!' | '?' | ';') {
            continue;
        }
        let rest = &text[pos + c.len_utf8()..];
        let trimmed = rest.trim_start();
        let ends_sentence = if trimmed.is_empty() {
            true
        } else {
            trimmed.len() < rest.len() && trimmed.chars().next().is_some_and(char::is_uppercase)
        };
        if ends_sentence && !(c == '.' && is_abbreviation(text, pos)) {
            out.push(pos);
        }
    }
    out
}

fn bounds_from_terminators(tokens: &[Token], terminators: &[usize]) -> Vec<Range<usize>> {
    let mut bounds = Vec::new();
    let mut start = 0;
    let mut idx = 0;
    for &term in terminators {
        while idx < tokens.len() && tokens[idx].span.start < term {
            idx += 1;
        }
        if idx > start {
            bounds.push(start..idx);
            start = idx;
        }
    }
    if start < tokens.len() {
        bounds.push(start..tokens.len());
    }
    bounds
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

/// Heuristic syllable count for a lowercase word.
///
/// Counts maximal vowel groups (`y` counts as a vowel), then drops one for a
/// silent ending: a final `e` after a consonant (but not consonant + `le`),
/// or an `-ed`/`-es` inflection whose `e` is not sounded. Any word with a
/// vowel gets at least one syllable; vowel-free strings get zero.
pub fn count_syllables(word: &str) -> u32 {
    let chars: Vec<char> = word.chars().collect();
    let mut groups = 0u32;
    let mut prev_vowel = false;
    for &c in &chars {
        let v = is_vowel(c);
        if v && !prev_vowel {
            groups += 1;
        }
        prev_vowel = v;
    }
    if groups == 0 {
        return 0;
    }
    if groups >= 2 && has_silent_ending(&chars) {
        groups -= 1;
    }
    groups.max(1)
}

fn has_silent_ending(chars: &[char]) -> bool {
    let n = chars.len();
    let consonant_at = |i: usize| !is_vowel(chars[i]);
    match chars {
        [.., _, 'e'] if consonant_at(n - 2) => {
            // consonant + "le" keeps its own syllable: ar-ti-cle, ta-ble
            !(n >= 3 && chars[n - 2] == 'l' && consonant_at(n - 3))
        }
        [.., _, 'e', 'd'] if consonant_at(n - 3) => !matches!(chars[n - 3], 't' | 'd'),
        [.., _, 'e', 's'] if consonant_at(n - 3) => {
            let before = chars[n - 3];
            if matches!(before, 's' | 'x' | 'z' | 'c' | 'g' | 'h') {
                return false;
            }
            !(before == 'l' && n >= 4 && consonant_at(n - 4))
        }
        _ => false,
    }
}

/// Complex-word test for the Fog index.
///
/// A word is complex when it has three or more syllables, unless it only
/// reaches three through an `-es`, `-ed` or `-ing` inflection.
pub fn is_complex(token: &Token) -> bool {
    if token.syllables < 3 {
        return false;
    }
    let w = token.normalized.as_str();
    for suffix in ["ing", "ed", "es"] {
        if let Some(stem) = w.strip_suffix(suffix) {
            if stem.chars().count() < 3 {
                continue;
            }
            let with_e = format!("{stem}e");
            if count_syllables(stem) < 3 && count_syllables(&with_e) < 3 {
                return false;
            }
        }
    }
    true
}
