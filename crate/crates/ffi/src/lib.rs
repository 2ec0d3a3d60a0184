//! C ABI over the viralstyle library.
//!
//! Conventions:
//! - Every fallible call returns a [`VsStatus`]; results go through out
//!   pointers, which are left untouched on failure.
//! - On failure, [`vs_last_error_message`] describes the error for the
//!   calling thread until its next failing call.
//! - Handles ([`VsLexicon`], [`VsCounts`]) are opaque, created by `*_new` or
//!   `*_parse` functions and released with the matching `*_free`.
//! - Strings passed in are NUL-terminated UTF-8. Strings handed out by
//!   `vs_lexicon_label` are owned by the caller and released with
//!   [`vs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;
use std::slice;

use viralstyle::lexicon::{CategoryLexicon, DEMO_LEXICON, PROFILE_LEXICON};
use viralstyle::metrics::{class_coverage, dominance_score, readability, Band, CorpusCounts};
use viralstyle::stats::{f_test_variance, welch_t_test, StatsError, TestResult};
use viralstyle::textseg::{count_syllables, tokenize, RawDocument};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownLabel = 4,
    /// The quantity is undefined for this input (no words, no sentences).
    Undefined = 5,
    /// Too few values, non-finite input or zero variance.
    InvalidSample = 6,
    Panic = 7,
}

/// Dominance band of a class.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VsBand {
    Dominant = 0,
    Avoided = 1,
    Filtered = 2,
    /// Control coverage is zero.
    Undefined = 3,
}

impl From<Band> for VsBand {
    fn from(band: Band) -> Self {
        match band {
            Band::Dominant => VsBand::Dominant,
            Band::Avoided => VsBand::Avoided,
            Band::Filtered => VsBand::Filtered,
            Band::Undefined => VsBand::Undefined,
        }
    }
}

/// Fog and Flesch scores of one text, with the counts behind them.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VsReadability {
    pub fog: f64,
    pub flesch: f64,
    pub words: u64,
    pub sentences: u64,
    pub syllables: u64,
    pub complex_words: u64,
}

/// Outcome of a two-sample test. `df2` is NaN for the t-test.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VsTestResult {
    pub statistic: f64,
    pub df1: f64,
    pub df2: f64,
    pub p_value: f64,
    /// Both samples constant with different means (t-test only).
    pub degenerate: bool,
}

impl From<&TestResult> for VsTestResult {
    fn from(r: &TestResult) -> Self {
        Self {
            statistic: r.statistic,
            df1: r.df.0,
            df2: r.df.1.unwrap_or(f64::NAN),
            p_value: r.p_value,
            degenerate: r.degenerate,
        }
    }
}

/// Parsed word-class lexicon.
pub struct VsLexicon {
    inner: CategoryLexicon,
}

/// Token and class counts of a growing corpus, bound to a copy of the
/// lexicon it was created with.
pub struct VsCounts {
    lexicon: CategoryLexicon,
    inner: CorpusCounts,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    let message = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(VsStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(VsStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<StatsError> for Failure {
    fn from(e: StatsError) -> Self {
        Failure(VsStatus::InvalidSample, e.to_string())
    }
}

/// Run `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> VsStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => VsStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            VsStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure(VsStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_ref<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn read_slice<'a>(ptr: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(Failure::null(what));
    }
    Ok(slice::from_raw_parts(ptr, len))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn vs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the calling thread's most recent failure, or null if none.
/// Valid until the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn vs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn vs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a lexicon from its text form.
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string; `out` must be
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn vs_lexicon_parse(
    text: *const c_char,
    out: *mut *mut VsLexicon,
) -> VsStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let inner = CategoryLexicon::parse(text)
            .map_err(|e| Failure(VsStatus::ParseError, e.to_string()))?;
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        out.write(Box::into_raw(Box::new(VsLexicon { inner })));
        Ok(())
    })
}

/// Load a bundled lexicon: `"demo"` (seven classes) or `"profile"`
/// (the fourteen profile classes).
///
/// # Safety
/// As for [`vs_lexicon_parse`].
#[no_mangle]
pub unsafe extern "C" fn vs_lexicon_builtin(
    name: *const c_char,
    out: *mut *mut VsLexicon,
) -> VsStatus {
    let text = match read_str(name, "name") {
        Ok("demo") => DEMO_LEXICON,
        Ok("profile") => PROFILE_LEXICON,
        Ok(other) => {
            set_error(format!("unknown builtin lexicon `{other}`"));
            return VsStatus::UnknownLabel;
        }
        Err(Failure(status, message)) => {
            set_error(message);
            return status;
        }
    };
    let text = CString::new(text).expect("bundled lexicon has no NUL");
    vs_lexicon_parse(text.as_ptr(), out)
}

/// Release a lexicon. Null is ignored.
///
/// # Safety
/// `lexicon` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn vs_lexicon_free(lexicon: *mut VsLexicon) {
    if !lexicon.is_null() {
        drop(Box::from_raw(lexicon));
    }
}

/// Number of active (non-excluded) classes; 0 for a null handle.
///
/// # Safety
/// `lexicon` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vs_lexicon_class_count(lexicon: *const VsLexicon) -> usize {
    lexicon.as_ref().map_or(0, |l| l.inner.labels().len())
}

/// Label of the active class at `index` (sorted order). The caller frees
/// `*out` with [`vs_string_free`].
///
/// # Safety
/// `lexicon` must be null or a live handle; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn vs_lexicon_label(
    lexicon: *const VsLexicon,
    index: usize,
    out: *mut *mut c_char,
) -> VsStatus {
    guard(|| {
        let lexicon = read_ref(lexicon, "lexicon")?;
        let label = lexicon.inner.labels().get(index).ok_or_else(|| {
            Failure(
                VsStatus::UnknownLabel,
                format!(
                    "class index {index} out of range ({} classes)",
                    lexicon.inner.labels().len()
                ),
            )
        })?;
        let label = CString::new(label.as_str()).expect("labels are ASCII");
        write_out(out, label.into_raw(), "out")
    })
}

/// Start an empty corpus counter for `lexicon`. The counter keeps its own
/// copy of the lexicon, so `lexicon` may be freed afterwards.
///
/// # Safety
/// `lexicon` must be null or a live handle; `out` must be null or valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn vs_counts_new(
    lexicon: *const VsLexicon,
    out: *mut *mut VsCounts,
) -> VsStatus {
    guard(|| {
        let lexicon = read_ref(lexicon, "lexicon")?.inner.clone();
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        let inner = CorpusCounts::new(&lexicon);
        out.write(Box::into_raw(Box::new(VsCounts { lexicon, inner })));
        Ok(())
    })
}

/// Tokenize `text` and add its words to the counter.
///
/// # Safety
/// `counts` must be null or a live handle not used concurrently; `text`
/// must be null or a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn vs_counts_add_text(
    counts: *mut VsCounts,
    text: *const c_char,
) -> VsStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let counts = counts.as_mut().ok_or_else(|| Failure::null("counts"))?;
        let doc = tokenize(&RawDocument::new("ffi", text));
        counts.inner.add_document(&doc, &counts.lexicon);
        Ok(())
    })
}

/// Total number of words counted so far; 0 for a null handle.
///
/// # Safety
/// `counts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vs_counts_size(counts: *const VsCounts) -> u64 {
    counts.as_ref().map_or(0, |c| c.inner.size)
}

/// Release a counter. Null is ignored.
///
/// # Safety
/// `counts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vs_counts_free(counts: *mut VsCounts) {
    if !counts.is_null() {
        drop(Box::from_raw(counts));
    }
}

/// Share of counted words that belong to class `label`.
///
/// # Safety
/// `counts` must be null or a live handle; `label` must be null or a valid
/// NUL-terminated string; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn vs_coverage(
    counts: *const VsCounts,
    label: *const c_char,
    out: *mut f64,
) -> VsStatus {
    guard(|| {
        let counts = read_ref(counts, "counts")?;
        let label = read_str(label, "label")?;
        let coverage = class_coverage(&counts.inner, label).map_err(metrics_failure)?;
        write_out(out, coverage, "out")
    })
}

/// Dominance of `label` in `target` against `control`, and its band.
/// When the control coverage is zero the band is `Undefined` and the value
/// is NaN.
///
/// # Safety
/// Handles must be null or live; `label` must be null or a valid
/// NUL-terminated string; out pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn vs_dominance(
    target: *const VsCounts,
    control: *const VsCounts,
    label: *const c_char,
    out_value: *mut f64,
    out_band: *mut VsBand,
) -> VsStatus {
    guard(|| {
        let target = read_ref(target, "target")?;
        let control = read_ref(control, "control")?;
        let label = read_str(label, "label")?;
        if out_value.is_null() || out_band.is_null() {
            return Err(Failure::null("out"));
        }
        let row = dominance_score(&target.inner, &control.inner, label).map_err(metrics_failure)?;
        write_out(out_value, row.dominance.unwrap_or(f64::NAN), "out_value")?;
        write_out(out_band, row.band.into(), "out_band")
    })
}

fn metrics_failure(e: viralstyle::metrics::MetricsError) -> Failure {
    use viralstyle::metrics::MetricsError;
    let status = match e {
        MetricsError::UnknownLabel(_) => VsStatus::UnknownLabel,
        _ => VsStatus::Undefined,
    };
    Failure(status, e.to_string())
}

/// Fog and Flesch indices of one text. Fails with `Undefined` when the text
/// has no words.
///
/// # Safety
/// `text` must be null or a valid NUL-terminated string; `out` must be null
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn vs_readability(text: *const c_char, out: *mut VsReadability) -> VsStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let doc = tokenize(&RawDocument::new("ffi", text));
        let scores = readability(&doc).map_err(metrics_failure)?;
        let result = VsReadability {
            fog: scores.fog,
            flesch: scores.flesch,
            words: doc.word_count() as u64,
            sentences: doc.sentence_count() as u64,
            syllables: doc.syllable_count(),
            complex_words: doc.complex_word_count() as u64,
        };
        write_out(out, result, "out")
    })
}

/// Syllable estimate for one word; 0 for null or invalid UTF-8.
///
/// # Safety
/// `word` must be null or a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn vs_count_syllables(word: *const c_char) -> u32 {
    read_str(word, "word").map_or(0, |w| count_syllables(&w.to_lowercase()))
}

/// Welch's two-sided t-test of `a` against `b`.
///
/// # Safety
/// `a`/`b` must be valid for `a_len`/`b_len` reads (or null with length 0);
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn vs_welch_t_test(
    a: *const f64,
    a_len: usize,
    b: *const f64,
    b_len: usize,
    out: *mut VsTestResult,
) -> VsStatus {
    guard(|| {
        let (a, b) = (read_slice(a, a_len, "a")?, read_slice(b, b_len, "b")?);
        let result = welch_t_test(a, b)?;
        write_out(out, (&result).into(), "out")
    })
}

/// Two-sided F-test of `var(a) / var(b)`.
///
/// # Safety
/// As for [`vs_welch_t_test`].
#[no_mangle]
pub unsafe extern "C" fn vs_f_test(
    a: *const f64,
    a_len: usize,
    b: *const f64,
    b_len: usize,
    out: *mut VsTestResult,
) -> VsStatus {
    guard(|| {
        let (a, b) = (read_slice(a, a_len, "a")?, read_slice(b, b_len, "b")?);
        let result = f_test_variance(a, b)?;
        write_out(out, (&result).into(), "out")
    })
}
