#ifndef VIRALSTYLE_H
#define VIRALSTYLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum VsStatus {
  VS_STATUS_OK = 0,
  VS_STATUS_NULL_POINTER = 1,
  VS_STATUS_INVALID_UTF8 = 2,
  VS_STATUS_PARSE_ERROR = 3,
  VS_STATUS_UNKNOWN_LABEL = 4,
  /*
   The quantity is undefined for this input (no words, no sentences).
   */
  VS_STATUS_UNDEFINED = 5,
  /*
   Too few values, non-finite input or zero variance.
   */
  VS_STATUS_INVALID_SAMPLE = 6,
  VS_STATUS_PANIC = 7,
} VsStatus;

/*
 Dominance band of a class.
 */
typedef enum VsBand {
  VS_BAND_DOMINANT = 0,
  VS_BAND_AVOIDED = 1,
  VS_BAND_FILTERED = 2,
  /*
   Control coverage is zero.
   */
  VS_BAND_UNDEFINED = 3,
} VsBand;

/*
 Token and class counts of a growing corpus, bound to a copy of the
 lexicon it was created with.
 */
typedef struct VsCounts VsCounts;

/*
 Parsed word-class lexicon.
 */
typedef struct VsLexicon VsLexicon;

/*
 Fog and Flesch scores of one text, with the counts behind them.
 */
typedef struct VsReadability {
  double fog;
  double flesch;
  uint64_t words;
  uint64_t sentences;
  uint64_t syllables;
  uint64_t complex_words;
} VsReadability;

/*
 Outcome of a two-sample test. `df2` is NaN for the t-test.
 */
typedef struct VsTestResult {
  double statistic;
  double df1;
  double df2;
  double p_value;
  /*
   Both samples constant with different means (t-test only).
   */
  bool degenerate;
} VsTestResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string; do not free.
 */
const char *vs_version(void);

/*
 Message of the calling thread's most recent failure, or null if none.
 Valid until the next failing call on the same thread; do not free.
 */
const char *vs_last_error_message(void);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a pointer obtained from this library that has not
 been freed yet.
 */
void vs_string_free(char *s);

/*
 Parse a lexicon from its text form.

 # Safety
 `text` must be null or a valid NUL-terminated string; `out` must be
 null or valid for writes.
 */
enum VsStatus vs_lexicon_parse(const char *text, struct VsLexicon **out);

/*
 Load a bundled lexicon: `"demo"` (seven classes) or `"profile"`
 (the fourteen profile classes).

 # Safety
 As for [`vs_lexicon_parse`].
 */
enum VsStatus vs_lexicon_builtin(const char *name, struct VsLexicon **out);

/*
 Release a lexicon. Null is ignored.

 # Safety
 `lexicon` must be null or a live handle from this library.
 */
void vs_lexicon_free(struct VsLexicon *lexicon);

/*
 Number of active (non-excluded) classes; 0 for a null handle.

 # Safety
 `lexicon` must be null or a live handle.
 */
uintptr_t vs_lexicon_class_count(const struct VsLexicon *lexicon);

/*
 Label of the active class at `index` (sorted order). The caller frees
 `*out` with [`vs_string_free`].

 # Safety
 `lexicon` must be null or a live handle; `out` must be null or valid for
 writes.
 */
enum VsStatus vs_lexicon_label(const struct VsLexicon *lexicon, uintptr_t index, char **out);

/*
 Start an empty corpus counter for `lexicon`. The counter keeps its own
 copy of the lexicon, so `lexicon` may be freed afterwards.

 # Safety
 `lexicon` must be null or a live handle; `out` must be null or valid for
 writes.
 */
enum VsStatus vs_counts_new(const struct VsLexicon *lexicon, struct VsCounts **out);

/*
 Tokenize `text` and add its words to the counter.

 # Safety
 `counts` must be null or a live handle not used concurrently; `text`
 must be null or a valid NUL-terminated string.
 */
enum VsStatus vs_counts_add_text(struct VsCounts *counts, const char *text);

/*
 Total number of words counted so far; 0 for a null handle.

 # Safety
 `counts` must be null or a live handle.
 */
uint64_t vs_counts_size(const struct VsCounts *counts);

/*
 Release a counter. Null is ignored.

 # Safety
 `counts` must be null or a live handle.
 */
void vs_counts_free(struct VsCounts *counts);

/*
 Share of counted words that belong to class `label`.

 # Safety
 `counts` must be null or a live handle; `label` must be null or a valid
 NUL-terminated string; `out` must be null or valid for writes.
 */
enum VsStatus vs_coverage(const struct VsCounts *counts, const char *label, double *out);

/*
 Dominance of `label` in `target` against `control`, and its band.
 When the control coverage is zero the band is `Undefined` and the value
 is NaN.

 # Safety
 Handles must be null or live; `label` must be null or a valid
 NUL-terminated string; out pointers must be null or valid for writes.
 */
enum VsStatus vs_dominance(const struct VsCounts *target,
                           const struct VsCounts *control,
                           const char *label,
                           double *out_value,
                           enum VsBand *out_band);

/*
 Fog and Flesch indices of one text. Fails with `Undefined` when the text
 has no words.

 # Safety
 `text` must be null or a valid NUL-terminated string; `out` must be null
 or valid for writes.
 */
enum VsStatus vs_readability(const char *text, struct VsReadability *out);

/*
 Syllable estimate for one word; 0 for null or invalid UTF-8.

 # Safety
 `word` must be null or a valid NUL-terminated string.
 */
uint32_t vs_count_syllables(const char *word);

/*
 Welch's two-sided t-test of `a` against `b`.

 # Safety
 `a`/`b` must be valid for `a_len`/`b_len` reads (or null with length 0);
 `out` must be null or valid for writes.
 */
enum VsStatus vs_welch_t_test(const double *a,
                              uintptr_t a_len,
                              const double *b,
                              uintptr_t b_len,
                              struct VsTestResult *out);

/*
 Two-sided F-test of `var(a) / var(b)`.

 # Safety
 As for [`vs_welch_t_test`].
 */
enum VsStatus vs_f_test(const double *a,
                        uintptr_t a_len,
                        const double *b,
                        uintptr_t b_len,
                        struct VsTestResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VIRALSTYLE_H */
