/* vcmeta -- semantic metadata extraction and evaluation for captioned
 * video events.
 *
 * C interface to the shared library. All functions returning vcm_status
 * report VCM_OK (0) on success; on failure vcm_last_error() holds a
 * diagnostic for the calling thread until the next library call on that
 * thread. Handles are opaque and must be released with their close
 * function. A lexicon handle is immutable after open and may be shared
 * across threads.
 */

#ifndef VCMETA_H
#define VCMETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vcm_status {
  VCM_OK = 0,
  VCM_ERROR_IO = 1,         /* file missing or unwritable */
  VCM_ERROR_PARSE = 2,      /* malformed input file */
  VCM_ERROR_VALIDATION = 3, /* well-formed file violating an invariant */
  VCM_ERROR_ARGUMENT = 4,   /* bad argument or option combination */
  VCM_ERROR_INTERNAL = 5
} vcm_status;

typedef struct vcm_lexicon vcm_lexicon;

/* Library version as "major.minor.patch". */
const char *vcm_version(void);

/* Message for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the thread's next
 * library call. */
const char *vcm_last_error(void);

/* Non-fatal warnings collected by the most recent extract/dedupe call on
 * this thread, one per line; empty string when there were none. */
const char *vcm_last_warnings(void);

/* ------------------------------------------------------------------ */
/* Lexicon                                                             */

vcm_status vcm_lexicon_open(const char *path, vcm_lexicon **out_lexicon);
void vcm_lexicon_close(vcm_lexicon *lexicon);

/* pos_class is one of "noun", "verb", "adjective", "adverb".
 * Predicates return 1, 0, or -1 on error. */
int vcm_lexicon_is_word(const vcm_lexicon *lexicon, const char *form,
                        const char *pos_class);
int vcm_lexicon_is_preposition(const vcm_lexicon *lexicon, const char *form);
int vcm_lexicon_are_synonyms(const vcm_lexicon *lexicon, const char *a,
                             const char *b, const char *pos_class);

/* Writes the lemma of form into buffer (NUL-terminated). Fails with
 * VCM_ERROR_ARGUMENT if buffer_size is too small. */
vcm_status vcm_lexicon_lemma(const vcm_lexicon *lexicon, const char *form,
                             const char *pos_class, char *buffer,
                             size_t buffer_size);

/* ------------------------------------------------------------------ */
/* Pipeline                                                            */

typedef enum vcm_selection {
  VCM_SELECT_NONE = 0,    /* forward all events */
  VCM_SELECT_TOP_K = 1,   /* k highest-confidence events */
  VCM_SELECT_DISTINCT_K = 2 /* duplicate captions collapsed, then top k */
} vcm_selection;

typedef struct vcm_extract_options {
  vcm_selection selection;
  long k;       /* required >= 1 unless selection is VCM_SELECT_NONE */
  int workers;  /* extraction threads; <= 1 means sequential */
} vcm_extract_options;

void vcm_extract_options_init(vcm_extract_options *options);

/* Extracts entities, entity-property pairs, and relations for every video
 * in the captions file, using the parsed-document file for linguistic
 * annotations, and writes a metadata JSON file. Output bytes depend only on
 * the input files and options, not on worker count. */
vcm_status vcm_extract(const vcm_lexicon *lexicon, const char *captions_path,
                       const char *parsed_path,
                       const vcm_extract_options *options,
                       const char *out_path);

typedef struct vcm_eval_summary {
  double precision; /* averaged across tIoU thresholds at event level */
  double recall;
  double f1;
  long long tp_p;
  long long tp_g;
  long long n_pred;
  long long n_gold;
  long long videos_evaluated;
  long long ignored_pred_videos;
} vcm_eval_summary;

/* eval_type is one of "video-entities", "event-entities", "properties",
 * "video-relations", "event-relations". freq_index_path may be NULL; when
 * given (video-entities only) gold entities with indexed frequency <=
 * freq_threshold are dropped before matching. Writes a plain-text report
 * and, if summary is non-NULL, fills it. */
vcm_status vcm_evaluate(const vcm_lexicon *lexicon, const char *eval_type,
                        const char *gold_path, const char *pred_path,
                        const char *freq_index_path, long freq_threshold,
                        const char *report_path, vcm_eval_summary *summary);

/* Builds a frequency index (entity -> number of distinct videos) over the
 * video-level entities of the given metadata files. */
vcm_status vcm_build_freq_index(const char *const *metadata_paths,
                                size_t path_count, const char *out_path);

/* Collapses duplicate captions per video and keeps the top distinct_k
 * events by confidence; writes a captions JSON file. */
vcm_status vcm_dedupe(const char *captions_path, long distinct_k,
                      const char *out_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VCMETA_H */
