/* C interface to the qcrystal crystal-combinatorics library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every call.
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_WORD = 2,
  QC_STATUS_CAP_EXCEEDED = 3,
  QC_STATUS_DOMAIN_ERROR = 4,
  QC_STATUS_CONSISTENCY_ERROR = 5,
  QC_STATUS_VERIFY_FAILED = 6,
  QC_STATUS_INTERNAL_ERROR = 7,
} QcStatus;

// The four crystal operators on words.
typedef enum QcWordOp {
  QC_WORD_OP_E_EVEN = 0,
  QC_WORD_OP_F_EVEN = 1,
  QC_WORD_OP_E_ODD = 2,
  QC_WORD_OP_F_ODD = 3,
} QcWordOp;

// Operator family generating edges.
typedef enum QcMode {
  QC_MODE_GL2 = 0,
  QC_MODE_Q2 = 1,
} QcMode;

// Opaque crystal graph handle.
typedef struct QcGraph QcGraph;

// Opaque transition-matrix handle.
typedef struct QcTransition QcTransition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Frees a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must have been returned by a function of this library and not yet
// freed.
void qc_string_free(char *s);

// Applies a crystal operator to a word. `*out` receives the image word,
// or "0" when the operator kills the input.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_word_apply(enum QcWordOp op, const char *word, char **out);

// Number of uncancelled "-" symbols of the word.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_eps(const char *word, uint32_t *out);

// Number of uncancelled "+" symbols of the word.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_phi(const char *word, uint32_t *out);

// Letter counts of the word: `m1` ones and `m2` twos.
//
// # Safety
// `word` must be a valid NUL-terminated string; `m1`, `m2` writable.
enum QcStatus qc_weight(const char *word, uint32_t *m1, uint32_t *m2);

// Whether the word is killed by every raising operator of the mode.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_is_highest(const char *word, enum QcMode mode, bool *out);

// Whether the word is a lowest weight vector.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_is_lowest(const char *word, bool *out);

// Whether every suffix containing a 1 has strictly more 2s than 1s.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_is_srlp(const char *word, bool *out);

// The distinguished basis vector of the word, as a signed sum such as
// "+112 -121".
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_gbasis(const char *word, char **out);

// Segment decomposition of a lowest word, as a JSON document.
//
// # Safety
// `word` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_decompose_json(const char *word, char **out);

// Connected component of a seed word with its even split and (when the
// component has a lowest word) the segment decomposition, as JSON.
//
// # Safety
// `seed` must be a valid NUL-terminated string; `out` must be writable.
enum QcStatus qc_component_json(const char *seed, enum QcMode mode, char **out);

// Builds the crystal graph on all words of length `n`. The handle must be
// released with [`qc_graph_free`]. `cap` of 0 means the default cap.
//
// # Safety
// `out` must be writable.
enum QcStatus qc_graph_build(uint32_t n, enum QcMode mode, uint32_t cap, struct QcGraph **out);

// Number of nodes; 0 for NULL.
//
// # Safety
// `g` must be NULL or a live graph handle.
uintptr_t qc_graph_node_count(const struct QcGraph *g);

// Number of edges; 0 for NULL.
//
// # Safety
// `g` must be NULL or a live graph handle.
uintptr_t qc_graph_edge_count(const struct QcGraph *g);

// DOT rendering of the graph; `ascii` selects "1bar" labels on dashed
// edges.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum QcStatus qc_graph_dot(const struct QcGraph *g, bool ascii, char **out);

// JSON rendering of the graph, including its components.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum QcStatus qc_graph_json(const struct QcGraph *g, char **out);

// Releases a graph handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a live graph handle, not freed twice.
void qc_graph_free(struct QcGraph *g);

// Builds both transition matrices at length `n`. `cap` of 0 means the
// default cap. The handle must be released with [`qc_transition_free`].
//
// # Safety
// `out` must be writable.
enum QcStatus qc_transition_new(uint32_t n, uint32_t cap, struct QcTransition **out);

// The simple class of `label` in the Verma basis, e.g. "+[M(21)] -[M(12)]".
//
// # Safety
// `t` must be a live handle; `label` a valid string; `out` writable.
enum QcStatus qc_transition_simple_to_verma(const struct QcTransition *t,
                                            const char *label,
                                            char **out);

// The Verma class of `label` in the simple basis, e.g. "+[L(21)] +[L(12)]".
//
// # Safety
// `t` must be a live handle; `label` a valid string; `out` writable.
enum QcStatus qc_transition_verma_to_simple(const struct QcTransition *t,
                                            const char *label,
                                            char **out);

// Releases a transition handle. NULL is ignored.
//
// # Safety
// `t` must be NULL or a live handle, not freed twice.
void qc_transition_free(struct QcTransition *t);

// Applies a named operator ("E", "F", "H", "Ebar", "Fbar") to a class
// expression such as "[L(22)]" or "+[M(21)] -[M(12)]", returning the
// result in the basis of the input. `matrix_cap` of 0 means the default.
//
// # Safety
// `op` and `class` must be valid strings; `out` must be writable.
enum QcStatus qc_apply_class(const char *op, const char *class_, uint32_t matrix_cap, char **out);

// Runs a named verification suite ("axioms", "oracle", "srlp", "hat",
// "c1r", "gbasis", "ktheory", "parabolic", "all"). `n_max` of 0 keeps
// each check's default bound; `matrix_cap` of 0 means the default cap.
// `*out_json` receives the full report; the return value is `Ok` when
// every check passed and `VerifyFailed` otherwise.
//
// # Safety
// `suite` must be a valid string; `out_json` must be writable.
enum QcStatus qc_verify(const char *suite, uint32_t n_max, uint32_t matrix_cap, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
