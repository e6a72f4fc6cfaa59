#ifndef FISHBIJ_H
#define FISHBIJ_H

/* C interface to the fishbij library: fighting fish (glued cell complexes),
 * ternary trees, the bijections between them, exact counting, verification
 * suites, and SVG rendering.
 *
 * Conventions:
 *   - Every function returns a fishbij_status; FISHBIJ_OK means success.
 *   - On failure, out parameters are left untouched and a human-readable
 *     message is available from fishbij_last_error() (thread local).
 *   - Strings returned through char** are heap-allocated; release them with
 *     fishbij_string_free.  Handles are released with the matching *_free.
 *   - Cell ids refer to the canonical cell order of a fish (0 is the head);
 *     strip indices refer to the descending-strip order of the library.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fishbij_status {
  FISHBIJ_OK = 0,
  FISHBIJ_E_EDGE_OCCUPIED = 1,      /* gluing onto a non-free edge */
  FISHBIJ_E_BAD_CELL = 2,           /* cell id out of range / wrong kind */
  FISHBIJ_E_NOT_DOUBLE_SITE = 3,    /* glue_double precondition violated */
  FISHBIJ_E_EMPTY_TREE = 4,         /* operation requires a nonempty tree */
  FISHBIJ_E_INCONSISTENT_LABELS = 5,
  FISHBIJ_E_PARSE = 6,              /* malformed tree code or fish JSON */
  FISHBIJ_E_NOT_LEFT_TREE = 7,      /* tree has a negative abscissa */
  FISHBIJ_E_NOT_A_TAIL = 8,
  FISHBIJ_E_NOT_SYMMETRIC = 9,
  FISHBIJ_E_BAD_PAIR_TOTAL = 10,
  FISHBIJ_E_UNKNOWN_STATISTIC = 11,
  FISHBIJ_E_INEXACT_DIVISION = 12,
  FISHBIJ_E_BAD_STRIP_INDEX = 13,
  FISHBIJ_E_INVALID_FISH = 14,      /* complex fails fish validation */
  FISHBIJ_E_RANGE = 15,             /* numeric argument out of range */
  FISHBIJ_E_IO = 16,
  FISHBIJ_E_INTERNAL = 17,
} fishbij_status;

/* Opaque handles. */
typedef struct fishbij_fish fishbij_fish;
typedef struct fishbij_tree fishbij_tree;

/* ---- Library plumbing --------------------------------------------------- */

const char* fishbij_version(void);
const char* fishbij_status_name(fishbij_status s);
/* Message of the most recent failure on this thread ("" after a success). */
const char* fishbij_last_error(void);
void fishbij_string_free(char* s);

/* ---- Fighting fish ------------------------------------------------------ */

/* Parses canonical fish JSON ({"cells":[{"ru":..,"rl":..,"lu":..,"ll":..}..]})
 * and validates that the complex is a constructible fighting fish. */
fishbij_status fishbij_fish_parse(const char* json, fishbij_fish** out);
fishbij_status fishbij_head_fish(fishbij_fish** out);
void fishbij_fish_free(fishbij_fish* f);

/* Canonical JSON; the byte string doubles as the canonical code. */
fishbij_status fishbij_fish_json(const fishbij_fish* f, char** out);
fishbij_status fishbij_fish_size(const fishbij_fish* f, int* out);
fishbij_status fishbij_fish_cell_count(const fishbij_fish* f, int* out);
/* Registry names: size, descStrips, ascStrips, jawLen, tails, branchCells,
 * finLen, finCells. */
fishbij_status fishbij_fish_statistic(const fishbij_fish* f, const char* name,
                                      long long* out);
fishbij_status fishbij_fish_equal(const fishbij_fish* a, const fishbij_fish* b,
                                  int* out);

/* Growth operations: attach a cell to a free right upper / right lower edge,
 * or one cell onto both free edges of a double-gluing site (size unchanged). */
fishbij_status fishbij_glue_upper(const fishbij_fish* f, int cell,
                                  fishbij_fish** out);
fishbij_status fishbij_glue_lower(const fishbij_fish* f, int cell,
                                  fishbij_fish** out);
fishbij_status fishbij_glue_double(const fishbij_fish* f, int a, int b,
                                   fishbij_fish** out);

fishbij_status fishbij_conjugate(const fishbij_fish* f, fishbij_fish** out);
fishbij_status fishbij_is_symmetric(const fishbij_fish* f, int* out);

/* ---- Ternary trees ------------------------------------------------------ */

/* tree ::= "." | "(" tree tree tree ")"; "." alone is the empty tree. */
fishbij_status fishbij_tree_parse(const char* code, fishbij_tree** out);
void fishbij_tree_free(fishbij_tree* t);
fishbij_status fishbij_tree_code(const fishbij_tree* t, char** out);
fishbij_status fishbij_tree_json(const fishbij_tree* t, char** out);
fishbij_status fishbij_tree_nodes(const fishbij_tree* t, int* out);
/* Registry names: nodes, oddAbscissa, evenAbscissa, zeroAbscissa, coreSize,
 * rightBranches. */
fishbij_status fishbij_tree_statistic(const fishbij_tree* t, const char* name,
                                      long long* out);

/* ---- Bijections --------------------------------------------------------- */

/* Left ternary trees <-> fish (jaw-rooted bijection). */
fishbij_status fishbij_map_tree_to_fish(const fishbij_tree* t,
                                        fishbij_fish** out);
fishbij_status fishbij_map_fish_to_tree(const fishbij_fish* f,
                                        fishbij_tree** out);

/* Ternary trees <-> fish with a marked descending strip. */
fishbij_status fishbij_map_tree_to_marked(const fishbij_tree* t,
                                          fishbij_fish** out_fish,
                                          int* out_strip);
fishbij_status fishbij_map_marked_to_tree(const fishbij_fish* f, int strip,
                                          fishbij_tree** out);

/* Fish with a marked tail <-> ordered pairs of ternary trees (total size
 * one less than the fish size). */
fishbij_status fishbij_map_tails_to_pair(const fishbij_fish* f, int tail,
                                         fishbij_tree** out_first,
                                         fishbij_tree** out_second);
fishbij_status fishbij_map_pair_to_fish(const fishbij_tree* first,
                                        const fishbij_tree* second,
                                        fishbij_fish** out, int* out_tail);

/* Symmetric fish of size 2n+1 <-> pairs of ternary trees of total size n. */
fishbij_status fishbij_map_symmetric_to_pair(const fishbij_fish* f,
                                             fishbij_tree** out_first,
                                             fishbij_tree** out_second);
fishbij_status fishbij_map_pair_to_symmetric(const fishbij_tree* first,
                                             const fishbij_tree* second,
                                             fishbij_fish** out);

/* ---- Counting, censuses, q-polynomials ---------------------------------- */

/* family: fish (n>=1), ternary (n>=0), left (n>=1), pairs (n>=0), or the
 * size-addressed symmetric, symmetric-odd, symmetric-even (0 for even sizes).
 * The exact decimal count is returned as a string. */
fishbij_status fishbij_count(const char* family, int n, char** out);

/* family: fish, left, ternary, marked, symmetric; method: via-left-trees or
 * oracle (growth closure, capped by FISHBIJ_MAX_ORACLE, default 8).  Returns
 * CSV with a header of the statistic names plus "count", rows sorted. */
fishbij_status fishbij_census_csv(const char* family, int n,
                                  const char* const* statistics,
                                  size_t statistic_count, const char* method,
                                  int workers, char** out);

/* Coefficients of G_n(q), ascending from degree 0, space-separated. */
fishbij_status fishbij_g_polynomial(int n, char** out);

/* ---- Verification and reports ------------------------------------------- */

/* suite: lemma2, thm1, thm2, thm3, tails, symmetric, lefttrees, oracle,
 * qpoly, all.  out_pass is 1 iff every line of the report passed. */
fishbij_status fishbij_verify(const char* suite, int nmax, int workers,
                              int* out_pass, char** out_report);

/* Fin/core census comparison between fish and left trees, with both the
 * offset-corrected and the raw statistic conventions reported. */
fishbij_status fishbij_conjecture(int nmax, int workers,
                                  int* out_corrected_equal, int* out_raw_equal,
                                  char** out_report);

/* ---- Rendering ----------------------------------------------------------- */

fishbij_status fishbij_render_fish_svg(const fishbij_fish* f, char** out);
fishbij_status fishbij_render_tree_svg(const fishbij_tree* t, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FISHBIJ_H */
