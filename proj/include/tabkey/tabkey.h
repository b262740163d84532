/* tabkey — Young tableaux, sign matrices, alternating sign matrices and
 * their keys, behind a C interface.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions returning tk_status set a thread-local message retrievable with
 * tk_last_error() on failure. Output parameters are written only on TK_OK.
 * Strings returned through char** are NUL-terminated, heap-allocated, and
 * released with tk_string_free(). Indices are 0-based unless stated.
 */
#ifndef TABKEY_H
#define TABKEY_H

#ifdef __cplusplus
extern "C" {
#endif

/* Symbols are exported explicitly; the library is built with hidden
 * default visibility. */
#ifndef TK_API
#if defined(TABKEY_BUILD) && defined(__GNUC__)
#define TK_API __attribute__((visibility("default")))
#else
#define TK_API
#endif
#endif

typedef struct tk_tableau tk_tableau;
typedef struct tk_matrix tk_matrix;

/* Nonzero values double as the CLI exit codes. */
typedef enum tk_status {
  TK_OK = 0,
  TK_ERR_INTERNAL = 1, /* a library invariant broke; please report */
  TK_ERR_PARSE = 2,    /* malformed text, or an object violating its own invariants */
  TK_ERR_DOMAIN = 3,   /* well-formed input outside the operation's precondition */
  TK_ERR_VERIFY = 4    /* the verification suite found a failing identity */
} tk_status;

typedef enum tk_kind {
  TK_KIND_TABLEAU = 0,
  TK_KIND_MATRIX = 1
} tk_kind;

typedef enum tk_format {
  TK_FORMAT_TEXT = 0,
  TK_FORMAT_JSON = 1,
  TK_FORMAT_COMPACT = 2 /* matrices only: rows of '.', '+', '-' */
} tk_format;

typedef enum tk_method {
  TK_METHOD_DEFAULT = 0,
  TK_METHOD_ELIMINATION = 1, /* left key: -1 elimination; right key: complement route */
  TK_METHOD_CLASSICAL = 2    /* frank-word column factorizations */
} tk_method;

TK_API const char* tk_version(void);
/* Message from the calling thread's last failing call; never NULL. */
TK_API const char* tk_last_error(void);

TK_API void tk_string_free(char* s);
TK_API void tk_tableau_free(tk_tableau* t);
TK_API void tk_matrix_free(tk_matrix* m);

/* ---- construction and serialization ---- */

/* heights[c] entries for column c, concatenated top-to-bottom in `entries`. */
TK_API tk_status tk_tableau_new(int alphabet, int num_columns, const int* heights,
                         const int* entries, tk_tableau** out);
/* row-major, top row first, entries in {-1, 0, 1} */
TK_API tk_status tk_matrix_new(int rows, int cols, const int* entries, tk_matrix** out);

/* Detects the object kind and format; exactly one of *t, *m is written. */
TK_API tk_status tk_parse(const char* text, tk_kind* kind, tk_tableau** t, tk_matrix** m);

TK_API tk_status tk_tableau_format(const tk_tableau* t, tk_format f, char** out);
TK_API tk_status tk_matrix_format(const tk_matrix* m, tk_format f, char** out);
/* Two-dimensional French-notation diagram (display only; not re-parseable). */
TK_API tk_status tk_tableau_render(const tk_tableau* t, char** out);

/* ---- accessors ---- */

TK_API int tk_tableau_alphabet(const tk_tableau* t);
TK_API int tk_tableau_num_columns(const tk_tableau* t);
TK_API int tk_tableau_column_height(const tk_tableau* t, int col);
/* entry `row` positions below the top of column `col` */
TK_API int tk_tableau_entry(const tk_tableau* t, int col, int row);
TK_API int tk_tableau_is_key(const tk_tableau* t);

TK_API int tk_matrix_rows(const tk_matrix* m);
TK_API int tk_matrix_cols(const tk_matrix* m);
TK_API int tk_matrix_entry(const tk_matrix* m, int i, int j);
TK_API int tk_matrix_minus_count(const tk_matrix* m);
TK_API int tk_matrix_is_asm(const tk_matrix* m);

/* ---- keys and the complement ---- */

TK_API tk_status tk_left_key(const tk_tableau* t, tk_method method, tk_tableau** out);
TK_API tk_status tk_right_key(const tk_tableau* t, tk_method method, tk_tableau** out);
/* Columns of full height complement to nothing; *dropped_columns (may be
 * NULL) receives how many were removed from the front of the result. */
TK_API tk_status tk_complement(const tk_tableau* t, tk_tableau** out, int* dropped_columns);

/* ---- the tableau <-> sign matrix bijection ---- */

TK_API tk_status tk_tableau_to_matrix(const tk_tableau* t, tk_matrix** out);
TK_API tk_status tk_matrix_to_tableau(const tk_matrix* m, tk_tableau** out);

/* ---- sign-matrix eliminations ---- */

/* Remove every -1 by the staircase rewiring; the left key in matrix form. */
TK_API tk_status tk_matrix_eliminate(const tk_matrix* m, tk_matrix** out);
/* The simpler rectangle replacement; order-independent. */
TK_API tk_status tk_matrix_pseudo_key(const tk_matrix* m, tk_matrix** out);

/* ---- alternating sign matrices and monotone triangles ---- */

TK_API tk_status tk_asm_to_triangle(const tk_matrix* m, tk_tableau** out);
TK_API tk_status tk_triangle_to_asm(const tk_tableau* t, tk_matrix** out);
/* Key / pseudo-key of an ASM, as permutation matrices. */
TK_API tk_status tk_asm_key(const tk_matrix* m, tk_matrix** out);
TK_API tk_status tk_asm_pseudo_key(const tk_matrix* m, tk_matrix** out);

/* Lattice operations; box-wise min/max through the triangle bijection. */
TK_API tk_status tk_asm_meet(const tk_matrix* a, const tk_matrix* b, tk_matrix** out);
TK_API tk_status tk_asm_join(const tk_matrix* a, const tk_matrix* b, tk_matrix** out);
TK_API tk_status tk_asm_leq(const tk_matrix* a, const tk_matrix* b, int* out);
TK_API tk_status tk_triangle_meet(const tk_tableau* a, const tk_tableau* b, tk_tableau** out);
TK_API tk_status tk_triangle_join(const tk_tableau* a, const tk_tableau* b, tk_tableau** out);
TK_API tk_status tk_triangle_leq(const tk_tableau* a, const tk_tableau* b, int* out);

/* ---- enumeration ---- */

/* Census of n x n ASMs by number of -1 entries.
 * JSON: {"n": 4, "total": 42, "by_minus_ones": {"0":24,"1":16,"2":2}}
 * CSV:  header n,k,count then one row per k.
 * jobs <= 0 uses the available parallelism; results never depend on jobs. */
TK_API tk_status tk_census_json(int n, int jobs, char** out);
TK_API tk_status tk_census_csv(int n, int jobs, char** out);

/* Exact counts as decimal strings: ASMs with one / two -1 entries, and the
 * total number of 132 patterns over all permutations of n letters. */
TK_API tk_status tk_count_one_minus(int n, char** out);
TK_API tk_status tk_count_two_minus(int n, char** out);
TK_API tk_status tk_count_132(int n, char** out);

/* ---- verification ---- */

typedef void (*tk_report_fn)(const char* line, void* user);

/* Runs the ten-part verification suite; one report line per criterion goes
 * through the callback (may be NULL). TK_OK when every check passed,
 * TK_ERR_VERIFY otherwise. max_size <= 0 and tableau_alphabet <= 0 pick the
 * defaults (5 and 4). */
TK_API tk_status tk_verify(int max_size, int tableau_alphabet, int jobs, int slow,
                    tk_report_fn report, void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TABKEY_H */
