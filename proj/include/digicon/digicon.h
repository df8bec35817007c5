/*
 * digicon: exact enumeration of digitally convex sets.
 *
 * C interface to the shared library. Graphs are opaque handles; every call
 * returns a digicon_status and reports details through digicon_last_error(),
 * which is thread-local. Strings handed out by the library (char** outputs)
 * are owned by the caller and released with digicon_string_free(). Counts are
 * always decimal strings since they routinely exceed 64 bits.
 */
#ifndef DIGICON_DIGICON_H
#define DIGICON_DIGICON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIGICON_BUILDING_LIBRARY)
#    define DIGICON_API __declspec(dllexport)
#  else
#    define DIGICON_API __declspec(dllimport)
#  endif
#else
#  define DIGICON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum digicon_status {
    DIGICON_OK = 0,
    DIGICON_ERR_INVALID_PARAMETER = 1,
    DIGICON_ERR_BUDGET_EXCEEDED = 2,
    DIGICON_ERR_DOMAIN = 3,
    DIGICON_ERR_PARSE = 4,
    DIGICON_ERR_EMPTY_OVERLAP = 5,
    DIGICON_ERR_INTERNAL = 6,
    DIGICON_ERR_BUFFER_TOO_SMALL = 7,
    DIGICON_STOPPED = 8 /* a visitor returned nonzero */
} digicon_status;

typedef enum digicon_family {
    DIGICON_FAMILY_PATH = 0,
    DIGICON_FAMILY_CYCLE = 1,
    DIGICON_FAMILY_COMPLETE = 2,
    DIGICON_FAMILY_CYCLE_POWER = 3,
    DIGICON_FAMILY_COMPLETE_PRODUCT = 4,
    DIGICON_FAMILY_PATH_GRID = 5
} digicon_family;

typedef enum digicon_method {
    DIGICON_METHOD_BRUTEFORCE = 0,
    DIGICON_METHOD_RECURRENCE = 1,
    DIGICON_METHOD_FORMULA = 2,
    DIGICON_METHOD_BIJECTION = 3,
    DIGICON_METHOD_ARRAYS = 4
} digicon_method;

typedef enum digicon_format {
    DIGICON_FORMAT_JSONL = 0,
    DIGICON_FORMAT_CSV = 1,
    DIGICON_FORMAT_PLAIN = 2
} digicon_format;

/* Brute-force cap: searches over 2^n subsets need 2^n <= max_subsets. */
typedef struct digicon_budget {
    uint64_t max_subsets;
    uint32_t workers;
} digicon_budget;

/* Family parameters; DIGICON_UNSET marks a parameter that is not given. */
#define DIGICON_UNSET (-1)
typedef struct digicon_params {
    int64_t n;
    int64_t m;
    int64_t k;
} digicon_params;

typedef struct digicon_verify_options {
    int64_t max_n;  /* DIGICON_UNSET = suite default */
    int64_t max_k;
    int64_t max_m;
    int64_t max_nm;
    const char* bfile; /* NULL when absent */
    digicon_budget budget;
} digicon_verify_options;

typedef struct digicon_graph digicon_graph;

/* Receives each vertex set (0-based indices, ascending). Return nonzero to stop. */
typedef int (*digicon_set_visitor)(const uint32_t* members, size_t count, void* user);

/* --- library --------------------------------------------------------------- */

DIGICON_API const char* digicon_version(void);
DIGICON_API const char* digicon_last_error(void);
DIGICON_API const char* digicon_status_name(digicon_status status);
DIGICON_API void digicon_string_free(char* s);

/* 2^26 subsets, one worker. */
DIGICON_API digicon_budget digicon_default_budget(void);
DIGICON_API digicon_params digicon_params_unset(void);

DIGICON_API digicon_status digicon_family_from_name(const char* name, digicon_family* out);
DIGICON_API digicon_status digicon_method_from_name(const char* name, digicon_method* out);
DIGICON_API digicon_status digicon_format_from_name(const char* name, digicon_format* out);

/* --- graphs ---------------------------------------------------------------- */

DIGICON_API digicon_status digicon_graph_path(size_t n, digicon_graph** out);
DIGICON_API digicon_status digicon_graph_cycle(size_t n, digicon_graph** out);
DIGICON_API digicon_status digicon_graph_complete(size_t n, digicon_graph** out);
DIGICON_API digicon_status digicon_graph_power(const digicon_graph* g, size_t d, digicon_graph** out);
DIGICON_API digicon_status digicon_graph_cartesian_product(const digicon_graph* g, const digicon_graph* h,
                                                           digicon_graph** out);
DIGICON_API digicon_status digicon_graph_for_family(digicon_family family, const digicon_params* params,
                                                    digicon_graph** out);
DIGICON_API void digicon_graph_free(digicon_graph* g);

DIGICON_API size_t digicon_graph_order(const digicon_graph* g);
DIGICON_API size_t digicon_graph_edge_count(const digicon_graph* g);
/* {"order": n, "edges": [[u,v], ...]} */
DIGICON_API digicon_status digicon_graph_to_json(const digicon_graph* g, char** out);

/* --- digital convexity on a graph -------------------------------------------- */

DIGICON_API digicon_status digicon_has_private_neighbor(const digicon_graph* g, uint32_t v, const uint32_t* members,
                                                        size_t count, int* out);
DIGICON_API digicon_status digicon_is_digitally_convex(const digicon_graph* g, const uint32_t* members, size_t count,
                                                       int* out);
/* Writes the hull into out_members (capacity entries); *out_count receives its size. */
DIGICON_API digicon_status digicon_convex_hull(const digicon_graph* g, const uint32_t* members, size_t count,
                                               uint32_t* out_members, size_t capacity, size_t* out_count);
DIGICON_API digicon_status digicon_count_digitally_convex(const digicon_graph* g, const digicon_budget* budget,
                                                          char** out_decimal);
DIGICON_API digicon_status digicon_enumerate_digitally_convex(const digicon_graph* g, const digicon_budget* budget,
                                                              digicon_set_visitor visit, void* user);

/* --- families ---------------------------------------------------------------- */

DIGICON_API digicon_status digicon_count_family(digicon_family family, digicon_method method,
                                                const digicon_params* params, const digicon_budget* budget,
                                                char** out_decimal);
DIGICON_API digicon_status digicon_enumerate_family(digicon_family family, digicon_method method,
                                                    const digicon_params* params, const digicon_budget* budget,
                                                    digicon_set_visitor visit, void* user);
/* 1-based label: "v3", or "(2,1)" for product families. */
DIGICON_API digicon_status digicon_vertex_label(digicon_family family, const digicon_params* params, uint32_t v,
                                                char** out);
/* "n=7,k=2" */
DIGICON_API digicon_status digicon_params_label(digicon_family family, const digicon_params* params, char** out);

/* --- sequences ----------------------------------------------------------------- */

/* JSON array of decimal strings, coefficients of x^0 .. x^terms of the a_k series. */
DIGICON_API digicon_status digicon_block_string_series(uint32_t k, size_t terms, digicon_method method,
                                                       const digicon_budget* budget, char** out_json);

/* Compares n_D(P_n x P_m), n*m <= max_nm, read by antidiagonals, against a b-file.
 * *out_json receives the comparison report; *out_all_match is 1 iff no mismatch. */
DIGICON_API digicon_status digicon_compare_grid_with_bfile(const char* path, size_t max_nm,
                                                           const digicon_budget* budget, char** out_json,
                                                           int* out_all_match);

/* --- verification ---------------------------------------------------------------- */

DIGICON_API digicon_verify_options digicon_verify_options_default(void);
/* Suites: cyclic-strings, cycle-power-bijection, complete-product, grid-p2, grid-arrays, oeis, all. */
DIGICON_API digicon_status digicon_verify(const char* suite, const digicon_verify_options* options,
                                          digicon_format format, char** out_report, int* out_all_ok);

#ifdef __cplusplus
}
#endif

#endif /* DIGICON_DIGICON_H */
