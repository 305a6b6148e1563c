/*
 * C interface to the crossed-product order classifier.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cpo_status; on
 * failure the message of the most recent error on the calling thread is
 * available from cpo_last_error(). Strings returned through char** out
 * parameters are heap-allocated and released with cpo_string_free().
 */
#ifndef CPO_CPO_H
#define CPO_CPO_H

#include <stddef.h>
#include <stdint.h>

#if defined(CPO_BUILDING_LIBRARY)
#define CPO_API __attribute__((visibility("default")))
#else
#define CPO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cpo_status {
  CPO_OK = 0,
  CPO_ERR_PARSE,
  CPO_ERR_NO_IDENTITY,
  CPO_ERR_NOT_ASSOCIATIVE,
  CPO_ERR_NOT_PERMUTATION_TABLE,
  CPO_ERR_ACTION_NOT_HOMOMORPHISM,
  CPO_ERR_ACTION_NOT_TRANSITIVE,
  CPO_ERR_NOT_A_SUBGROUP,
  CPO_ERR_NOT_NORMALIZED,
  CPO_ERR_NOT_S_VALUED,
  CPO_ERR_COCYCLE_IDENTITY_VIOLATED,
  CPO_ERR_SUBGROUP_CLOSURE_FAILURE,
  CPO_ERR_NOT_WELL_DEFINED,
  CPO_ERR_NOT_PARTIAL_ORDER,
  CPO_ERR_NOT_DVR,
  CPO_ERR_PRIMARY_NOT_ASSERTED,
  CPO_ERR_NOT_AN_ORBIT,
  CPO_ERR_SETUP_MISMATCH,
  CPO_ERR_INFEASIBLE,
  CPO_ERR_CAP_EXHAUSTED,
  CPO_ERR_DIVISION_BY_ZERO,
  CPO_ERR_ZERO_ELEMENT,
  CPO_ERR_NOT_A_UNIT,
  CPO_ERR_INTERNAL_INCONSISTENCY,
  CPO_ERR_INVALID_ARGUMENT
} cpo_status;

typedef struct cpo_setup cpo_setup;
typedef struct cpo_cocycle cpo_cocycle;
typedef struct cpo_report cpo_report;

CPO_API const char* cpo_version(void);
CPO_API const char* cpo_last_error(void);
CPO_API const char* cpo_status_name(cpo_status status);
/* Process exit code for a status: 0 ok, 1 parse, 2 validation,
 * 3 resource cap, 4 internal inconsistency. */
CPO_API int cpo_exit_code(cpo_status status);
CPO_API void cpo_string_free(char* s);

/* Setups: group table plus transitive action on the maximal ideals. */
CPO_API cpo_status cpo_setup_from_json(const char* text, cpo_setup** out);
CPO_API cpo_status cpo_setup_example(cpo_setup** out);
CPO_API cpo_status cpo_setup_to_json(const cpo_setup* setup, char** out);
CPO_API size_t cpo_setup_order(const cpo_setup* setup);
CPO_API size_t cpo_setup_ideal_count(const cpo_setup* setup);
CPO_API void cpo_setup_free(cpo_setup* setup);

/* Cocycles. Documents of model "valuation" or "qix" are accepted; a qix
 * cocycle keeps its exact values alongside the valuation table. */
CPO_API cpo_status cpo_cocycle_from_json(const cpo_setup* setup, const char* text,
                                         cpo_cocycle** out);
/* The exact example cocycles, which = 1 or 2. */
CPO_API cpo_status cpo_cocycle_example(int which, cpo_cocycle** out);
CPO_API cpo_status cpo_cocycle_to_json(const cpo_cocycle* f, char** out);
/* CPO_ERR_INVALID_ARGUMENT when the cocycle has no exact form. */
CPO_API cpo_status cpo_cocycle_exact_json(const cpo_cocycle* f, char** out);
CPO_API void cpo_cocycle_free(cpo_cocycle* f);
CPO_API void cpo_cocycle_array_free(cpo_cocycle** items, size_t count);

/* Classification. */
CPO_API cpo_status cpo_classify(const cpo_cocycle* f, cpo_report** out);
CPO_API cpo_status cpo_report_to_json(const cpo_report* rep, char** out);
CPO_API cpo_status cpo_report_summary(const cpo_report* rep, char** out);
CPO_API int cpo_report_azumaya(const cpo_report* rep);
CPO_API int cpo_report_hereditary(const cpo_report* rep);
CPO_API int cpo_report_maximal(const cpo_report* rep);
CPO_API void cpo_report_free(cpo_report* rep);

/* Hasse diagram of the graph of f as a DOT digraph. */
CPO_API cpo_status cpo_graph_dot(const cpo_cocycle* f, char** out);

/* Valuation-level ~_K solver. On success *witness_json holds a
 * "valuation-witness" document, or NULL when no integer witness exists. */
CPO_API cpo_status cpo_cohom_solve(const cpo_cocycle* f, const cpo_cocycle* g,
                                   char** witness_json);
/* Checks a "valuation-witness" or "qix-witness" document; *holds is 1 when
 * g = c_s s(c_t) c_st^-1 f holds (at valuation level or exactly). */
CPO_API cpo_status cpo_cohom_check(const cpo_cocycle* f, const cpo_cocycle* g,
                                   const char* witness_json, int* holds);

/* Seeded sample of valid valuation cocycles with exponents in
 * [0, max_exponent]. *out receives an array of `count` handles. */
CPO_API cpo_status cpo_sample(const cpo_setup* setup, int64_t max_exponent,
                              size_t count, uint64_t seed, cpo_cocycle*** out);

/* Checks the exact example witness: c_1 = 1 and the given c_sigma carry
 * f1 to f2. */
CPO_API cpo_status cpo_example_verify_pair(const char* c_sigma, int* holds);

#ifdef __cplusplus
}
#endif

#endif /* CPO_CPO_H */
