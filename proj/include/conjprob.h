#ifndef CONJPROB_H
#define CONJPROB_H

/* C interface to libconjprob: exact conjugacy and commuting-class
 * probabilities for symmetric and small finite groups.
 *
 * Every function returns a cp_status. On failure cp_last_error() describes
 * the problem (thread-local, valid until the next call on the thread).
 * Strings returned through char** are owned by the caller and released with
 * cp_string_free. Rationals travel as "num/den" strings. */

#include <stddef.h>

#if defined(CONJPROB_BUILDING_LIBRARY)
#define CP_API __attribute__((visibility("default")))
#else
#define CP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_INVALID_ARGUMENT = 1,
  CP_ERR_RESOURCE_LIMIT = 2,
  CP_ERR_PARSE = 3,
  CP_ERR_MISSING_DEPENDENCY = 4,
  CP_ERR_IO = 5,
  CP_ERR_INTERNAL = 6
} cp_status;

typedef enum cp_statistic { CP_KAPPA = 0, CP_RHO = 1 } cp_statistic;
typedef enum cp_format { CP_FORMAT_TEXT = 0, CP_FORMAT_CSV = 1, CP_FORMAT_JSON = 2 } cp_format;
typedef enum cp_rounding { CP_ROUND_HALF_UP = 0, CP_ROUND_DOWN = 1, CP_ROUND_UP = 2 } cp_rounding;
typedef enum cp_entry_status { CP_ENTRY_PASS = 0, CP_ENTRY_FAIL = 1, CP_ENTRY_INFO = 2 } cp_entry_status;

typedef struct cp_context cp_context; /* memo cache and ceilings */
typedef struct cp_group cp_group;
typedef struct cp_report cp_report;

/* Views into a report; pointers stay valid while the report lives. */
typedef struct cp_entry {
  const char* claim;
  cp_entry_status status;
  const char* lhs;
  const char* relation;
  const char* rhs;
  const char* lhs_decimal;
  const char* rhs_decimal;
  const char* detail;
  long long elapsed_ms;
} cp_entry;

typedef struct cp_suite_options {
  int kappa_cutoff;
  int rho_cutoff;
  int kappa_n_max;
  int rho_n_max;
  int regular_l_max;
  unsigned digits;
} cp_suite_options;

typedef void (*cp_progress_fn)(const char* message, void* user);

CP_API const char* cp_version(void);
CP_API const char* cp_last_error(void);
CP_API void cp_string_free(char* s);

/* Ceilings bound the n for which exact values are computed. */
CP_API cp_status cp_context_new(int kappa_ceiling, int rho_ceiling, cp_context** out);
CP_API void cp_context_free(cp_context* ctx);
CP_API cp_status cp_context_save(const cp_context* ctx, const char* path);
CP_API cp_status cp_context_load(cp_context* ctx, const char* path);

CP_API cp_status cp_kappa_sn(cp_context* ctx, int n, char** out);
CP_API cp_status cp_rho_sn(cp_context* ctx, int n, char** out);
CP_API cp_status cp_small_cycles(cp_context* ctx, int k, int n, char** out);
CP_API cp_status cp_regular(cp_context* ctx, int l, char** out);

/* Decimal rendering of a rational with the given rounding. */
CP_API cp_status cp_rational_decimal(const char* rational, unsigned digits,
                                     cp_rounding mode, char** out);
/* *out = -1, 0 or 1. */
CP_API cp_status cp_rational_compare(const char* a, const char* b, int* out);

/* Table of n = 1..n_max rendered in the given format. */
CP_API cp_status cp_sn_table(cp_context* ctx, cp_statistic stat, int n_max,
                             unsigned digits, int cumulative, cp_format format,
                             char** out);

CP_API cp_status cp_group_from_catalog(const char* name, cp_group** out);
CP_API cp_status cp_group_from_text(const char* text, cp_group** out);
CP_API cp_status cp_group_from_file(const char* path, cp_group** out);
/* Canonical rendering of a group description (parse check and echo). */
CP_API cp_status cp_group_text_normalize(const char* text, char** out);
CP_API void cp_group_free(cp_group* g);
CP_API cp_status cp_group_order(const cp_group* g, size_t* out);
CP_API cp_status cp_group_kappa(const cp_group* g, char** out);
CP_API cp_status cp_group_rho(const cp_group* g, char** out);
CP_API cp_status cp_group_cp(const cp_group* g, char** out);
CP_API cp_status cp_group_table(const cp_group* g, unsigned digits, int invariants,
                                cp_format format, char** out);

/* Fills the defaults used by the command-line tool. */
CP_API void cp_suite_options_default(cp_suite_options* options);
CP_API cp_status cp_run_suite(cp_context* ctx, const char* suite,
                              const cp_suite_options* options,
                              cp_progress_fn progress, void* user, cp_report** out);
CP_API void cp_report_free(cp_report* report);
CP_API size_t cp_report_size(const cp_report* report);
CP_API cp_status cp_report_entry(const cp_report* report, size_t index, cp_entry* out);
CP_API int cp_report_failed(const cp_report* report);
CP_API cp_status cp_report_render(const cp_report* report, cp_format format, char** out);
/* Parses report JSON and renders it again. */
CP_API cp_status cp_report_json_normalize(const char* json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CONJPROB_H */
