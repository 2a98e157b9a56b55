/* C interface to the fuzzysched scheduling library.
 *
 * Every function that can fail returns an fsched_status; FSCHED_OK is zero.
 * On failure a human-readable message is stored per thread and readable via
 * fsched_last_error() until the next failing call on the same thread.
 * Objects returned through out-parameters are owned by the caller and must
 * be released with the matching *_destroy function; strings returned through
 * char** out-parameters must be released with fsched_string_free.
 */
#ifndef FUZZYSCHED_H
#define FUZZYSCHED_H

#include <stddef.h>

#if defined(_WIN32)
#  define FSCHED_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define FSCHED_API __attribute__((visibility("default")))
#else
#  define FSCHED_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fsched_status {
  FSCHED_OK = 0,
  FSCHED_ERROR_INVALID_ARGUMENT = 1,
  FSCHED_ERROR_PARSE = 2,
  FSCHED_ERROR_CONFIG = 3,
  FSCHED_ERROR_VALIDATION = 4,
  FSCHED_ERROR_NO_RULE_FIRED = 5,
  FSCHED_ERROR_INTEGRITY = 6,
  FSCHED_ERROR_IO = 7,
  FSCHED_ERROR_INTERNAL = 8
} fsched_status;

typedef enum fsched_policy {
  FSCHED_POLICY_SJF = 0,
  FSCHED_POLICY_PRIORITY = 1,
  FSCHED_POLICY_FUZZY_PRIORITY = 2,
  FSCHED_POLICY_MODIFIED_FUZZY = 3
} fsched_policy;

typedef enum fsched_gantt_format {
  FSCHED_GANTT_ASCII = 0,
  FSCHED_GANTT_SVG = 1,
  FSCHED_GANTT_JSON = 2
} fsched_gantt_format;

typedef enum fsched_report_format {
  FSCHED_REPORT_TABLE = 0,
  FSCHED_REPORT_JSON = 1
} fsched_report_format;

typedef struct fsched_engine fsched_engine;
typedef struct fsched_workload fsched_workload;
typedef struct fsched_schedule fsched_schedule;
typedef struct fsched_report fsched_report;

#define FSCHED_MAX_ID 32

typedef struct fsched_segment {
  char task_id[FSCHED_MAX_ID];
  double start;
  double end;
} fsched_segment;

typedef struct fsched_task_metrics {
  char task_id[FSCHED_MAX_ID];
  double completion;
  double turnaround;
  double waiting;
} fsched_task_metrics;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
FSCHED_API const char* fsched_version(void);

/* Message from the most recent failing call on this thread, or "" if none.
 * Static per-thread storage; do not free. */
FSCHED_API const char* fsched_last_error(void);

FSCHED_API void fsched_string_free(char* s);

/* ---- engine ---- */

/* Default membership geometry and rule table. */
FSCHED_API fsched_status fsched_engine_create_default(fsched_engine** out);

/* geometry_json: engine configuration document, or NULL for the default
 * geometry. rules_dsl: rule text, or NULL for the default table. */
FSCHED_API fsched_status fsched_engine_create(const char* geometry_json,
                                              const char* rules_dsl,
                                              fsched_engine** out);

FSCHED_API void fsched_engine_destroy(fsched_engine* engine);

FSCHED_API fsched_status fsched_engine_infer(const fsched_engine* engine,
                                             double priority,
                                             double exec_time,
                                             double* out_new_priority);

FSCHED_API fsched_status fsched_engine_rule_count(const fsched_engine* engine,
                                                  size_t* out_count);

/* Parses and validates rules against the engine's variables without
 * installing them. */
FSCHED_API fsched_status fsched_engine_check_rules(const fsched_engine* engine,
                                                   const char* rules_dsl,
                                                   size_t* out_count);

/* ---- workloads ---- */

FSCHED_API fsched_status fsched_workload_parse_csv(const char* text,
                                                   const char* name,
                                                   fsched_workload** out);

FSCHED_API fsched_status fsched_workload_parse_json(const char* text,
                                                    fsched_workload** out);

/* Dispatches on the file extension (.csv / .json). */
FSCHED_API fsched_status fsched_workload_load(const char* path,
                                              fsched_workload** out);

FSCHED_API void fsched_workload_destroy(fsched_workload* workload);

FSCHED_API fsched_status fsched_workload_task_count(
    const fsched_workload* workload, size_t* out_count);

/* FSCHED_OK when structurally valid; FSCHED_ERROR_VALIDATION with the
 * violations in fsched_last_error() otherwise. */
FSCHED_API fsched_status fsched_workload_validate(
    const fsched_workload* workload);

/* ---- simulation ---- */

/* engine may be NULL: the fuzzy policies then replay priorities recorded in
 * the workload. replay forces column replay even with an engine present. */
FSCHED_API fsched_status fsched_simulate(const fsched_workload* workload,
                                         fsched_policy policy,
                                         const fsched_engine* engine,
                                         int replay,
                                         fsched_schedule** out);

FSCHED_API void fsched_schedule_destroy(fsched_schedule* schedule);

FSCHED_API fsched_status fsched_schedule_segment_count(
    const fsched_schedule* schedule, size_t* out_count);

FSCHED_API fsched_status fsched_schedule_segment(
    const fsched_schedule* schedule, size_t index, fsched_segment* out);

FSCHED_API fsched_status fsched_schedule_task_count(
    const fsched_schedule* schedule, size_t* out_count);

FSCHED_API fsched_status fsched_schedule_task_metrics(
    const fsched_schedule* schedule, size_t index, fsched_task_metrics* out);

FSCHED_API fsched_status fsched_schedule_avg_waiting(
    const fsched_schedule* schedule, double* out);

FSCHED_API fsched_status fsched_schedule_avg_turnaround(
    const fsched_schedule* schedule, double* out);

/* Gantt chart; time_scale <= 0 selects the default scale of 1. */
FSCHED_API fsched_status fsched_schedule_render(const fsched_schedule* schedule,
                                                fsched_gantt_format format,
                                                double time_scale,
                                                char** out_text);

/* Full schedule document (workload, policy, segments, metrics) as JSON. */
FSCHED_API fsched_status fsched_schedule_to_json(
    const fsched_schedule* schedule, char** out_text);

/* Human-readable report: Gantt chart plus metrics tables. */
FSCHED_API fsched_status fsched_schedule_table(const fsched_schedule* schedule,
                                               double time_scale,
                                               char** out_text);

/* ---- comparison ---- */

FSCHED_API fsched_status fsched_compare(const fsched_workload* workload,
                                        const fsched_policy* policies,
                                        size_t policy_count,
                                        const fsched_engine* engine,
                                        int replay,
                                        fsched_report** out);

FSCHED_API fsched_status fsched_report_render(const fsched_report* report,
                                              fsched_report_format format,
                                              char** out_text);

FSCHED_API void fsched_report_destroy(fsched_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FUZZYSCHED_H */
