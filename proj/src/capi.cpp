#include "fuzzysched.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fuzzysched/engine.hpp"
#include "fuzzysched/error.hpp"
#include "fuzzysched/gantt.hpp"
#include "fuzzysched/metrics.hpp"
#include "fuzzysched/report.hpp"
#include "fuzzysched/scheduler.hpp"
#include "fuzzysched/workload_io.hpp"

namespace fs = fuzzysched;

struct fsched_engine {
  fs::Engine impl;
};

struct fsched_workload {
  fs::WorkloadDocument impl;
};

struct fsched_schedule {
  fs::Schedule schedule;
  fs::ScheduleMetrics metrics;
};

struct fsched_report {
  fs::ComparisonReport impl;
};

namespace {

thread_local std::string g_last_error;

fsched_status fail(fsched_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
fsched_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fs::ParseError& e) {
    return fail(FSCHED_ERROR_PARSE, e.what());
  } catch (const fs::ConfigError& e) {
    return fail(FSCHED_ERROR_CONFIG, e.what());
  } catch (const fs::ValidationError& e) {
    return fail(FSCHED_ERROR_VALIDATION, e.what());
  } catch (const fs::NoRuleFiredError& e) {
    return fail(FSCHED_ERROR_NO_RULE_FIRED, e.what());
  } catch (const fs::IntegrityError& e) {
    return fail(FSCHED_ERROR_INTEGRITY, e.what());
  } catch (const fs::IoError& e) {
    return fail(FSCHED_ERROR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FSCHED_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FSCHED_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(FSCHED_ERROR_INTERNAL, "unknown error");
  }
}

fsched_status require(bool ok, const char* message) {
  return ok ? FSCHED_OK : fail(FSCHED_ERROR_INVALID_ARGUMENT, message);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_id(char (&dst)[FSCHED_MAX_ID], const std::string& src) {
  std::size_t n = std::min(src.size(), sizeof dst - 1);
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

bool to_policy_kind(fsched_policy policy, fs::PolicyKind& out) {
  switch (policy) {
    case FSCHED_POLICY_SJF: out = fs::PolicyKind::Sjf; return true;
    case FSCHED_POLICY_PRIORITY: out = fs::PolicyKind::StaticPriority; return true;
    case FSCHED_POLICY_FUZZY_PRIORITY: out = fs::PolicyKind::FuzzyPriority; return true;
    case FSCHED_POLICY_MODIFIED_FUZZY: out = fs::PolicyKind::ModifiedFuzzy; return true;
  }
  return false;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (const std::string& part : parts) {
    if (!out.empty()) out += sep;
    out += part;
  }
  return out;
}

}  // namespace

extern "C" {

const char* fsched_version(void) { return "1.0.0"; }

const char* fsched_last_error(void) { return g_last_error.c_str(); }

void fsched_string_free(char* s) { std::free(s); }

fsched_status fsched_engine_create_default(fsched_engine** out) {
  if (fsched_status s = require(out != nullptr, "out must not be null"); s) return s;
  return guarded([&] {
    *out = new fsched_engine{fs::Engine::with_defaults()};
    return FSCHED_OK;
  });
}

fsched_status fsched_engine_create(const char* geometry_json,
                                   const char* rules_dsl,
                                   fsched_engine** out) {
  if (fsched_status s = require(out != nullptr, "out must not be null"); s) return s;
  return guarded([&] {
    std::optional<std::string_view> dsl;
    if (rules_dsl) dsl = std::string_view(rules_dsl);
    fs::Engine engine =
        geometry_json
            ? fs::Engine::from_config_json(geometry_json, dsl)
            : (dsl ? fs::Engine::with_defaults().with_rules_dsl(*dsl)
                   : fs::Engine::with_defaults());
    *out = new fsched_engine{std::move(engine)};
    return FSCHED_OK;
  });
}

void fsched_engine_destroy(fsched_engine* engine) { delete engine; }

fsched_status fsched_engine_infer(const fsched_engine* engine, double priority,
                                  double exec_time, double* out_new_priority) {
  if (fsched_status s = require(engine && out_new_priority,
                                "engine and out must not be null"); s)
    return s;
  return guarded([&] {
    *out_new_priority = engine->impl.infer(priority, exec_time);
    return FSCHED_OK;
  });
}

fsched_status fsched_engine_rule_count(const fsched_engine* engine,
                                       size_t* out_count) {
  if (fsched_status s = require(engine && out_count,
                                "engine and out must not be null"); s)
    return s;
  *out_count = engine->impl.rules().size();
  return FSCHED_OK;
}

fsched_status fsched_engine_check_rules(const fsched_engine* engine,
                                        const char* rules_dsl,
                                        size_t* out_count) {
  if (fsched_status s = require(engine && rules_dsl,
                                "engine and rules_dsl must not be null"); s)
    return s;
  return guarded([&] {
    fs::RuleBase rules = fs::parse_rulebase(
        rules_dsl, {engine->impl.priority(), engine->impl.exec_time()},
        engine->impl.new_priority());
    if (out_count) *out_count = rules.size();
    return FSCHED_OK;
  });
}

fsched_status fsched_workload_parse_csv(const char* text, const char* name,
                                        fsched_workload** out) {
  if (fsched_status s = require(text && out, "text and out must not be null"); s)
    return s;
  return guarded([&] {
    *out = new fsched_workload{
        fs::parse_workload_csv(text, name ? name : "")};
    return FSCHED_OK;
  });
}

fsched_status fsched_workload_parse_json(const char* text,
                                         fsched_workload** out) {
  if (fsched_status s = require(text && out, "text and out must not be null"); s)
    return s;
  return guarded([&] {
    *out = new fsched_workload{fs::parse_workload_json(text)};
    return FSCHED_OK;
  });
}

fsched_status fsched_workload_load(const char* path, fsched_workload** out) {
  if (fsched_status s = require(path && out, "path and out must not be null"); s)
    return s;
  return guarded([&] {
    *out = new fsched_workload{fs::load_workload_file(path)};
    return FSCHED_OK;
  });
}

void fsched_workload_destroy(fsched_workload* workload) { delete workload; }

fsched_status fsched_workload_task_count(const fsched_workload* workload,
                                         size_t* out_count) {
  if (fsched_status s = require(workload && out_count,
                                "workload and out must not be null"); s)
    return s;
  *out_count = workload->impl.tasks.size();
  return FSCHED_OK;
}

fsched_status fsched_workload_validate(const fsched_workload* workload) {
  if (fsched_status s = require(workload != nullptr,
                                "workload must not be null"); s)
    return s;
  return guarded([&] {
    auto violations = fs::validate_workload(workload->impl.tasks);
    if (!violations.empty())
      return fail(FSCHED_ERROR_VALIDATION, join(violations, "; "));
    return FSCHED_OK;
  });
}

fsched_status fsched_simulate(const fsched_workload* workload,
                              fsched_policy policy,
                              const fsched_engine* engine, int replay,
                              fsched_schedule** out) {
  if (fsched_status s = require(workload && out,
                                "workload and out must not be null"); s)
    return s;
  fs::PolicyKind kind;
  if (!to_policy_kind(policy, kind))
    return fail(FSCHED_ERROR_INVALID_ARGUMENT, "unknown policy value");
  return guarded([&] {
    fs::Policy p{kind, engine ? &engine->impl : nullptr, replay != 0};
    fs::Schedule schedule =
        fs::simulate(workload->impl.tasks, p, workload->impl.name);
    fs::ScheduleMetrics metrics = fs::compute_metrics(schedule);
    *out = new fsched_schedule{std::move(schedule), std::move(metrics)};
    return FSCHED_OK;
  });
}

void fsched_schedule_destroy(fsched_schedule* schedule) { delete schedule; }

fsched_status fsched_schedule_segment_count(const fsched_schedule* schedule,
                                            size_t* out_count) {
  if (fsched_status s = require(schedule && out_count,
                                "schedule and out must not be null"); s)
    return s;
  *out_count = schedule->schedule.segments.size();
  return FSCHED_OK;
}

fsched_status fsched_schedule_segment(const fsched_schedule* schedule,
                                      size_t index, fsched_segment* out) {
  if (fsched_status s = require(schedule && out,
                                "schedule and out must not be null"); s)
    return s;
  if (index >= schedule->schedule.segments.size())
    return fail(FSCHED_ERROR_INVALID_ARGUMENT, "segment index out of range");
  const fs::Segment& seg = schedule->schedule.segments[index];
  copy_id(out->task_id, seg.id);
  out->start = seg.start;
  out->end = seg.end;
  return FSCHED_OK;
}

fsched_status fsched_schedule_task_count(const fsched_schedule* schedule,
                                         size_t* out_count) {
  if (fsched_status s = require(schedule && out_count,
                                "schedule and out must not be null"); s)
    return s;
  *out_count = schedule->metrics.per_task.size();
  return FSCHED_OK;
}

fsched_status fsched_schedule_task_metrics(const fsched_schedule* schedule,
                                           size_t index,
                                           fsched_task_metrics* out) {
  if (fsched_status s = require(schedule && out,
                                "schedule and out must not be null"); s)
    return s;
  if (index >= schedule->metrics.per_task.size())
    return fail(FSCHED_ERROR_INVALID_ARGUMENT, "task index out of range");
  const fs::TaskMetrics& m = schedule->metrics.per_task[index];
  copy_id(out->task_id, m.id);
  out->completion = m.completion;
  out->turnaround = m.turnaround;
  out->waiting = m.waiting;
  return FSCHED_OK;
}

fsched_status fsched_schedule_avg_waiting(const fsched_schedule* schedule,
                                          double* out) {
  if (fsched_status s = require(schedule && out,
                                "schedule and out must not be null"); s)
    return s;
  *out = schedule->metrics.avg_waiting;
  return FSCHED_OK;
}

fsched_status fsched_schedule_avg_turnaround(const fsched_schedule* schedule,
                                             double* out) {
  if (fsched_status s = require(schedule && out,
                                "schedule and out must not be null"); s)
    return s;
  *out = schedule->metrics.avg_turnaround;
  return FSCHED_OK;
}

fsched_status fsched_schedule_render(const fsched_schedule* schedule,
                                     fsched_gantt_format format,
                                     double time_scale, char** out_text) {
  if (fsched_status s = require(schedule && out_text,
                                "schedule and out must not be null"); s)
    return s;
  fs::RenderOptions options;
  switch (format) {
    case FSCHED_GANTT_ASCII: options.format = fs::GanttFormat::Ascii; break;
    case FSCHED_GANTT_SVG: options.format = fs::GanttFormat::Svg; break;
    case FSCHED_GANTT_JSON: options.format = fs::GanttFormat::Json; break;
    default:
      return fail(FSCHED_ERROR_INVALID_ARGUMENT, "unknown gantt format");
  }
  if (time_scale > 0) options.time_scale = time_scale;
  return guarded([&] {
    *out_text = dup_string(fs::render_gantt(schedule->schedule, options));
    return FSCHED_OK;
  });
}

fsched_status fsched_schedule_to_json(const fsched_schedule* schedule,
                                      char** out_text) {
  if (fsched_status s = require(schedule && out_text,
                                "schedule and out must not be null"); s)
    return s;
  return guarded([&] {
    *out_text =
        dup_string(fs::schedule_to_json(schedule->schedule, schedule->metrics));
    return FSCHED_OK;
  });
}

fsched_status fsched_schedule_table(const fsched_schedule* schedule,
                                    double time_scale, char** out_text) {
  if (fsched_status s = require(schedule && out_text,
                                "schedule and out must not be null"); s)
    return s;
  fs::RenderOptions options;
  if (time_scale > 0) options.time_scale = time_scale;
  return guarded([&] {
    *out_text = dup_string(
        fs::schedule_table(schedule->schedule, schedule->metrics, options));
    return FSCHED_OK;
  });
}

fsched_status fsched_compare(const fsched_workload* workload,
                             const fsched_policy* policies,
                             size_t policy_count, const fsched_engine* engine,
                             int replay, fsched_report** out) {
  if (fsched_status s = require(workload && policies && out,
                                "workload, policies and out must not be null");
      s)
    return s;
  std::vector<fs::Policy> resolved;
  resolved.reserve(policy_count);
  for (size_t i = 0; i < policy_count; ++i) {
    fs::PolicyKind kind;
    if (!to_policy_kind(policies[i], kind))
      return fail(FSCHED_ERROR_INVALID_ARGUMENT, "unknown policy value");
    resolved.push_back({kind, engine ? &engine->impl : nullptr, replay != 0});
  }
  return guarded([&] {
    *out = new fsched_report{
        fs::compare(workload->impl.tasks, resolved, workload->impl.name)};
    return FSCHED_OK;
  });
}

fsched_status fsched_report_render(const fsched_report* report,
                                   fsched_report_format format,
                                   char** out_text) {
  if (fsched_status s = require(report && out_text,
                                "report and out must not be null"); s)
    return s;
  fs::ReportFormat f;
  switch (format) {
    case FSCHED_REPORT_TABLE: f = fs::ReportFormat::Table; break;
    case FSCHED_REPORT_JSON: f = fs::ReportFormat::Json; break;
    default:
      return fail(FSCHED_ERROR_INVALID_ARGUMENT, "unknown report format");
  }
  return guarded([&] {
    *out_text = dup_string(fs::emit_report(report->impl, f));
    return FSCHED_OK;
  });
}

void fsched_report_destroy(fsched_report* report) { delete report; }

}  // extern "C"
