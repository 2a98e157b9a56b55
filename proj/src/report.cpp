#include "fuzzysched/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "fuzzysched/error.hpp"
#include "fuzzysched/format.hpp"

namespace fuzzysched {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

ordered_json metrics_to_json(const ScheduleMetrics& metrics) {
  ordered_json per_task = ordered_json::array();
  for (const TaskMetrics& m : metrics.per_task) {
    ordered_json t;
    t["id"] = m.id;
    t["completion"] = m.completion;
    t["turnaround"] = m.turnaround;
    t["waiting"] = m.waiting;
    per_task.push_back(std::move(t));
  }
  ordered_json out;
  out["per_task"] = std::move(per_task);
  out["avg_waiting"] = metrics.avg_waiting;
  out["avg_turnaround"] = metrics.avg_turnaround;
  return out;
}

ScheduleMetrics metrics_from_json(const json& node) {
  ScheduleMetrics metrics;
  if (!node.contains("per_task") || !node["per_task"].is_array())
    throw ParseError("report metrics need a 'per_task' array");
  for (const json& t : node["per_task"]) {
    if (!t.is_object() || !t.contains("id") || !t["id"].is_string())
      throw ParseError("per-task metrics need a string 'id'");
    for (const char* field : {"completion", "turnaround", "waiting"})
      if (!t.contains(field) || !t[field].is_number())
        throw ParseError(std::string("per-task metrics need a numeric '") +
                         field + "'");
    metrics.per_task.push_back({t["id"].get<std::string>(),
                                t["completion"].get<double>(),
                                t["turnaround"].get<double>(),
                                t["waiting"].get<double>()});
  }
  for (const char* field : {"avg_waiting", "avg_turnaround"})
    if (!node.contains(field) || !node[field].is_number())
      throw ParseError(std::string("report metrics need a numeric '") + field +
                       "'");
  metrics.avg_waiting = node["avg_waiting"].get<double>();
  metrics.avg_turnaround = node["avg_turnaround"].get<double>();
  return metrics;
}

std::string emit_table(const ComparisonReport& report) {
  const std::string kPolicy = "policy";
  const std::string kWaiting = "avg_waiting";
  const std::string kTurnaround = "avg_turnaround";

  std::size_t policy_width = kPolicy.size();
  std::size_t waiting_width = kWaiting.size();
  std::size_t turnaround_width = kTurnaround.size();
  for (const ComparisonEntry& entry : report.entries) {
    policy_width = std::max(policy_width, entry.policy.size());
    if (entry.metrics) {
      waiting_width = std::max(
          waiting_width, format_fixed(entry.metrics->avg_waiting).size());
      turnaround_width = std::max(
          turnaround_width, format_fixed(entry.metrics->avg_turnaround).size());
    }
  }

  std::string out;
  if (!report.workload.empty()) out += "workload: " + report.workload + "\n";
  out += pad_right(kPolicy, policy_width) + "  " +
         pad_left(kWaiting, waiting_width) + "  " +
         pad_left(kTurnaround, turnaround_width) + "\n";
  for (const ComparisonEntry& entry : report.entries) {
    out += pad_right(entry.policy, policy_width);
    if (entry.metrics) {
      out += "  " + pad_left(format_fixed(entry.metrics->avg_waiting),
                             waiting_width);
      out += "  " + pad_left(format_fixed(entry.metrics->avg_turnaround),
                             turnaround_width);
    } else {
      out += "  error: " + entry.error;
    }
    out += "\n";
  }
  return out;
}

std::string emit_json(const ComparisonReport& report) {
  ordered_json out;
  out["workload"] = report.workload;
  out["entries"] = ordered_json::array();
  for (const ComparisonEntry& entry : report.entries) {
    ordered_json e;
    e["policy"] = entry.policy;
    if (entry.metrics) {
      ordered_json metrics = metrics_to_json(*entry.metrics);
      for (auto& [key, value] : metrics.items()) e[key] = value;
    } else {
      e["error"] = entry.error;
    }
    out["entries"].push_back(std::move(e));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const ComparisonReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table:
      return emit_table(report);
    case ReportFormat::Json:
      return emit_json(report);
  }
  throw ConfigError("unknown report format");
}

ComparisonReport parse_report_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what());
  }
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array())
    throw ParseError("report JSON needs an 'entries' array");

  ComparisonReport report;
  if (doc.contains("workload")) {
    if (!doc["workload"].is_string())
      throw ParseError("report 'workload' must be a string");
    report.workload = doc["workload"].get<std::string>();
  }

  for (const json& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("policy") || !e["policy"].is_string())
      throw ParseError("every report entry needs a string 'policy'");
    ComparisonEntry entry{e["policy"].get<std::string>(), {}, {}};
    if (e.contains("error")) {
      if (!e["error"].is_string())
        throw ParseError("report entry 'error' must be a string");
      entry.error = e["error"].get<std::string>();
    } else {
      entry.metrics = metrics_from_json(e);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string schedule_to_json(const Schedule& schedule,
                             const ScheduleMetrics& metrics) {
  ordered_json out;
  out["workload"] = schedule.workload_name;
  out["policy"] = schedule.policy;
  out["segments"] = ordered_json::array();
  for (const Segment& seg : schedule.segments) {
    ordered_json s;
    s["id"] = seg.id;
    s["start"] = seg.start;
    s["end"] = seg.end;
    out["segments"].push_back(std::move(s));
  }
  out["metrics"] = metrics_to_json(metrics);
  return out.dump(2) + "\n";
}

std::string schedule_table(const Schedule& schedule,
                           const ScheduleMetrics& metrics,
                           const RenderOptions& gantt_options) {
  std::string out;
  if (!schedule.workload_name.empty())
    out += "workload: " + schedule.workload_name + "\n";
  out += "policy: " + schedule.policy + "\n\n";
  out += render_gantt(schedule, gantt_options);
  out += "\n";

  const std::string kTask = "task";
  const std::string kCompletion = "completion";
  const std::string kTurnaround = "turnaround";
  const std::string kWaiting = "waiting";

  std::size_t task_width = kTask.size();
  std::size_t completion_width = kCompletion.size();
  std::size_t turnaround_width = kTurnaround.size();
  std::size_t waiting_width = kWaiting.size();
  for (const TaskMetrics& m : metrics.per_task) {
    task_width = std::max(task_width, m.id.size());
    completion_width =
        std::max(completion_width, format_fixed(m.completion).size());
    turnaround_width =
        std::max(turnaround_width, format_fixed(m.turnaround).size());
    waiting_width = std::max(waiting_width, format_fixed(m.waiting).size());
  }

  out += pad_right(kTask, task_width) + "  " +
         pad_left(kCompletion, completion_width) + "  " +
         pad_left(kTurnaround, turnaround_width) + "  " +
         pad_left(kWaiting, waiting_width) + "\n";
  for (const TaskMetrics& m : metrics.per_task) {
    out += pad_right(m.id, task_width) + "  " +
           pad_left(format_fixed(m.completion), completion_width) + "  " +
           pad_left(format_fixed(m.turnaround), turnaround_width) + "  " +
           pad_left(format_fixed(m.waiting), waiting_width) + "\n";
  }
  out += "\n";
  out += "avg_waiting: " + format_fixed(metrics.avg_waiting) + "\n";
  out += "avg_turnaround: " + format_fixed(metrics.avg_turnaround) + "\n";
  return out;
}

}  // namespace fuzzysched
