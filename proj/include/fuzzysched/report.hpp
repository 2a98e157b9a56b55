#pragma once

#include <string>
#include <string_view>

#include "fuzzysched/gantt.hpp"
#include "fuzzysched/metrics.hpp"

namespace fuzzysched {

enum class ReportFormat { Table, Json };

/// Comparison report as an aligned text table or a JSON document.
std::string emit_report(const ComparisonReport& report, ReportFormat format);

/// Inverse of emit_report(..., Json); error entries round-trip too.
ComparisonReport parse_report_json(std::string_view text);

/// Full schedule document: workload, policy, segments, per-task metrics and
/// averages.
std::string schedule_to_json(const Schedule& schedule,
                             const ScheduleMetrics& metrics);

/// Human-readable schedule report: Gantt chart, per-task metrics table, and
/// average lines.
std::string schedule_table(const Schedule& schedule,
                           const ScheduleMetrics& metrics,
                           const RenderOptions& gantt_options = {});

}  // namespace fuzzysched
