#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzysched/scheduler.hpp"

namespace fuzzysched {

struct TaskMetrics {
  std::string id;
  double completion = 0.0;
  double turnaround = 0.0;
  double waiting = 0.0;

  bool operator==(const TaskMetrics&) const = default;
};

struct ScheduleMetrics {
  /// Workload order, one entry per task.
  std::vector<TaskMetrics> per_task;
  double avg_waiting = 0.0;
  double avg_turnaround = 0.0;

  bool operator==(const ScheduleMetrics&) const = default;
};

/// completion = last segment end; turnaround = completion - arrival;
/// waiting = turnaround - burst. Throws IntegrityError when a task has no
/// segments, a segment references an unknown task, or segment durations do
/// not sum to the burst.
ScheduleMetrics compute_metrics(const Schedule& schedule);

struct ComparisonEntry {
  std::string policy;
  std::optional<ScheduleMetrics> metrics;
  /// Populated instead of metrics when the policy failed on this workload.
  std::string error;

  bool operator==(const ComparisonEntry&) const = default;
};

struct ComparisonReport {
  std::string workload;
  std::vector<ComparisonEntry> entries;

  bool operator==(const ComparisonReport&) const = default;
};

/// Runs every policy over the workload; a failing policy contributes an
/// error entry without aborting the rest.
ComparisonReport compare(std::span<const Task> tasks,
                         std::span<const Policy> policies,
                         std::string workload_name = {});

}  // namespace fuzzysched
