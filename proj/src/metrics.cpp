#include "fuzzysched/metrics.hpp"

#include <cmath>
#include <map>

#include "fuzzysched/error.hpp"
#include "fuzzysched/format.hpp"

namespace fuzzysched {

ScheduleMetrics compute_metrics(const Schedule& schedule) {
  struct Service {
    double total = 0.0;
    double completion = 0.0;
    double first_start = 0.0;
    bool seen = false;
  };
  std::map<std::string, const Task*> tasks;
  for (const Task& task : schedule.tasks) tasks[task.id] = &task;

  std::map<std::string, Service> service;
  double prev_end = -1.0;
  for (const Segment& seg : schedule.segments) {
    if (!tasks.count(seg.id))
      throw IntegrityError("segment references unknown task '" + seg.id + "'");
    if (!(seg.start < seg.end))
      throw IntegrityError("segment for task '" + seg.id +
                           "' has non-positive length");
    if (seg.start < prev_end)
      throw IntegrityError("segments overlap or are out of order at task '" +
                           seg.id + "'");
    prev_end = seg.end;

    Service& s = service[seg.id];
    if (!s.seen) {
      s.first_start = seg.start;
      s.seen = true;
    }
    s.total += seg.end - seg.start;
    s.completion = seg.end;
  }

  ScheduleMetrics metrics;
  double waiting_sum = 0.0;
  double turnaround_sum = 0.0;
  for (const Task& task : schedule.tasks) {
    auto it = service.find(task.id);
    if (it == service.end())
      throw IntegrityError("task '" + task.id + "' never ran");
    const Service& s = it->second;
    if (std::fabs(s.total - task.burst) > 1e-9)
      throw IntegrityError("task '" + task.id + "' ran for " +
                           format_number(s.total) + " units but its burst is " +
                           format_number(task.burst));
    if (s.first_start < task.arrival)
      throw IntegrityError("task '" + task.id + "' started before it arrived");

    double turnaround = s.completion - task.arrival;
    double waiting = turnaround - task.burst;
    metrics.per_task.push_back({task.id, s.completion, turnaround, waiting});
    turnaround_sum += turnaround;
    waiting_sum += waiting;
  }

  if (!metrics.per_task.empty()) {
    double n = static_cast<double>(metrics.per_task.size());
    metrics.avg_waiting = waiting_sum / n;
    metrics.avg_turnaround = turnaround_sum / n;
  }
  return metrics;
}

ComparisonReport compare(std::span<const Task> tasks,
                         std::span<const Policy> policies,
                         std::string workload_name) {
  ComparisonReport report{std::move(workload_name), {}};
  for (const Policy& policy : policies) {
    ComparisonEntry entry{std::string(policy_name(policy.kind)), {}, {}};
    try {
      entry.metrics = compute_metrics(simulate(tasks, policy, report.workload));
    } catch (const Error& err) {
      entry.error = err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace fuzzysched
