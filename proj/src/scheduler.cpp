#include "fuzzysched/scheduler.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "fuzzysched/error.hpp"

namespace fuzzysched {
namespace {

std::string normalize_policy(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name)
    out += c == '-' ? '_' : static_cast<char>(std::tolower(
                                static_cast<unsigned char>(c)));
  return out;
}

// Resolves the dispatch key for one task; higher key runs first.
double dispatch_key(const Task& task, const Policy& policy) {
  switch (policy.kind) {
    case PolicyKind::Sjf:
      return -task.burst;
    case PolicyKind::StaticPriority:
      return task.static_priority;
    case PolicyKind::FuzzyPriority:
      if (!policy.replay && policy.engine)
        return policy.engine->infer(task.static_priority, task.burst);
      if (task.external_priority) return *task.external_priority;
      throw ValidationError("policy fuzzy_priority: task '" + task.id +
                            "' has no external_priority value and no engine "
                            "is configured");
    case PolicyKind::ModifiedFuzzy:
      if (!policy.replay && policy.engine)
        return policy.engine->infer(task.static_priority, task.burst);
      if (task.preset_new_priority) return *task.preset_new_priority;
      if (task.external_priority) return *task.external_priority;
      throw ValidationError("policy modified_fuzzy: task '" + task.id +
                            "' has no new_priority or external_priority "
                            "value and no engine is configured");
  }
  throw ConfigError("unknown policy kind");
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

std::string_view policy_name(PolicyKind kind) noexcept {
  switch (kind) {
    case PolicyKind::Sjf:
      return "sjf";
    case PolicyKind::StaticPriority:
      return "priority";
    case PolicyKind::FuzzyPriority:
      return "fuzzy_priority";
    case PolicyKind::ModifiedFuzzy:
      return "modified_fuzzy";
  }
  return "unknown";
}

PolicyKind parse_policy(std::string_view name) {
  std::string n = normalize_policy(name);
  if (n == "sjf" || n == "shortest_job_first") return PolicyKind::Sjf;
  if (n == "priority" || n == "static_priority") return PolicyKind::StaticPriority;
  if (n == "fuzzy_priority" || n == "fuzzy") return PolicyKind::FuzzyPriority;
  if (n == "modified_fuzzy" || n == "modified_fuzzy_priority")
    return PolicyKind::ModifiedFuzzy;
  throw ConfigError("unknown policy '" + std::string(name) +
                    "' (expected sjf, priority, fuzzy_priority or "
                    "modified_fuzzy)");
}

std::vector<std::string> validate_workload(std::span<const Task> tasks,
                                           const Policy& policy) {
  std::vector<std::string> violations = validate_workload(tasks);
  bool needs_columns = !policy.engine || policy.replay;
  if (policy.kind == PolicyKind::FuzzyPriority && needs_columns) {
    for (const Task& task : tasks)
      if (!task.external_priority)
        violations.push_back("task '" + task.id +
                             "' is missing external_priority required by "
                             "fuzzy_priority");
  }
  if (policy.kind == PolicyKind::ModifiedFuzzy && needs_columns) {
    for (const Task& task : tasks)
      if (!task.preset_new_priority && !task.external_priority)
        violations.push_back("task '" + task.id +
                             "' is missing new_priority required by "
                             "modified_fuzzy");
  }
  return violations;
}

Schedule simulate(std::span<const Task> tasks, const Policy& policy,
                  std::string workload_name) {
  if (auto violations = validate_workload(tasks, policy); !violations.empty())
    throw ValidationError("invalid workload: " + join(violations, "; "));

  Schedule schedule{std::move(workload_name),
                    std::string(policy_name(policy.kind)),
                    {tasks.begin(), tasks.end()},
                    {}};

  struct Entry {
    const Task* task;
    double key;
    double remaining;
    bool done;
  };
  std::vector<Entry> entries;
  entries.reserve(tasks.size());
  for (const Task& task : tasks)
    entries.push_back({&task, dispatch_key(task, policy), task.burst, false});

  const bool preemptive = policy.kind == PolicyKind::ModifiedFuzzy;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  double now = 0.0;
  std::size_t completed = 0;
  while (completed < entries.size()) {
    Entry* best = nullptr;
    double next_arrival = kInf;
    for (Entry& e : entries) {
      if (e.done) continue;
      if (e.task->arrival > now) {
        next_arrival = std::min(next_arrival, e.task->arrival);
        continue;
      }
      if (!best || e.key > best->key ||
          (e.key == best->key &&
           (e.task->arrival < best->task->arrival ||
            (e.task->arrival == best->task->arrival &&
             e.task->id < best->task->id))))
        best = &e;
    }

    if (!best) {
      now = next_arrival;
      continue;
    }

    double completion = now + best->remaining;
    double end = completion;
    if (preemptive && next_arrival < completion) end = next_arrival;

    schedule.segments.push_back({best->task->id, now, end});
    if (end == completion) {
      best->remaining = 0.0;
      best->done = true;
      ++completed;
    } else {
      best->remaining -= end - now;
    }
    now = end;
  }

  // Preemption checks split segments at every arrival; merge back the runs
  // that were never actually preempted.
  std::vector<Segment> merged;
  for (Segment& seg : schedule.segments) {
    if (!merged.empty() && merged.back().id == seg.id &&
        merged.back().end == seg.start)
      merged.back().end = seg.end;
    else
      merged.push_back(std::move(seg));
  }
  schedule.segments = std::move(merged);
  return schedule;
}

}  // namespace fuzzysched
