#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/engine.hpp"
#include "fuzzysched/task.hpp"

namespace fuzzysched {

enum class PolicyKind { Sjf, StaticPriority, FuzzyPriority, ModifiedFuzzy };

struct Policy {
  PolicyKind kind = PolicyKind::Sjf;
  /// Engine used to derive priorities for the fuzzy policies; when null,
  /// priorities must come from workload columns.
  const Engine* engine = nullptr;
  /// Force replay from workload columns even when an engine is available.
  bool replay = false;
};

/// Canonical name: "sjf", "priority", "fuzzy_priority", "modified_fuzzy".
std::string_view policy_name(PolicyKind kind) noexcept;

/// Accepts canonical names plus common aliases ("static_priority",
/// hyphenated spellings). Throws ConfigError on unknown names.
PolicyKind parse_policy(std::string_view name);

/// Contiguous run of one task on the CPU.
struct Segment {
  std::string id;
  double start = 0.0;
  double end = 0.0;

  bool operator==(const Segment&) const = default;
};

struct Schedule {
  std::string workload_name;
  std::string policy;
  std::vector<Task> tasks;
  std::vector<Segment> segments;

  bool operator==(const Schedule&) const = default;
};

/// Structural checks plus the priority columns this policy would need.
std::vector<std::string> validate_workload(std::span<const Task> tasks,
                                           const Policy& policy);

/// Simulates the policy over the workload. sjf, priority and fuzzy_priority
/// are non-preemptive; modified_fuzzy preempts at arrival instants when the
/// newcomer's New Priority is strictly higher. Ties break by earlier
/// arrival, then id. The CPU idles to the next arrival when nothing is
/// ready. An empty workload yields an empty schedule. Throws
/// ValidationError on invalid workloads or missing replay columns.
Schedule simulate(std::span<const Task> tasks, const Policy& policy,
                  std::string workload_name = {});

}  // namespace fuzzysched
