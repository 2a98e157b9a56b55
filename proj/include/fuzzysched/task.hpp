#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzysched/engine.hpp"

namespace fuzzysched {

struct Task {
  std::string id;
  double burst = 0.0;
  double arrival = 0.0;
  double static_priority = 0.0;
  /// Precomputed fuzzy priority carried in a workload file (replay input for
  /// the fuzzy_priority policy).
  std::optional<double> external_priority;
  /// Precomputed New Priority (replay input for the modified_fuzzy policy).
  std::optional<double> preset_new_priority;

  bool operator==(const Task&) const = default;
};

struct PrioritizedTask {
  Task task;
  double new_priority = 0.0;
};

enum class PriorityColumn { ExternalPriority, PresetNewPriority };

/// Runs the engine on every task's (static_priority, burst).
std::vector<PrioritizedTask> assign_new_priorities(std::span<const Task> tasks,
                                                   const Engine& engine);

/// Replays priorities from a workload column; throws ValidationError naming
/// the first task missing the column.
std::vector<PrioritizedTask> assign_new_priorities(std::span<const Task> tasks,
                                                   PriorityColumn column);

/// Structural violations: empty/duplicate ids, non-positive burst, negative
/// arrival, non-finite numerics. Empty vector means valid.
std::vector<std::string> validate_workload(std::span<const Task> tasks);

}  // namespace fuzzysched
