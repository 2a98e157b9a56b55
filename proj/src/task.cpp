#include "fuzzysched/task.hpp"

#include <cmath>
#include <map>

#include "fuzzysched/error.hpp"

namespace fuzzysched {

std::vector<PrioritizedTask> assign_new_priorities(std::span<const Task> tasks,
                                                   const Engine& engine) {
  std::vector<PrioritizedTask> out;
  out.reserve(tasks.size());
  for (const Task& task : tasks)
    out.push_back({task, engine.infer(task.static_priority, task.burst)});
  return out;
}

std::vector<PrioritizedTask> assign_new_priorities(std::span<const Task> tasks,
                                                   PriorityColumn column) {
  std::vector<PrioritizedTask> out;
  out.reserve(tasks.size());
  for (const Task& task : tasks) {
    const std::optional<double>& value =
        column == PriorityColumn::ExternalPriority ? task.external_priority
                                                   : task.preset_new_priority;
    if (!value)
      throw ValidationError(
          "task '" + task.id + "' has no " +
          (column == PriorityColumn::ExternalPriority ? "external_priority"
                                                      : "new_priority") +
          " value to replay");
    out.push_back({task, *value});
  }
  return out;
}

std::vector<std::string> validate_workload(std::span<const Task> tasks) {
  std::vector<std::string> violations;
  std::map<std::string, std::size_t> first_seen;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    std::string label =
        task.id.empty() ? "task #" + std::to_string(i + 1) : "task '" + task.id + "'";
    if (task.id.empty()) violations.push_back(label + " has an empty id");

    auto [it, inserted] = first_seen.try_emplace(task.id, i);
    if (!inserted && !task.id.empty())
      violations.push_back("duplicate task id '" + task.id + "' (rows " +
                           std::to_string(it->second + 1) + " and " +
                           std::to_string(i + 1) + ")");

    if (!std::isfinite(task.burst) || task.burst <= 0.0)
      violations.push_back(label + ": burst must be a positive number");
    if (!std::isfinite(task.arrival) || task.arrival < 0.0)
      violations.push_back(label + ": arrival must be a non-negative number");
    if (!std::isfinite(task.static_priority))
      violations.push_back(label + ": priority must be a finite number");
    if (task.external_priority && !std::isfinite(*task.external_priority))
      violations.push_back(label + ": external_priority must be finite");
    if (task.preset_new_priority && !std::isfinite(*task.preset_new_priority))
      violations.push_back(label + ": new_priority must be finite");
  }
  return violations;
}

}  // namespace fuzzysched
