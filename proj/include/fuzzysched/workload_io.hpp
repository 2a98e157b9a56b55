#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/task.hpp"

namespace fuzzysched {

struct WorkloadDocument {
  std::string name;
  std::vector<Task> tasks;

  bool operator==(const WorkloadDocument&) const = default;
};

/// Header-driven CSV: required columns id, burst, priority; optional
/// arrival (default 0), external_priority, new_priority. `#` starts a
/// comment, blank lines are skipped. Throws ParseError with 1-based line
/// numbers on malformed rows, bad numerics, non-positive bursts, negative
/// arrivals or duplicate ids.
WorkloadDocument parse_workload_csv(std::string_view text,
                                    std::string name = {});

std::string emit_workload_csv(const WorkloadDocument& doc);

/// {"name": ..., "tasks": [{"id", "burst", "arrival", "priority",
/// "external_priority"?, "new_priority"?}]}; optional fields are omitted
/// when absent.
WorkloadDocument parse_workload_json(std::string_view text);

std::string emit_workload_json(const WorkloadDocument& doc);

/// Dispatches on extension (.csv / .json, case-insensitive); the workload
/// name defaults to the file stem. Throws IoError on unreadable paths or
/// unknown extensions.
WorkloadDocument load_workload_file(const std::string& path);

}  // namespace fuzzysched
