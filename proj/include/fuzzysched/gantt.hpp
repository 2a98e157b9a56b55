#pragma once

#include <string>

#include "fuzzysched/scheduler.hpp"

namespace fuzzysched {

enum class GanttFormat { Ascii, Svg, Json };

struct RenderOptions {
  GanttFormat format = GanttFormat::Ascii;
  /// Time units per character column (ascii) or per pixel group (svg).
  double time_scale = 1.0;
  bool show_labels = true;
  bool show_times = true;
};

/// Renders the schedule's segments as a single-lane Gantt chart. Throws
/// ConfigError on a non-positive time_scale.
std::string render_gantt(const Schedule& schedule,
                         const RenderOptions& options = {});

}  // namespace fuzzysched
