#include "fuzzysched/gantt.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "fuzzysched/error.hpp"
#include "fuzzysched/format.hpp"

namespace fuzzysched {
namespace {

// One drawn cell: either a task segment or an idle gap.
struct Cell {
  std::string label;
  double start = 0.0;
  double end = 0.0;
  bool idle = false;
};

std::vector<Cell> build_cells(const Schedule& schedule) {
  std::vector<Cell> cells;
  double cursor = 0.0;
  for (const Segment& seg : schedule.segments) {
    if (seg.start > cursor)
      cells.push_back({"", cursor, seg.start, true});
    cells.push_back({seg.id, seg.start, seg.end, false});
    cursor = seg.end;
  }
  return cells;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_at(std::string& row, std::size_t pos, const std::string& text) {
  if (row.size() < pos + text.size()) row.resize(pos + text.size(), ' ');
  row.replace(pos, text.size(), text);
}

std::string render_ascii(const Schedule& schedule,
                         const RenderOptions& options) {
  std::vector<Cell> cells = build_cells(schedule);
  if (cells.empty()) return options.show_times ? "0\n" : "";

  // Inner width per cell: duration at the chosen scale, stretched so the
  // label and the start timestamp both fit before the next boundary.
  std::vector<std::size_t> widths;
  widths.reserve(cells.size());
  for (const Cell& cell : cells) {
    auto width = static_cast<std::size_t>(
        std::ceil((cell.end - cell.start) / options.time_scale));
    width = std::max<std::size_t>(width, 1);
    if (!cell.idle && options.show_labels)
      width = std::max(width, cell.label.size() + 2);
    if (options.show_times)
      width = std::max(width, format_time(cell.start).size() + 1);
    widths.push_back(width);
  }

  // Cell i spans columns [pos_i, pos_i + width_i + 1]; adjacent cells share
  // the boundary column. Idle cells draw nothing, leaving a gap in the box.
  std::string border;
  std::string labels;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].idle) {
      std::string text = options.show_labels ? cells[i].label : "";
      std::size_t pad = widths[i] - text.size();
      write_at(border, pos, "+" + std::string(widths[i], '-') + "+");
      write_at(labels, pos,
               "|" + std::string(pad / 2, ' ') + text +
                   std::string(pad - pad / 2, ' ') + "|");
    }
    pos += widths[i] + 1;
  }

  std::string out = border + "\n" + labels + "\n" + border + "\n";
  if (options.show_times) {
    std::string times;
    pos = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      write_at(times, pos, format_time(cells[i].start));
      pos += widths[i] + 1;
    }
    write_at(times, pos, format_time(cells.back().end));
    out += times + "\n";
  }
  return out;
}

std::string render_svg(const Schedule& schedule, const RenderOptions& options) {
  constexpr double kMargin = 10.0;
  constexpr double kBarY = 20.0;
  constexpr double kBarHeight = 30.0;
  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                   "#76b7b2", "#edc948", "#b07aa1", "#ff9da7",
                                   "#9c755f", "#bab0ac"};

  double px_per_unit = 12.0 / options.time_scale;
  double span = 0.0;
  for (const Segment& seg : schedule.segments) span = std::max(span, seg.end);

  double width = 2 * kMargin + span * px_per_unit;
  double height = kBarY + kBarHeight + (options.show_times ? 25.0 : 10.0);

  std::map<std::string, const char*> colors;
  auto color_of = [&](const std::string& id) {
    auto [it, inserted] = colors.try_emplace(
        id, kPalette[colors.size() % std::size(kPalette)]);
    return it->second;
  };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    format_number(width) + "\" height=\"" +
                    format_number(height) + "\" viewBox=\"0 0 " +
                    format_number(width) + " " + format_number(height) +
                    "\">\n";

  for (const Segment& seg : schedule.segments) {
    double x = kMargin + seg.start * px_per_unit;
    double w = (seg.end - seg.start) * px_per_unit;
    out += "  <rect x=\"" + format_number(x) + "\" y=\"" +
           format_number(kBarY) + "\" width=\"" + format_number(w) +
           "\" height=\"" + format_number(kBarHeight) + "\" fill=\"" +
           color_of(seg.id) + "\" stroke=\"#333\"/>\n";
    if (options.show_labels)
      out += "  <text x=\"" + format_number(x + w / 2) + "\" y=\"" +
             format_number(kBarY + kBarHeight / 2 + 4) +
             "\" text-anchor=\"middle\" font-family=\"monospace\" "
             "font-size=\"12\">" +
             xml_escape(seg.id) + "</text>\n";
  }

  if (options.show_times) {
    std::vector<double> boundaries = {0.0};
    for (const Segment& seg : schedule.segments) {
      boundaries.push_back(seg.start);
      boundaries.push_back(seg.end);
    }
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()),
                     boundaries.end());
    for (double b : boundaries)
      out += "  <text x=\"" + format_number(kMargin + b * px_per_unit) +
             "\" y=\"" + format_number(kBarY + kBarHeight + 15) +
             "\" text-anchor=\"middle\" font-family=\"monospace\" "
             "font-size=\"10\">" +
             format_time(b) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

std::string render_json(const Schedule& schedule) {
  nlohmann::ordered_json out;
  out["workload"] = schedule.workload_name;
  out["policy"] = schedule.policy;
  out["segments"] = nlohmann::ordered_json::array();
  for (const Segment& seg : schedule.segments) {
    nlohmann::ordered_json s;
    s["id"] = seg.id;
    s["start"] = seg.start;
    s["end"] = seg.end;
    out["segments"].push_back(std::move(s));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string render_gantt(const Schedule& schedule,
                         const RenderOptions& options) {
  if (!std::isfinite(options.time_scale) || options.time_scale <= 0.0)
    throw ConfigError("time_scale must be a positive number");

  switch (options.format) {
    case GanttFormat::Ascii:
      return render_ascii(schedule, options);
    case GanttFormat::Svg:
      return render_svg(schedule, options);
    case GanttFormat::Json:
      return render_json(schedule);
  }
  throw ConfigError("unknown gantt format");
}

}  // namespace fuzzysched
