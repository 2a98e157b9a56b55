#include "fuzzysched/workload_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fuzzysched/error.hpp"
#include "fuzzysched/format.hpp"

namespace fuzzysched {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kColumns[] = {"id",       "burst",
                                    "arrival",  "priority",
                                    "external_priority", "new_priority"};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

double parse_cell_number(const std::string& cell, const std::string& column,
                         int line) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("line " + std::to_string(line) + ": invalid number '" +
                         cell + "' in column '" + column + "'",
                     line);
  return value;
}

void check_task(const Task& task, int line) {
  auto fail = [&](const std::string& msg) -> ParseError {
    std::string where =
        line > 0 ? "line " + std::to_string(line) + ": " : std::string();
    return ParseError(where + "task '" + task.id + "' " + msg, line);
  };
  if (!std::isfinite(task.burst) || task.burst <= 0.0)
    throw fail("needs a positive burst, got " + format_number(task.burst));
  if (!std::isfinite(task.arrival) || task.arrival < 0.0)
    throw fail("needs a non-negative arrival, got " +
               format_number(task.arrival));
  if (!std::isfinite(task.static_priority))
    throw fail("needs a finite priority");
  if (task.external_priority && !std::isfinite(*task.external_priority))
    throw fail("needs a finite external_priority");
  if (task.preset_new_priority && !std::isfinite(*task.preset_new_priority))
    throw fail("needs a finite new_priority");
}

void convert_parse_error(const json::parse_error& err, std::string_view text) {
  int line = 1;
  int column = 1;
  std::size_t limit = std::min(text.size(), err.byte);
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(err.what(), line, column);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buffer.str();
}

}  // namespace

WorkloadDocument parse_workload_csv(std::string_view text, std::string name) {
  WorkloadDocument doc{std::move(name), {}};

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::map<std::string, std::size_t> columns;  // name -> cell index
  std::size_t header_width = 0;
  std::map<std::string, int> id_lines;

  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    if (trim(raw).empty()) continue;

    std::vector<std::string> cells = split_row(raw);

    if (columns.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string column = lowercase(cells[i]);
        if (std::find(std::begin(kColumns), std::end(kColumns), column) ==
            std::end(kColumns))
          throw ParseError("line " + std::to_string(line_no) +
                               ": unknown column '" + cells[i] + "'",
                           line_no);
        if (!columns.try_emplace(column, i).second)
          throw ParseError("line " + std::to_string(line_no) +
                               ": duplicate column '" + column + "'",
                           line_no);
      }
      for (const char* required : {"id", "burst", "priority"})
        if (!columns.count(required))
          throw ParseError("line " + std::to_string(line_no) +
                               ": header is missing required column '" +
                               std::string(required) + "'",
                           line_no);
      header_width = cells.size();
      continue;
    }

    if (cells.size() != header_width)
      throw ParseError("line " + std::to_string(line_no) + ": row has " +
                           std::to_string(cells.size()) +
                           " fields but the header has " +
                           std::to_string(header_width),
                       line_no);

    auto cell = [&](const char* column) -> const std::string* {
      auto it = columns.find(column);
      return it == columns.end() ? nullptr : &cells[it->second];
    };
    auto required_number = [&](const char* column) {
      const std::string* c = cell(column);
      if (c->empty())
        throw ParseError("line " + std::to_string(line_no) +
                             ": empty value in column '" + column + "'",
                         line_no);
      return parse_cell_number(*c, column, line_no);
    };
    auto optional_number = [&](const char* column) -> std::optional<double> {
      const std::string* c = cell(column);
      if (!c || c->empty()) return std::nullopt;
      return parse_cell_number(*c, column, line_no);
    };

    Task task;
    task.id = *cell("id");
    if (task.id.empty())
      throw ParseError(
          "line " + std::to_string(line_no) + ": task id must not be empty",
          line_no);
    task.burst = required_number("burst");
    task.static_priority = required_number("priority");
    task.arrival = optional_number("arrival").value_or(0.0);
    task.external_priority = optional_number("external_priority");
    task.preset_new_priority = optional_number("new_priority");
    check_task(task, line_no);

    auto [it, inserted] = id_lines.try_emplace(task.id, line_no);
    if (!inserted)
      throw ParseError("duplicate task id '" + task.id + "' (lines " +
                           std::to_string(it->second) + " and " +
                           std::to_string(line_no) + ")",
                       line_no);
    doc.tasks.push_back(std::move(task));
  }

  return doc;
}

std::string emit_workload_csv(const WorkloadDocument& doc) {
  bool any_external = std::any_of(doc.tasks.begin(), doc.tasks.end(),
                                  [](const Task& t) {
                                    return t.external_priority.has_value();
                                  });
  bool any_preset = std::any_of(doc.tasks.begin(), doc.tasks.end(),
                                [](const Task& t) {
                                  return t.preset_new_priority.has_value();
                                });

  std::string out = "id,burst,arrival,priority";
  if (any_external) out += ",external_priority";
  if (any_preset) out += ",new_priority";
  out += '\n';

  for (const Task& task : doc.tasks) {
    out += task.id + ',' + format_number(task.burst) + ',' +
           format_number(task.arrival) + ',' +
           format_number(task.static_priority);
    if (any_external) {
      out += ',';
      if (task.external_priority) out += format_number(*task.external_priority);
    }
    if (any_preset) {
      out += ',';
      if (task.preset_new_priority)
        out += format_number(*task.preset_new_priority);
    }
    out += '\n';
  }
  return out;
}

WorkloadDocument parse_workload_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    convert_parse_error(err, text);
  }
  if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array())
    throw ParseError("workload JSON needs a 'tasks' array");

  WorkloadDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError("workload 'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }

  int index = 0;
  std::map<std::string, int> id_rows;
  for (const json& t : doc["tasks"]) {
    ++index;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("task " + std::to_string(index) + ": " + msg);
    };
    if (!t.is_object()) throw fail("must be an object");
    if (!t.contains("id") || !t["id"].is_string())
      throw fail("needs a string 'id'");
    for (const char* field : {"burst", "priority"})
      if (!t.contains(field) || !t[field].is_number())
        throw fail(std::string("needs a numeric '") + field + "'");
    for (const char* field : {"arrival", "external_priority", "new_priority"})
      if (t.contains(field) && !t[field].is_number())
        throw fail(std::string("field '") + field + "' must be a number");

    Task task;
    task.id = t["id"].get<std::string>();
    if (task.id.empty()) throw fail("task id must not be empty");
    task.burst = t["burst"].get<double>();
    task.static_priority = t["priority"].get<double>();
    if (t.contains("arrival")) task.arrival = t["arrival"].get<double>();
    if (t.contains("external_priority"))
      task.external_priority = t["external_priority"].get<double>();
    if (t.contains("new_priority"))
      task.preset_new_priority = t["new_priority"].get<double>();
    check_task(task, 0);

    auto [it, inserted] = id_rows.try_emplace(task.id, index);
    if (!inserted)
      throw ParseError("duplicate task id '" + task.id + "' (tasks " +
                       std::to_string(it->second) + " and " +
                       std::to_string(index) + ")");
    out.tasks.push_back(std::move(task));
  }
  return out;
}

std::string emit_workload_json(const WorkloadDocument& doc) {
  ordered_json out;
  out["name"] = doc.name;
  out["tasks"] = ordered_json::array();
  for (const Task& task : doc.tasks) {
    ordered_json t;
    t["id"] = task.id;
    t["burst"] = task.burst;
    t["arrival"] = task.arrival;
    t["priority"] = task.static_priority;
    if (task.external_priority) t["external_priority"] = *task.external_priority;
    if (task.preset_new_priority) t["new_priority"] = *task.preset_new_priority;
    out["tasks"].push_back(std::move(t));
  }
  return out.dump(2) + "\n";
}

WorkloadDocument load_workload_file(const std::string& path) {
  std::filesystem::path p(path);
  std::string extension = lowercase(p.extension().string());
  if (extension != ".csv" && extension != ".json")
    throw IoError("unsupported workload format '" + extension +
                  "' for '" + path + "' (expected .csv or .json)");

  std::string text = read_file(path);
  std::string stem = p.stem().string();
  if (extension == ".csv") return parse_workload_csv(text, stem);

  WorkloadDocument doc = parse_workload_json(text);
  if (doc.name.empty()) doc.name = stem;
  return doc;
}

}  // namespace fuzzysched
