#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzysched/error.hpp"
#include "fuzzysched/gantt.hpp"
#include "fuzzysched/metrics.hpp"
#include "fuzzysched/report.hpp"
#include "fuzzysched/scheduler.hpp"

using namespace fuzzysched;

namespace {

Task make(std::string id, double burst, double arrival, double priority,
          std::optional<double> external = {},
          std::optional<double> preset = {}) {
  Task t;
  t.id = std::move(id);
  t.burst = burst;
  t.arrival = arrival;
  t.static_priority = priority;
  t.external_priority = external;
  t.preset_new_priority = preset;
  return t;
}

std::vector<Task> study_workload(bool arrivals) {
  return {
      make("P1", 3, arrivals ? 2 : 0, 6, 5.961, 7.66),
      make("P2", 24, arrivals ? 1 : 0, 5, 4.407, 2.72),
      make("P3", 6, arrivals ? 2 : 0, 1, 4.891, 5.41),
      make("P4", 9, arrivals ? 1 : 0, 4, 5.081, 5.31),
      make("P5", 8, 0, 2, 4.967, 4.22),
  };
}

// Collects the value of every `attr="..."` occurrence, in document order.
std::vector<std::string> attr_values(const std::string& svg,
                                     const std::string& attr) {
  std::vector<std::string> values;
  std::string needle = attr + "=\"";
  std::size_t pos = 0;
  while ((pos = svg.find(needle, pos)) != std::string::npos) {
    pos += needle.size();
    std::size_t end = svg.find('"', pos);
    values.push_back(svg.substr(pos, end - pos));
    pos = end;
  }
  return values;
}

}  // namespace

TEST_CASE("ascii gantt lays out boxes proportionally") {
  Schedule s = simulate(study_workload(false), {PolicyKind::Sjf}, "w");
  CHECK(render_gantt(s) ==
        "+----+------+--------+---------+------------------------+\n"
        "| P1 |  P3  |   P5   |   P4    |           P2           |\n"
        "+----+------+--------+---------+------------------------+\n"
        "0    3      9        17        26                       50\n");
}

TEST_CASE("ascii gantt leaves idle stretches open") {
  std::vector<Task> tasks{make("T1", 2, 0, 1), make("T2", 3, 10, 2)};
  Schedule s = simulate(tasks, {PolicyKind::Sjf}, "gap");
  CHECK(render_gantt(s) ==
        "+----+        +----+\n"
        "| T1 |        | T2 |\n"
        "+----+        +----+\n"
        "0    2        10   13\n");
}

TEST_CASE("ascii gantt options") {
  std::vector<Task> tasks{make("T1", 4, 0, 1)};
  Schedule s = simulate(tasks, {PolicyKind::Sjf}, "w");

  RenderOptions no_times;
  no_times.show_times = false;
  CHECK(render_gantt(s, no_times) ==
        "+----+\n"
        "| T1 |\n"
        "+----+\n");

  RenderOptions no_labels;
  no_labels.show_labels = false;
  CHECK(render_gantt(s, no_labels) ==
        "+----+\n"
        "|    |\n"
        "+----+\n"
        "0    4\n");

  Schedule empty = simulate({}, {PolicyKind::Sjf}, "w");
  CHECK(render_gantt(empty) == "0\n");
  CHECK(render_gantt(empty, no_times).empty());

  RenderOptions bad;
  bad.time_scale = 0.0;
  CHECK_THROWS_AS((void)render_gantt(s, bad), ConfigError);
  bad.time_scale = -2.0;
  CHECK_THROWS_AS((void)render_gantt(s, bad), ConfigError);
}

TEST_CASE("svg gantt is proportional to the durations") {
  Schedule s = simulate(study_workload(false), {PolicyKind::Sjf}, "w");
  RenderOptions options;
  options.format = GanttFormat::Svg;
  std::string svg = render_gantt(s, options);

  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(attr_values(svg, "width") ==
        std::vector<std::string>{"620", "36", "72", "96", "108", "288"});

  // Halving the resolution halves every bar.
  options.time_scale = 2.0;
  std::string half = render_gantt(s, options);
  CHECK(attr_values(half, "width") ==
        std::vector<std::string>{"320", "18", "36", "48", "54", "144"});

  // Boundary timestamps appear as text nodes.
  for (const char* stamp : {">0<", ">3<", ">9<", ">17<", ">26<", ">50<"})
    CHECK(svg.find(stamp) != std::string::npos);
}

TEST_CASE("svg gantt escapes markup in task ids") {
  std::vector<Task> tasks{make("a<b>&\"c", 4, 0, 1)};
  Schedule s = simulate(tasks, {PolicyKind::Sjf}, "w");
  RenderOptions options;
  options.format = GanttFormat::Svg;
  std::string svg = render_gantt(s, options);
  CHECK(svg.find("a&lt;b&gt;&amp;&quot;c") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
}

TEST_CASE("json gantt carries the segment list") {
  Schedule s = simulate(study_workload(false), {PolicyKind::Sjf}, "w");
  RenderOptions options;
  options.format = GanttFormat::Json;
  nlohmann::json doc = nlohmann::json::parse(render_gantt(s, options));
  CHECK(doc["workload"] == "w");
  CHECK(doc["policy"] == "sjf");
  REQUIRE(doc["segments"].size() == 5);
  CHECK(doc["segments"][0]["id"] == "P1");
  CHECK(doc["segments"][0]["start"] == 0.0);
  CHECK(doc["segments"][0]["end"] == 3.0);
  CHECK(doc["segments"][4]["id"] == "P2");
  CHECK(doc["segments"][4]["end"] == 50.0);
}

TEST_CASE("comparison table") {
  auto tasks = study_workload(false);
  std::vector<Policy> policies{{PolicyKind::StaticPriority},
                               {PolicyKind::Sjf},
                               {PolicyKind::FuzzyPriority, nullptr, true},
                               {PolicyKind::ModifiedFuzzy, nullptr, true}};
  ComparisonReport report = compare(tasks, policies, "case_study_1_no_arrival");
  CHECK(emit_report(report, ReportFormat::Table) ==
        "workload: case_study_1_no_arrival\n"
        "policy          avg_waiting  avg_turnaround\n"
        "priority              22.00           32.00\n"
        "sjf                   11.00           21.00\n"
        "fuzzy_priority        12.20           22.20\n"
        "modified_fuzzy        11.20           21.20\n");
}

TEST_CASE("comparison table shows per-policy failures") {
  auto tasks = study_workload(false);
  for (Task& t : tasks) t.external_priority.reset();
  std::vector<Policy> policies{{PolicyKind::Sjf},
                               {PolicyKind::FuzzyPriority, nullptr, true}};
  ComparisonReport report = compare(tasks, policies, "w");
  std::string table = emit_report(report, ReportFormat::Table);
  CHECK(table.find("sjf") != std::string::npos);
  CHECK(table.find("  error: ") != std::string::npos);
}

TEST_CASE("comparison JSON round-trips") {
  auto tasks = study_workload(true);
  std::vector<Policy> policies{{PolicyKind::Sjf},
                               {PolicyKind::ModifiedFuzzy, nullptr, true}};
  ComparisonReport report = compare(tasks, policies, "rt");
  ComparisonReport again =
      parse_report_json(emit_report(report, ReportFormat::Json));
  CHECK(again == report);

  CHECK_THROWS_AS(parse_report_json("{"), ParseError);
  CHECK_THROWS_AS(parse_report_json("{\"entries\": [{}]}"), ParseError);
}

TEST_CASE("schedule JSON uses the documented key order") {
  std::vector<Task> tasks{make("A", 2, 0, 1)};
  Schedule s = simulate(tasks, {PolicyKind::Sjf}, "tiny");
  std::string json = schedule_to_json(s, compute_metrics(s));
  CHECK(json ==
        "{\n"
        "  \"workload\": \"tiny\",\n"
        "  \"policy\": \"sjf\",\n"
        "  \"segments\": [\n"
        "    {\n"
        "      \"id\": \"A\",\n"
        "      \"start\": 0.0,\n"
        "      \"end\": 2.0\n"
        "    }\n"
        "  ],\n"
        "  \"metrics\": {\n"
        "    \"per_task\": [\n"
        "      {\n"
        "        \"id\": \"A\",\n"
        "        \"completion\": 2.0,\n"
        "        \"turnaround\": 2.0,\n"
        "        \"waiting\": 0.0\n"
        "      }\n"
        "    ],\n"
        "    \"avg_waiting\": 0.0,\n"
        "    \"avg_turnaround\": 2.0\n"
        "  }\n"
        "}\n");
}

TEST_CASE("schedule table combines gantt, task metrics and averages") {
  Schedule s = simulate(study_workload(true),
                        {PolicyKind::ModifiedFuzzy, nullptr, true},
                        "case_study_1_arrival");
  CHECK(schedule_table(s, compute_metrics(s)) ==
        "workload: case_study_1_arrival\n"
        "policy: modified_fuzzy\n"
        "\n"
        "+----+----+----+------+--------+-------+------------------------+\n"
        "| P5 | P4 | P1 |  P3  |   P4   |  P5   |           P2           |\n"
        "+----+----+----+------+--------+-------+------------------------+\n"
        "0    1    2    5      11       19      26                       50\n"
        "\n"
        "task  completion  turnaround  waiting\n"
        "P1          5.00        3.00     0.00\n"
        "P2         50.00       49.00    25.00\n"
        "P3         11.00        9.00     3.00\n"
        "P4         19.00       18.00     9.00\n"
        "P5         26.00       26.00    18.00\n"
        "\n"
        "avg_waiting: 11.00\n"
        "avg_turnaround: 21.00\n");
}
