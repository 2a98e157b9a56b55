#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzysched.h"

namespace {

// Exit codes: 0 success, 1 usage error, 2 data/validation error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct DataError {
  std::string message;
};

[[noreturn]] void fail_data(const std::string& message) {
  throw DataError{message};
}

[[noreturn]] void fail_api() {
  throw DataError{fsched_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_data("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct EngineDeleter {
  void operator()(fsched_engine* e) const { fsched_engine_destroy(e); }
};
struct WorkloadDeleter {
  void operator()(fsched_workload* w) const { fsched_workload_destroy(w); }
};
struct ScheduleDeleter {
  void operator()(fsched_schedule* s) const { fsched_schedule_destroy(s); }
};
struct ReportDeleter {
  void operator()(fsched_report* r) const { fsched_report_destroy(r); }
};

using EnginePtr = std::unique_ptr<fsched_engine, EngineDeleter>;
using WorkloadPtr = std::unique_ptr<fsched_workload, WorkloadDeleter>;
using SchedulePtr = std::unique_ptr<fsched_schedule, ScheduleDeleter>;
using ReportPtr = std::unique_ptr<fsched_report, ReportDeleter>;

std::string take_string(char* text) {
  std::string out = text ? text : "";
  fsched_string_free(text);
  return out;
}

std::string normalize(const std::string& name) {
  std::string out;
  for (char c : name)
    out += c == '-' ? '_'
                    : static_cast<char>(
                          std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<fsched_policy> parse_policy(const std::string& name) {
  std::string n = normalize(name);
  if (n == "sjf" || n == "shortest_job_first") return FSCHED_POLICY_SJF;
  if (n == "priority" || n == "static_priority") return FSCHED_POLICY_PRIORITY;
  if (n == "fuzzy_priority" || n == "fuzzy") return FSCHED_POLICY_FUZZY_PRIORITY;
  if (n == "modified_fuzzy" || n == "modified_fuzzy_priority")
    return FSCHED_POLICY_MODIFIED_FUZZY;
  return std::nullopt;
}

bool policy_is_fuzzy(fsched_policy policy) {
  return policy == FSCHED_POLICY_FUZZY_PRIORITY ||
         policy == FSCHED_POLICY_MODIFIED_FUZZY;
}

// Shared --config/--rules handling; the engine is built only when needed.
struct EngineOptions {
  std::string config_path;
  std::string rules_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "Membership geometry config (JSON)")
        ->envname("FUZZYSCHED_CONFIG");
    cmd->add_option("--rules", rules_path, "Rule DSL file");
  }

  EnginePtr build() const {
    std::string config_text;
    std::string rules_text;
    if (!config_path.empty()) config_text = read_file(config_path);
    if (!rules_path.empty()) rules_text = read_file(rules_path);

    fsched_engine* engine = nullptr;
    if (fsched_engine_create(config_path.empty() ? nullptr : config_text.c_str(),
                             rules_path.empty() ? nullptr : rules_text.c_str(),
                             &engine))
      fail_api();
    return EnginePtr(engine);
  }
};

WorkloadPtr load_workload(const std::string& path) {
  fsched_workload* workload = nullptr;
  if (fsched_workload_load(path.c_str(), &workload)) fail_api();
  return WorkloadPtr(workload);
}

int run_schedule(const std::string& workload_path,
                 const std::string& policy_name, bool replay,
                 const std::string& output, double scale,
                 const EngineOptions& engine_options) {
  auto policy = parse_policy(policy_name);
  if (!policy) fail_data("unknown policy '" + policy_name + "'");

  EnginePtr engine;
  if (policy_is_fuzzy(*policy) && !replay) engine = engine_options.build();

  WorkloadPtr workload = load_workload(workload_path);
  fsched_schedule* raw = nullptr;
  if (fsched_simulate(workload.get(), *policy, engine.get(), replay ? 1 : 0,
                      &raw))
    fail_api();
  SchedulePtr schedule(raw);

  char* text = nullptr;
  if (output == "table") {
    if (fsched_schedule_table(schedule.get(), scale, &text)) fail_api();
  } else if (output == "json") {
    if (fsched_schedule_to_json(schedule.get(), &text)) fail_api();
  } else if (output == "ascii") {
    if (fsched_schedule_render(schedule.get(), FSCHED_GANTT_ASCII, scale,
                               &text))
      fail_api();
  } else {
    if (fsched_schedule_render(schedule.get(), FSCHED_GANTT_SVG, scale, &text))
      fail_api();
  }
  std::fputs(take_string(text).c_str(), stdout);
  return kExitOk;
}

int run_compare(const std::string& workload_path,
                const std::vector<std::string>& policy_names, bool replay,
                const std::string& output,
                const EngineOptions& engine_options) {
  std::vector<fsched_policy> policies;
  bool any_fuzzy = false;
  for (const std::string& name : policy_names) {
    auto policy = parse_policy(name);
    if (!policy) fail_data("unknown policy '" + name + "'");
    policies.push_back(*policy);
    any_fuzzy = any_fuzzy || policy_is_fuzzy(*policy);
  }

  EnginePtr engine;
  if (any_fuzzy && !replay) engine = engine_options.build();

  WorkloadPtr workload = load_workload(workload_path);
  fsched_report* raw = nullptr;
  if (fsched_compare(workload.get(), policies.data(), policies.size(),
                     engine.get(), replay ? 1 : 0, &raw))
    fail_api();
  ReportPtr report(raw);

  char* text = nullptr;
  if (fsched_report_render(report.get(),
                           output == "json" ? FSCHED_REPORT_JSON
                                            : FSCHED_REPORT_TABLE,
                           &text))
    fail_api();
  std::fputs(take_string(text).c_str(), stdout);
  return kExitOk;
}

int run_infer(double priority, double exec_time,
              const EngineOptions& engine_options) {
  EnginePtr engine = engine_options.build();
  double new_priority = 0.0;
  if (fsched_engine_infer(engine.get(), priority, exec_time, &new_priority))
    fail_api();
  std::printf("%.2f\n", new_priority);
  return kExitOk;
}

int run_rules_check(const std::string& rules_path,
                    const EngineOptions& engine_options) {
  EnginePtr engine = engine_options.build();
  size_t count = 0;
  if (rules_path == "default") {
    if (fsched_engine_rule_count(engine.get(), &count)) fail_api();
  } else {
    std::string text = read_file(rules_path);
    if (fsched_engine_check_rules(engine.get(), text.c_str(), &count))
      fail_api();
  }
  std::printf("%zu rules OK\n", count);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy-priority CPU scheduling toolkit"};
  app.require_subcommand(1);

  std::string workload_path;
  std::string policy_name;
  std::vector<std::string> policy_names = {"priority", "sjf", "fuzzy_priority",
                                           "modified_fuzzy"};
  std::string output;
  bool replay = false;
  double scale = 1.0;
  double infer_priority = 0.0;
  double infer_exec_time = 0.0;
  std::string rules_file;
  EngineOptions engine_options;

  CLI::App* schedule = app.add_subcommand(
      "schedule", "Simulate one policy and print the schedule");
  schedule->add_option("--workload", workload_path, "Workload file (.csv/.json)")
      ->required();
  schedule->add_option("--policy", policy_name,
                       "sjf | priority | fuzzy_priority | modified_fuzzy")
      ->required();
  schedule->add_flag("--replay", replay,
                     "Replay recorded priority columns instead of inferring");
  schedule
      ->add_option("--output", output, "table | json | ascii | svg")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "json", "ascii", "svg"}));
  schedule->add_option("--scale", scale, "Gantt time units per column")
      ->check(CLI::PositiveNumber);
  engine_options.attach(schedule);

  CLI::App* compare =
      app.add_subcommand("compare", "Run several policies and compare metrics");
  compare->add_option("--workload", workload_path, "Workload file (.csv/.json)")
      ->required();
  compare->add_option("--policies", policy_names,
                      "Comma-separated policy list")
      ->delimiter(',');
  compare->add_flag("--replay", replay,
                    "Replay recorded priority columns instead of inferring");
  compare->add_option("--output", output, "table | json")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "json"}));
  engine_options.attach(compare);

  CLI::App* infer = app.add_subcommand(
      "infer", "Print the New Priority for a (priority, exec_time) pair");
  infer->add_option("priority", infer_priority, "Static priority")->required();
  infer->add_option("exec_time", infer_exec_time, "Execution time")->required();
  engine_options.attach(infer);

  CLI::App* rules_check = app.add_subcommand(
      "rules-check", "Validate a rule DSL file and print the rule count");
  rules_check->add_option("file", rules_file, "Rule DSL file, or 'default'")
      ->required();
  engine_options.attach(rules_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e, std::cout, std::cerr);
    return kExitUsage;
  }

  try {
    if (schedule->parsed())
      return run_schedule(workload_path, policy_name, replay, output, scale,
                          engine_options);
    if (compare->parsed())
      return run_compare(workload_path, policy_names, replay, output,
                         engine_options);
    if (infer->parsed())
      return run_infer(infer_priority, infer_exec_time, engine_options);
    if (rules_check->parsed())
      return run_rules_check(rules_file, engine_options);
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitData;
  }
  return kExitUsage;
}
