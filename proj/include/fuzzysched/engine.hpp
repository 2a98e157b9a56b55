#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/membership.hpp"
#include "fuzzysched/rules.hpp"
#include "fuzzysched/variable.hpp"

namespace fuzzysched {

/// One fired consequent: the output term's membership function clipped at
/// the rule activation level.
struct ClippedTerm {
  MembershipFunction mf;
  double level = 0.0;
};

/// Pointwise max of clipped output terms over the output universe.
class AggregatedOutput {
 public:
  AggregatedOutput(double lo, double hi, std::vector<ClippedTerm> parts);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  const std::vector<ClippedTerm>& parts() const noexcept { return parts_; }

  /// Membership of the aggregate at x; zero outside [lo, hi].
  double value_at(double x) const noexcept;

  /// True when no part has a positive activation level.
  bool is_zero() const noexcept;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::vector<ClippedTerm> parts_;
};

using InputDegrees = std::map<std::string, std::map<std::string, double>>;

/// Rule activation: min over antecedent degrees. Throws ConfigError when a
/// rule references a variable or term absent from `degrees`.
double evaluate_rule(const FuzzyRule& rule, const InputDegrees& degrees);

/// Per-output-term clip levels (max over rules sharing a consequent),
/// turned into an aggregate over the output variable's universe.
AggregatedOutput aggregate(const std::vector<std::pair<FuzzyRule, double>>& activations,
                           const LinguisticVariable& output);

/// Exact centroid of the aggregate (closed-form piecewise-linear
/// integration). Throws NoRuleFiredError when the aggregate is all zero.
double defuzzify_centroid(const AggregatedOutput& agg);

/// Mamdani engine: fuzzify -> min-AND rules -> clip -> max-aggregate ->
/// centroid.
class Engine {
 public:
  Engine(LinguisticVariable priority, LinguisticVariable exec_time,
         LinguisticVariable new_priority, RuleBase rules);

  /// Default geometry plus the default 25-rule base.
  static Engine with_defaults();

  /// Builds from a geometry config JSON document; `rules_dsl`, when given,
  /// replaces the default rule base.
  static Engine from_config_json(std::string_view json_text,
                                 std::optional<std::string_view> rules_dsl = {});

  /// Copy of this engine with a different rule base (validated).
  Engine with_rules(RuleBase rules) const;
  Engine with_rules_dsl(std::string_view dsl) const;

  const LinguisticVariable& priority() const noexcept { return priority_; }
  const LinguisticVariable& exec_time() const noexcept { return exec_time_; }
  const LinguisticVariable& new_priority() const noexcept { return new_priority_; }
  const RuleBase& rules() const noexcept { return rules_; }

  /// New Priority for (static priority, execution time). Inputs are clamped
  /// to their universes.
  double infer(double priority_value, double exec_time_value) const;

  /// The aggregate the centroid is taken over; exposed for inspection.
  AggregatedOutput aggregate_for(double priority_value,
                                 double exec_time_value) const;

 private:
  LinguisticVariable priority_;
  LinguisticVariable exec_time_;
  LinguisticVariable new_priority_;
  RuleBase rules_;
};

}  // namespace fuzzysched
