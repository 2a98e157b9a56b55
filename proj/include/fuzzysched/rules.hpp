#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzysched/variable.hpp"

namespace fuzzysched {

/// One IF/THEN rule: AND-joined (variable, term) antecedents and a single
/// (variable, term) consequent.
struct FuzzyRule {
  std::vector<std::pair<std::string, std::string>> antecedents;
  std::pair<std::string, std::string> consequent;

  /// DSL rendering, e.g. "IF priority IS high AND exec_time IS small THEN
  /// new_priority IS high".
  std::string text() const;

  bool operator==(const FuzzyRule&) const = default;
};

class RuleBase {
 public:
  RuleBase(std::vector<std::string> input_variables, std::string output_variable,
           std::vector<FuzzyRule> rules);

  const std::vector<FuzzyRule>& rules() const noexcept { return rules_; }
  const std::vector<std::string>& input_variables() const noexcept {
    return inputs_;
  }
  const std::string& output_variable() const noexcept { return output_; }
  std::size_t size() const noexcept { return rules_.size(); }

  /// Full DSL rendering, one rule per line.
  std::string to_dsl() const;

  bool operator==(const RuleBase&) const = default;

 private:
  std::vector<std::string> inputs_;
  std::string output_;
  std::vector<FuzzyRule> rules_;
};

/// The 25-rule priority/exec_time -> new_priority table shipped as the
/// default configuration.
RuleBase default_rulebase();

/// Parses the rule DSL (`IF <var> IS <term> [AND <var> IS <term>]... THEN
/// <var> IS <term>`, one rule per line, `#` comments, case-insensitive
/// keywords) and validates every reference against the given variables.
/// Throws ParseError with a 1-based line/column position.
RuleBase parse_rulebase(std::string_view text,
                        const std::vector<LinguisticVariable>& inputs,
                        const LinguisticVariable& output);

}  // namespace fuzzysched
