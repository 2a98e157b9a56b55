#include "fuzzysched/rules.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "fuzzysched/error.hpp"

namespace fuzzysched {
namespace {

// Order-insensitive antecedent fingerprint used to reject duplicate rules.
std::string antecedent_key(const FuzzyRule& rule) {
  auto sorted = rule.antecedents;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& [var, term] : sorted) key += var + "=" + term + ";";
  return key;
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> lex_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_keyword(const Token& tok, const char* keyword) {
  return lowercase(tok.text) == keyword;
}

}  // namespace

std::string FuzzyRule::text() const {
  std::string out = "IF ";
  bool first = true;
  for (const auto& [var, term] : antecedents) {
    if (!first) out += " AND ";
    first = false;
    out += var + " IS " + term;
  }
  out += " THEN " + consequent.first + " IS " + consequent.second;
  return out;
}

RuleBase::RuleBase(std::vector<std::string> input_variables,
                   std::string output_variable, std::vector<FuzzyRule> rules)
    : inputs_(std::move(input_variables)),
      output_(std::move(output_variable)),
      rules_(std::move(rules)) {
  if (output_.empty())
    throw ConfigError("rule base needs an output variable name");
  std::set<std::string> input_set;
  for (const std::string& name : inputs_) {
    if (name.empty())
      throw ConfigError("rule base has an empty input variable name");
    if (!input_set.insert(name).second)
      throw ConfigError("rule base lists input variable '" + name + "' twice");
  }
  if (input_set.count(output_))
    throw ConfigError("output variable '" + output_ +
                      "' is also listed as an input");

  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const FuzzyRule& rule = rules_[i];
    if (rule.antecedents.empty())
      throw ConfigError("rule " + std::to_string(i + 1) +
                        " has no antecedents");
    std::set<std::string> vars_in_rule;
    for (const auto& [var, term] : rule.antecedents) {
      if (!input_set.count(var))
        throw ConfigError("rule '" + rule.text() +
                          "' references non-input variable '" + var + "'");
      if (!vars_in_rule.insert(var).second)
        throw ConfigError("rule '" + rule.text() + "' uses variable '" + var +
                          "' twice");
      if (term.empty())
        throw ConfigError("rule '" + rule.text() + "' has an empty term name");
    }
    if (rule.consequent.first != output_)
      throw ConfigError("rule '" + rule.text() + "' concludes on '" +
                        rule.consequent.first + "', expected '" + output_ +
                        "'");
    auto [it, inserted] = seen.try_emplace(antecedent_key(rule), i);
    if (!inserted)
      throw ConfigError("rules " + std::to_string(it->second + 1) + " and " +
                        std::to_string(i + 1) +
                        " share the same antecedents: '" + rule.text() + "'");
  }
}

std::string RuleBase::to_dsl() const {
  std::string out;
  for (const FuzzyRule& rule : rules_) {
    out += rule.text();
    out += '\n';
  }
  return out;
}

RuleBase default_rulebase() {
  static const char* kPriority[5] = {"very_low", "low", "medium", "high",
                                     "very_high"};
  static const char* kExecTime[5] = {"very_small", "small", "medium", "long",
                                     "very_long"};
  // Consequent term per (exec_time row, priority column).
  static const char* kNewPriority[5][5] = {
      {"very_high", "very_high", "very_high", "very_high", "very_high"},
      {"medium", "medium", "high", "high", "very_high"},
      {"very_low", "low", "medium", "medium", "medium"},
      {"very_low", "very_low", "low", "low", "low"},
      {"very_low", "very_low", "very_low", "low", "low"},
  };

  std::vector<FuzzyRule> rules;
  rules.reserve(25);
  for (int e = 0; e < 5; ++e)
    for (int p = 0; p < 5; ++p)
      rules.push_back({{{"priority", kPriority[p]}, {"exec_time", kExecTime[e]}},
                       {"new_priority", kNewPriority[e][p]}});
  return RuleBase({"priority", "exec_time"}, "new_priority", std::move(rules));
}

RuleBase parse_rulebase(std::string_view text,
                        const std::vector<LinguisticVariable>& inputs,
                        const LinguisticVariable& output) {
  std::vector<std::string> input_names;
  input_names.reserve(inputs.size());
  for (const LinguisticVariable& var : inputs) input_names.push_back(var.name());

  auto find_input = [&](std::string_view name) -> const LinguisticVariable* {
    for (const LinguisticVariable& var : inputs)
      if (var.name() == name) return &var;
    return nullptr;
  };

  std::vector<FuzzyRule> rules;
  std::map<std::string, int> seen_antecedents;  // key -> line

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::vector<Token> tokens = lex_line(raw);
    if (tokens.empty()) continue;

    std::size_t pos = 0;
    auto fail = [&](const std::string& msg, int column) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg,
                        line_no, column);
    };
    auto next = [&](const char* expected) -> const Token& {
      if (pos >= tokens.size())
        throw fail(std::string("expected ") + expected + " at end of line",
                   tokens.back().column +
                       static_cast<int>(tokens.back().text.size()));
      return tokens[pos++];
    };

    const Token& kw_if = next("IF");
    if (!is_keyword(kw_if, "if"))
      throw fail("expected IF, got '" + kw_if.text + "'", kw_if.column);

    FuzzyRule rule;
    std::set<std::string> vars_in_rule;
    bool in_consequent = false;
    while (true) {
      const Token& var_tok = next("a variable name");
      const Token& is_tok = next("IS");
      if (!is_keyword(is_tok, "is"))
        throw fail("expected IS after '" + var_tok.text + "', got '" +
                       is_tok.text + "'",
                   is_tok.column);
      const Token& term_tok = next("a term name");

      if (in_consequent) {
        if (var_tok.text != output.name())
          throw fail("consequent variable must be '" + output.name() +
                         "', got '" + var_tok.text + "'",
                     var_tok.column);
        if (!output.find_term(term_tok.text))
          throw fail("unknown term '" + term_tok.text + "' for variable '" +
                         output.name() + "'",
                     term_tok.column);
        rule.consequent = {var_tok.text, term_tok.text};
        break;
      }

      const LinguisticVariable* var = find_input(var_tok.text);
      if (!var)
        throw fail("unknown variable '" + var_tok.text + "'", var_tok.column);
      if (!vars_in_rule.insert(var->name()).second)
        throw fail("variable '" + var->name() + "' appears twice in one rule",
                   var_tok.column);
      if (!var->find_term(term_tok.text))
        throw fail("unknown term '" + term_tok.text + "' for variable '" +
                       var->name() + "'",
                   term_tok.column);
      rule.antecedents.emplace_back(var_tok.text, term_tok.text);

      const Token& connective = next("AND or THEN");
      if (is_keyword(connective, "and")) continue;
      if (is_keyword(connective, "then")) {
        in_consequent = true;
        continue;
      }
      throw fail("expected AND or THEN, got '" + connective.text + "'",
                 connective.column);
    }

    if (pos != tokens.size())
      throw fail("unexpected trailing token '" + tokens[pos].text + "'",
                 tokens[pos].column);

    auto [it, inserted] =
        seen_antecedents.try_emplace(antecedent_key(rule), line_no);
    if (!inserted)
      throw ParseError("line " + std::to_string(line_no) +
                           ": duplicate antecedents, first used on line " +
                           std::to_string(it->second),
                       line_no, tokens.front().column);
    rules.push_back(std::move(rule));
  }

  return RuleBase(std::move(input_names), output.name(), std::move(rules));
}

}  // namespace fuzzysched
