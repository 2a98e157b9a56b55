#include "fuzzysched/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "fuzzysched/error.hpp"

namespace fuzzysched {
namespace {

using nlohmann::json;

// min(level, mf) restricted to [u0, u1], where it is known to be linear.
struct LinearPiece {
  double slope = 0.0;
  double intercept = 0.0;
};

LinearPiece piece_on_interval(const ClippedTerm& part, double u0, double u1) {
  auto clipped = [&](double x) {
    return std::min(part.level, part.mf.degree(x));
  };
  double v0 = clipped(u0);
  double v1 = clipped(u1);
  LinearPiece piece;
  piece.slope = (v1 - v0) / (u1 - u0);
  piece.intercept = v0 - piece.slope * u0;
  return piece;
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

MembershipFunction mf_from_json(const json& term, const std::string& var_name) {
  if (!term.contains("points") || !term["points"].is_array())
    throw ConfigError("variable '" + var_name +
                      "': every term needs a 'points' array");
  std::vector<double> pts;
  for (const json& p : term["points"]) {
    if (!p.is_number())
      throw ConfigError("variable '" + var_name +
                        "': term points must be numbers");
    pts.push_back(p.get<double>());
  }

  std::string shape;
  if (term.contains("shape")) {
    if (!term["shape"].is_string())
      throw ConfigError("variable '" + var_name +
                        "': term shape must be a string");
    shape = term["shape"].get<std::string>();
  } else {
    shape = pts.size() == 3 ? "triangle" : "trapezoid";
  }

  if (shape == "triangle" || shape == "triangular") {
    if (pts.size() != 3)
      throw ConfigError("variable '" + var_name +
                        "': a triangle needs exactly 3 points");
    return MembershipFunction::triangular(pts[0], pts[1], pts[2]);
  }
  if (shape == "trapezoid" || shape == "trapezoidal") {
    if (pts.size() != 4)
      throw ConfigError("variable '" + var_name +
                        "': a trapezoid needs exactly 4 points");
    return MembershipFunction::trapezoidal(pts[0], pts[1], pts[2], pts[3]);
  }
  throw ConfigError("variable '" + var_name + "': unknown shape '" + shape +
                    "' (expected triangle or trapezoid)");
}

LinguisticVariable variable_from_json(const std::string& name,
                                      const json& spec) {
  if (!spec.is_object())
    throw ConfigError("variable '" + name + "' must be an object");
  if (!spec.contains("range") || !spec["range"].is_array() ||
      spec["range"].size() != 2 || !spec["range"][0].is_number() ||
      !spec["range"][1].is_number())
    throw ConfigError("variable '" + name +
                      "' needs a 'range' array of two numbers");
  if (!spec.contains("terms") || !spec["terms"].is_array())
    throw ConfigError("variable '" + name + "' needs a 'terms' array");

  std::vector<Term> terms;
  for (const json& t : spec["terms"]) {
    if (!t.is_object() || !t.contains("name") || !t["name"].is_string())
      throw ConfigError("variable '" + name +
                        "': every term needs a string 'name'");
    terms.push_back({t["name"].get<std::string>(), mf_from_json(t, name)});
  }
  return LinguisticVariable(name, spec["range"][0].get<double>(),
                            spec["range"][1].get<double>(), std::move(terms));
}

LinguisticVariable default_priority_shape(const std::string& name) {
  return LinguisticVariable(
      name, 0.0, 10.0,
      {{"very_low", MembershipFunction::trapezoidal(0, 0, 0, 2.5)},
       {"low", MembershipFunction::triangular(0, 2.5, 5)},
       {"medium", MembershipFunction::triangular(2.5, 5, 7.5)},
       {"high", MembershipFunction::triangular(5, 7.5, 10)},
       {"very_high", MembershipFunction::trapezoidal(7.5, 10, 10, 10)}});
}

LinguisticVariable default_exec_time() {
  return LinguisticVariable(
      "exec_time", 0.0, 25.0,
      {{"very_small", MembershipFunction::trapezoidal(0, 0, 0, 7.5)},
       {"small", MembershipFunction::triangular(0, 7.5, 12.5)},
       {"medium", MembershipFunction::triangular(7.5, 12.5, 22.5)},
       {"long", MembershipFunction::triangular(12.5, 22.5, 25)},
       {"very_long", MembershipFunction::trapezoidal(22.5, 25, 25, 25)}});
}

}  // namespace

AggregatedOutput::AggregatedOutput(double lo, double hi,
                                   std::vector<ClippedTerm> parts)
    : lo_(lo), hi_(hi), parts_(std::move(parts)) {
  if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_))
    throw ConfigError("aggregate needs a universe with lo < hi");
  for (const ClippedTerm& part : parts_) {
    if (!std::isfinite(part.level) || part.level < 0.0 || part.level > 1.0)
      throw ConfigError("clip level must lie in [0, 1]");
  }
}

double AggregatedOutput::value_at(double x) const noexcept {
  if (!(x >= lo_ && x <= hi_)) return 0.0;
  double value = 0.0;
  for (const ClippedTerm& part : parts_)
    value = std::max(value, std::min(part.level, part.mf.degree(x)));
  return value;
}

bool AggregatedOutput::is_zero() const noexcept {
  for (const ClippedTerm& part : parts_)
    if (part.level > 0.0) return false;
  return true;
}

double evaluate_rule(const FuzzyRule& rule, const InputDegrees& degrees) {
  if (rule.antecedents.empty())
    throw ConfigError("rule has no antecedents");
  double activation = 1.0;
  for (const auto& [var, term] : rule.antecedents) {
    auto var_it = degrees.find(var);
    if (var_it == degrees.end())
      throw ConfigError("no input degrees for variable '" + var + "'");
    auto term_it = var_it->second.find(term);
    if (term_it == var_it->second.end())
      throw ConfigError("variable '" + var + "' has no term '" + term + "'");
    activation = std::min(activation, term_it->second);
  }
  return activation;
}

AggregatedOutput aggregate(
    const std::vector<std::pair<FuzzyRule, double>>& activations,
    const LinguisticVariable& output) {
  std::map<std::string, double> levels;
  for (const auto& [rule, activation] : activations) {
    if (rule.consequent.first != output.name())
      throw ConfigError("rule '" + rule.text() + "' concludes on '" +
                        rule.consequent.first + "', expected '" +
                        output.name() + "'");
    if (!output.find_term(rule.consequent.second))
      throw ConfigError("output variable '" + output.name() +
                        "' has no term '" + rule.consequent.second + "'");
    auto [it, inserted] = levels.try_emplace(rule.consequent.second, activation);
    if (!inserted) it->second = std::max(it->second, activation);
  }

  std::vector<ClippedTerm> parts;
  for (const Term& term : output.terms()) {
    auto it = levels.find(term.name);
    if (it != levels.end() && it->second > 0.0)
      parts.push_back({term.mf, it->second});
  }
  return AggregatedOutput(output.lo(), output.hi(), std::move(parts));
}

double defuzzify_centroid(const AggregatedOutput& agg) {
  if (agg.is_zero())
    throw NoRuleFiredError(
        "no rule fired: the aggregated output is zero everywhere");

  // Cut the universe wherever some part changes slope: membership
  // breakpoints plus the points where an edge meets its clip level.
  std::vector<double> cuts = {agg.lo(), agg.hi()};
  for (const ClippedTerm& part : agg.parts()) {
    for (double bp : part.mf.breakpoints()) cuts.push_back(bp);
    if (part.level < 1.0) {
      if (part.mf.has_rising_edge())
        cuts.push_back(part.mf.rising_edge_at(part.level));
      if (part.mf.has_falling_edge())
        cuts.push_back(part.mf.falling_edge_at(part.level));
    }
  }
  std::erase_if(cuts, [&](double x) { return x < agg.lo() || x > agg.hi(); });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double area = 0.0;
  double moment = 0.0;
  std::vector<double> subcuts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double u0 = cuts[i];
    double u1 = cuts[i + 1];
    if (!(u1 > u0)) continue;

    // Every part is linear on [u0, u1]; the max of the parts still kinks
    // where two pieces cross, so cut once more at pairwise intersections.
    std::vector<LinearPiece> pieces;
    pieces.reserve(agg.parts().size());
    for (const ClippedTerm& part : agg.parts())
      pieces.push_back(piece_on_interval(part, u0, u1));

    subcuts.clear();
    subcuts.push_back(u0);
    for (std::size_t a = 0; a < pieces.size(); ++a) {
      for (std::size_t b = a + 1; b < pieces.size(); ++b) {
        double ds = pieces[a].slope - pieces[b].slope;
        if (ds == 0.0) continue;
        double x = (pieces[b].intercept - pieces[a].intercept) / ds;
        if (x > u0 && x < u1) subcuts.push_back(x);
      }
    }
    subcuts.push_back(u1);
    std::sort(subcuts.begin(), subcuts.end());

    for (std::size_t s = 0; s + 1 < subcuts.size(); ++s) {
      double p = subcuts[s];
      double q = subcuts[s + 1];
      if (!(q > p)) continue;
      // No crossings inside (p, q), so the max is one linear piece; its
      // endpoint values are the aggregate's.
      double f0 = agg.value_at(p);
      double f1 = agg.value_at(q);
      double slope = (f1 - f0) / (q - p);
      double intercept = f0 - slope * p;
      area += 0.5 * (f0 + f1) * (q - p);
      moment += slope * (q * q * q - p * p * p) / 3.0 +
                intercept * (q * q - p * p) / 2.0;
    }
  }

  if (area <= 0.0)
    throw NoRuleFiredError(
        "no rule fired: the aggregated output has zero area");
  return moment / area;
}

Engine::Engine(LinguisticVariable priority, LinguisticVariable exec_time,
               LinguisticVariable new_priority, RuleBase rules)
    : priority_(std::move(priority)),
      exec_time_(std::move(exec_time)),
      new_priority_(std::move(new_priority)),
      rules_(std::move(rules)) {
  std::set<std::string> input_names = {priority_.name(), exec_time_.name()};
  if (input_names.size() != 2)
    throw ConfigError("input variables must have distinct names");
  if (input_names.count(new_priority_.name()))
    throw ConfigError("output variable '" + new_priority_.name() +
                      "' clashes with an input variable");

  if (rules_.output_variable() != new_priority_.name())
    throw ConfigError("rule base concludes on '" + rules_.output_variable() +
                      "' but the output variable is '" + new_priority_.name() +
                      "'");
  for (const std::string& name : rules_.input_variables())
    if (!input_names.count(name))
      throw ConfigError("rule base uses input variable '" + name +
                        "' which the engine does not define");

  auto variable_for = [&](const std::string& name) -> const LinguisticVariable& {
    return name == priority_.name() ? priority_ : exec_time_;
  };
  for (const FuzzyRule& rule : rules_.rules()) {
    for (const auto& [var, term] : rule.antecedents)
      if (!variable_for(var).find_term(term))
        throw ConfigError("rule '" + rule.text() + "': variable '" + var +
                          "' has no term '" + term + "'");
    if (!new_priority_.find_term(rule.consequent.second))
      throw ConfigError("rule '" + rule.text() + "': variable '" +
                        new_priority_.name() + "' has no term '" +
                        rule.consequent.second + "'");
  }
}

Engine Engine::with_defaults() {
  return Engine(default_priority_shape("priority"), default_exec_time(),
                default_priority_shape("new_priority"), default_rulebase());
}

Engine Engine::from_config_json(std::string_view json_text,
                                std::optional<std::string_view> rules_dsl) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    convert_parse_error(err, json_text);
  }
  if (!doc.is_object())
    throw ConfigError("engine config must be a JSON object");
  if (!doc.contains("variables") || !doc["variables"].is_object())
    throw ConfigError("engine config needs a 'variables' object");

  const json& vars = doc["variables"];
  for (const char* required : {"priority", "exec_time", "new_priority"})
    if (!vars.contains(required))
      throw ConfigError(std::string("engine config is missing variable '") +
                        required + "'");

  LinguisticVariable priority = variable_from_json("priority", vars["priority"]);
  LinguisticVariable exec_time =
      variable_from_json("exec_time", vars["exec_time"]);
  LinguisticVariable new_priority =
      variable_from_json("new_priority", vars["new_priority"]);

  std::string dsl;
  bool have_dsl = false;
  if (rules_dsl) {
    dsl = std::string(*rules_dsl);
    have_dsl = true;
  } else if (doc.contains("rules")) {
    if (!doc["rules"].is_string())
      throw ConfigError("engine config 'rules' must be a DSL string");
    dsl = doc["rules"].get<std::string>();
    have_dsl = true;
  }

  RuleBase rules =
      have_dsl ? parse_rulebase(dsl, {priority, exec_time}, new_priority)
               : default_rulebase();
  return Engine(std::move(priority), std::move(exec_time),
                std::move(new_priority), std::move(rules));
}

Engine Engine::with_rules(RuleBase rules) const {
  return Engine(priority_, exec_time_, new_priority_, std::move(rules));
}

Engine Engine::with_rules_dsl(std::string_view dsl) const {
  return with_rules(parse_rulebase(dsl, {priority_, exec_time_}, new_priority_));
}

double Engine::infer(double priority_value, double exec_time_value) const {
  return defuzzify_centroid(aggregate_for(priority_value, exec_time_value));
}

AggregatedOutput Engine::aggregate_for(double priority_value,
                                       double exec_time_value) const {
  if (!std::isfinite(priority_value) || !std::isfinite(exec_time_value))
    throw ValidationError("inference inputs must be finite");

  InputDegrees degrees;
  degrees[priority_.name()] = priority_.fuzzify(priority_value);
  degrees[exec_time_.name()] = exec_time_.fuzzify(exec_time_value);

  std::vector<std::pair<FuzzyRule, double>> activations;
  activations.reserve(rules_.size());
  for (const FuzzyRule& rule : rules_.rules())
    activations.emplace_back(rule, evaluate_rule(rule, degrees));
  return aggregate(activations, new_priority_);
}

}  // namespace fuzzysched
