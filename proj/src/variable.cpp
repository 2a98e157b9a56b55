#include "fuzzysched/variable.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fuzzysched/error.hpp"

namespace fuzzysched {

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<Term> terms)
    : name_(std::move(name)), lo_(lo), hi_(hi), terms_(std::move(terms)) {
  if (name_.empty()) throw ConfigError("variable name must not be empty");
  if (!std::isfinite(lo_) || !std::isfinite(hi_) || !(lo_ < hi_))
    throw ConfigError("variable '" + name_ +
                      "' needs a universe with lo < hi");
  std::set<std::string> seen;
  for (const Term& t : terms_) {
    if (t.name.empty())
      throw ConfigError("variable '" + name_ + "' has a term with no name");
    if (!seen.insert(t.name).second)
      throw ConfigError("variable '" + name_ + "' has duplicate term '" +
                        t.name + "'");
    if (t.mf.support_lo() < lo_ || t.mf.support_hi() > hi_)
      throw ConfigError("term '" + t.name + "' of variable '" + name_ +
                        "' extends outside the universe");
  }
}

int LinguisticVariable::term_index(std::string_view term_name) const noexcept {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].name == term_name) return static_cast<int>(i);
  return -1;
}

const Term* LinguisticVariable::find_term(
    std::string_view term_name) const noexcept {
  int i = term_index(term_name);
  return i < 0 ? nullptr : &terms_[static_cast<std::size_t>(i)];
}

double LinguisticVariable::clamp(double value) const noexcept {
  if (std::isnan(value)) return lo_;
  return std::clamp(value, lo_, hi_);
}

std::map<std::string, double> LinguisticVariable::fuzzify(double value) const {
  if (terms_.empty())
    throw ConfigError("variable '" + name_ + "' has no terms");
  if (!std::isfinite(value))
    throw ConfigError("variable '" + name_ +
                      "': cannot fuzzify a non-finite value");
  double x = clamp(value);
  std::map<std::string, double> degrees;
  for (const Term& t : terms_) degrees[t.name] = t.mf.degree(x);
  return degrees;
}

}  // namespace fuzzysched
