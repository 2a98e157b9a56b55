#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysched/membership.hpp"

namespace fuzzysched {

struct Term {
  std::string name;
  MembershipFunction mf;

  bool operator==(const Term&) const = default;
};

/// A named variable over a closed real universe [lo, hi] with an ordered
/// list of fuzzy terms. Term order is semantic (weakest to strongest).
class LinguisticVariable {
 public:
  LinguisticVariable(std::string name, double lo, double hi,
                     std::vector<Term> terms);

  const std::string& name() const noexcept { return name_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Index of a term by name, or -1.
  int term_index(std::string_view term_name) const noexcept;
  const Term* find_term(std::string_view term_name) const noexcept;

  double clamp(double value) const noexcept;

  /// Degree of every term at `value` (clamped to the universe).
  /// Throws ConfigError when the variable has no terms.
  std::map<std::string, double> fuzzify(double value) const;

  bool operator==(const LinguisticVariable&) const = default;

 private:
  std::string name_;
  double lo_, hi_;
  std::vector<Term> terms_;
};

}  // namespace fuzzysched
