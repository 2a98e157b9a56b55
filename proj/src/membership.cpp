#include "fuzzysched/membership.hpp"

#include <cmath>

#include "fuzzysched/error.hpp"
#include "fuzzysched/format.hpp"

namespace fuzzysched {
namespace {

void require_finite_ordered(std::initializer_list<double> points,
                            const char* what) {
  double prev = -HUGE_VAL;
  for (double p : points) {
    if (!std::isfinite(p))
      throw ConfigError(std::string(what) + " breakpoints must be finite");
    if (p < prev)
      throw ConfigError(std::string(what) +
                        " breakpoints must be non-decreasing");
    prev = p;
  }
}

}  // namespace

MembershipFunction::MembershipFunction(MfShape shape, double a, double b,
                                       double c, double d)
    : shape_(shape), a_(a), b_(b), c_(c), d_(d) {}

MembershipFunction MembershipFunction::triangular(double a, double b,
                                                  double c) {
  require_finite_ordered({a, b, c}, "triangular");
  if (a == c)
    throw ConfigError("triangular membership function has empty support (" +
                      format_number(a) + ", " + format_number(b) + ", " +
                      format_number(c) + ")");
  return MembershipFunction(MfShape::Triangular, a, b, b, c);
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b,
                                                   double c, double d) {
  require_finite_ordered({a, b, c, d}, "trapezoidal");
  if (a == d)
    throw ConfigError("trapezoidal membership function has empty support (" +
                      format_number(a) + ", " + format_number(b) + ", " +
                      format_number(c) + ", " + format_number(d) + ")");
  return MembershipFunction(MfShape::Trapezoidal, a, b, c, d);
}

double MembershipFunction::degree(double x) const noexcept {
  if (!(x >= a_ && x <= d_)) return 0.0;
  if (x >= b_ && x <= c_) return 1.0;
  if (x < b_) return (x - a_) / (b_ - a_);
  return (d_ - x) / (d_ - c_);
}

std::vector<double> MembershipFunction::breakpoints() const {
  if (shape_ == MfShape::Triangular) return {a_, b_, d_};
  return {a_, b_, c_, d_};
}

double MembershipFunction::rising_edge_at(double level) const {
  if (!has_rising_edge())
    throw ConfigError("membership function has no rising edge");
  return a_ + level * (b_ - a_);
}

double MembershipFunction::falling_edge_at(double level) const {
  if (!has_falling_edge())
    throw ConfigError("membership function has no falling edge");
  return d_ - level * (d_ - c_);
}

}  // namespace fuzzysched
