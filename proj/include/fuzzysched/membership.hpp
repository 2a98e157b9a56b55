#pragma once

#include <vector>

namespace fuzzysched {

enum class MfShape { Triangular, Trapezoidal };

/// Piecewise-linear membership function. Both shapes are stored in
/// trapezoid form (a <= b <= c <= d); a triangle has b == c. Degenerate
/// edges (a == b or c == d) give vertical shoulders, which is how terms
/// peaking on a universe boundary are expressed.
class MembershipFunction {
 public:
  static MembershipFunction triangular(double a, double b, double c);
  static MembershipFunction trapezoidal(double a, double b, double c, double d);

  /// Degree of membership at x, in [0, 1].
  double degree(double x) const noexcept;

  MfShape shape() const noexcept { return shape_; }

  /// Breakpoints as declared: 3 values for a triangle, 4 for a trapezoid.
  std::vector<double> breakpoints() const;

  double support_lo() const noexcept { return a_; }
  double support_hi() const noexcept { return d_; }
  double plateau_lo() const noexcept { return b_; }
  double plateau_hi() const noexcept { return c_; }

  bool has_rising_edge() const noexcept { return b_ > a_; }
  bool has_falling_edge() const noexcept { return d_ > c_; }

  /// x at which the rising edge reaches `level` (requires a rising edge).
  double rising_edge_at(double level) const;
  /// x at which the falling edge drops to `level` (requires a falling edge).
  double falling_edge_at(double level) const;

  bool operator==(const MembershipFunction&) const = default;

 private:
  MembershipFunction(MfShape shape, double a, double b, double c, double d);

  MfShape shape_;
  double a_, b_, c_, d_;
};

}  // namespace fuzzysched
