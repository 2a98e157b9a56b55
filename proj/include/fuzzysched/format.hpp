#pragma once

#include <string>

namespace fuzzysched {

/// Fixed-point rendering with round-half-up ties, e.g. 11.125 -> "11.13".
/// Used only at presentation boundaries; internal math keeps full precision.
std::string format_fixed(double value, int decimals = 2);

/// Timestamp rendering for Gantt axes: integral values print without a
/// fraction ("26"), others as format_fixed with trailing zeros trimmed.
std::string format_time(double value);

/// Shortest decimal form that round-trips the exact double value.
std::string format_number(double value);

}  // namespace fuzzysched
