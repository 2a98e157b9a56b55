#include "fuzzysched/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace fuzzysched {
namespace {

// Digits after the kept ones; the first of them decides half-up rounding.
constexpr int kGuardDigits = 6;

}  // namespace

std::string format_fixed(double value, int decimals) {
  if (decimals < 0) decimals = 0;
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";

  double magnitude = std::fabs(value);
  int needed =
      std::snprintf(nullptr, 0, "%.*f", decimals + kGuardDigits, magnitude);
  std::string digits(static_cast<std::size_t>(needed), '\0');
  std::snprintf(digits.data(), digits.size() + 1, "%.*f",
                decimals + kGuardDigits, magnitude);

  std::size_t dot = digits.find('.');
  std::size_t keep = decimals == 0 ? dot : dot + 1 + static_cast<std::size_t>(decimals);
  std::size_t first_guard = decimals == 0 ? dot + 1 : keep;
  std::string kept = digits.substr(0, keep);
  bool round_up = digits[first_guard] >= '5';

  if (round_up) {
    int i = static_cast<int>(kept.size()) - 1;
    for (; i >= 0; --i) {
      if (kept[i] == '.') continue;
      if (kept[i] == '9') {
        kept[i] = '0';
        continue;
      }
      ++kept[i];
      break;
    }
    if (i < 0) kept.insert(kept.begin(), '1');
  }

  bool nonzero = kept.find_first_of("123456789") != std::string::npos;
  if (std::signbit(value) && nonzero) kept.insert(kept.begin(), '-');
  return kept;
}

std::string format_time(double value) {
  if (std::isfinite(value)) {
    double rounded = std::nearbyint(value);
    if (std::fabs(value - rounded) < 1e-9) {
      if (rounded == 0.0) return "0";
      char buf[328];
      std::snprintf(buf, sizeof buf, "%.0f", rounded);
      return buf;
    }
  }
  std::string s = format_fixed(value, 2);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string format_number(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

}  // namespace fuzzysched
