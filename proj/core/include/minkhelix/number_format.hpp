#pragma once

#include <charconv>
#include <string>

namespace minkhelix {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string format_shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Uniform grid point i of n on [a, b]; the last point is exactly b.
inline double uniform_point(double a, double b, int i, int n) {
  return i == n - 1 ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace minkhelix
