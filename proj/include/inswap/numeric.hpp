#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace inswap {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow.
inline double log_sum_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// log(sum_i exp(args[i])). Empty input yields -inf.
inline double log_sum_exp(std::span<const double> args) {
  if (args.empty()) return -kInf;
  const double m = *std::max_element(args.begin(), args.end());
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (double a : args) s += std::exp(a - m);
  return m + std::log(s);
}

// z log z - z + 1, the jump-process deviation function; ell(0) = 1 by continuity.
inline double ell(double z) {
  if (z == 0.0) return 1.0;
  return z * std::log(z) - z + 1.0;
}

inline double sq(double x) { return x * x; }

}  // namespace inswap
