#pragma once

// A value with a first-order absolute error bound. Every operation adds one
// rounding unit of the result on top of the propagated input errors.

#include <cmath>
#include <limits>

#include "genellip/eval_result.hpp"

namespace genellip::verify {

struct Est {
  double v = 0.0;
  double e = 0.0;
  bool skip = false;  // sample not applicable (e.g. an equality point)

  static Est exact(double v) { return {v, 0.0}; }
  static Est none() { return {std::numeric_limits<double>::quiet_NaN(), 0.0, true}; }
  bool finite() const { return std::isfinite(v) && std::isfinite(e); }
};

inline constexpr double ulp = std::numeric_limits<double>::epsilon();

inline Est from(const EvalResult& r) { return {r.value, r.abs_err_est}; }

inline Est operator-(Est a) { return {-a.v, a.e}; }

inline Est operator+(Est a, Est b) {
  const double v = a.v + b.v;
  return {v, a.e + b.e + ulp * std::abs(v)};
}

inline Est operator-(Est a, Est b) {
  const double v = a.v - b.v;
  return {v, a.e + b.e + ulp * std::abs(v)};
}

inline Est operator*(Est a, Est b) {
  const double v = a.v * b.v;
  return {v, std::abs(b.v) * a.e + std::abs(a.v) * b.e + a.e * b.e + ulp * std::abs(v)};
}

inline Est operator/(Est a, Est b) {
  const double v = a.v / b.v;
  const double denom = std::abs(b.v) - b.e;
  const double e = denom > 0.0 ? (a.e + std::abs(v) * b.e) / denom
                               : std::numeric_limits<double>::infinity();
  return {v, e + ulp * std::abs(v)};
}

inline Est operator+(Est a, double b) { return a + Est::exact(b); }
inline Est operator+(double a, Est b) { return Est::exact(a) + b; }
inline Est operator-(Est a, double b) { return a - Est::exact(b); }
inline Est operator-(double a, Est b) { return Est::exact(a) - b; }
inline Est operator*(Est a, double b) { return a * Est::exact(b); }
inline Est operator*(double a, Est b) { return Est::exact(a) * b; }
inline Est operator/(Est a, double b) { return a / Est::exact(b); }
inline Est operator/(double a, Est b) { return Est::exact(a) / b; }

inline Est log(Est a) {
  const double v = std::log(a.v);
  return {v, a.e / (std::abs(a.v) - a.e > 0.0 ? std::abs(a.v) - a.e : 0.0) + ulp * std::abs(v)};
}

inline Est exp(Est a) {
  const double v = std::exp(a.v);
  return {v, v * std::expm1(a.e) + ulp * v};
}

inline Est sqrt(Est a) {
  const double v = std::sqrt(a.v);
  return {v, (v > 0.0 ? 0.5 * a.e / v : std::sqrt(a.e)) + ulp * v};
}

inline Est pow(Est a, double p) {
  const double v = std::pow(a.v, p);
  return {v, std::abs(p * v) * a.e / std::abs(a.v) + ulp * std::abs(v)};
}

}  // namespace genellip::verify
