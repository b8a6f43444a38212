#pragma once

// Gamma-family scalar functions: ln Gamma, Gamma, digamma, trigamma, Beta,
// the Appell symbol (shifted factorial) and the Ramanujan constant R(a,b).

#include <cstdint>
#include <numbers>

#include "genellip/errors.hpp"
#include "genellip/eval_result.hpp"

namespace genellip {

inline constexpr double euler_gamma = std::numbers::egamma;

/// Finite, strictly positive real. Construction validates; the conversion
/// from double is implicit so call sites read `digamma(0.5)`.
class PositiveReal {
 public:
  PositiveReal(double v);  // NOLINT(google-explicit-constructor)
  double value() const { return value_; }
  operator double() const { return value_; }  // NOLINT

 private:
  double value_;
};

EvalResult gamma_ln(PositiveReal x);

/// Gamma on the real line minus the poles {0,-1,-2,...}.
/// Throws pole_error at a pole, domain_error for non-finite input.
EvalResult gamma(double x);

/// 1/Gamma(x); zero at the poles, defined on the whole real line.
double rgamma(double x);

EvalResult digamma(PositiveReal x);
EvalResult digamma_deriv(PositiveReal x);

EvalResult beta(PositiveReal x, PositiveReal y);

/// (a,n) = a(a+1)...(a+n-1), with (a,0) = 1 for every a including 0.
double appell(double a, std::uint32_t n);

/// (a,t) = Gamma(a+t)/Gamma(a) for real t. Throws pole_error when a or a+t
/// is a non-positive integer.
EvalResult appell_ext(double a, double t);

/// R(a,b) = -Psi(a) - Psi(b) - 2 gamma.
EvalResult ramanujan_R(PositiveReal a, PositiveReal b);

namespace detail {

/// sin(pi x) with exact argument reduction.
double sin_pi(double x);

/// ln|Gamma(x)| and the sign of Gamma(x) for any non-pole real x.
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_abs_gamma(double x);

/// Digamma for any non-pole real argument (reflection for x < 0).
double digamma_any(double x);

bool is_nonpositive_integer(double x);

}  // namespace detail

}  // namespace genellip
