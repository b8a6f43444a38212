#include "genellip/scalar_special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace genellip {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;

// B_{2k}, k = 1..10
constexpr std::array<double, 10> bernoulli_2k = {
    1.0 / 6.0,         -1.0 / 30.0,   1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0};

constexpr double gamma_shift_target = 10.0;
constexpr double digamma_shift_target = 10.0;
constexpr int stirling_terms = 9;

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw domain_error(std::string(who) + ": non-finite argument");
  }
}

// ln Gamma(x) for x >= gamma_shift_target.
double stirling_lgamma(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double pw = inv;
  for (int k = 1; k <= stirling_terms; ++k) {
    corr += bernoulli_2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * pi) + corr;
}

double asymptotic_digamma(double x) {
  const double inv2 = 1.0 / (x * x);
  double corr = 0.0;
  double pw = inv2;
  for (int k = 1; k <= stirling_terms; ++k) {
    corr += bernoulli_2k[k - 1] / (2.0 * k) * pw;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - corr;
}

double asymptotic_trigamma(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double pw = inv2 * inv;
  for (int k = 1; k <= stirling_terms; ++k) {
    corr += bernoulli_2k[k - 1] * pw;
    pw *= inv2;
  }
  return inv + 0.5 * inv2 + corr;
}

// Positive-argument ln Gamma with the magnitude of intermediate terms, used
// for the error estimate.
struct LgammaParts {
  double value;
  double scale;
  bool shifted;
};

LgammaParts lgamma_positive(double x) {
  if (x >= gamma_shift_target) {
    const double v = stirling_lgamma(x);
    return {v, std::abs(v) + std::abs(x * std::log(x)), false};
  }
  // Shift with a product; rescale to keep the product in range for tiny x.
  double prod = 1.0;
  double log_prod = 0.0;
  double y = x;
  while (y < gamma_shift_target) {
    prod *= y;
    if (prod < 1e-200 || prod > 1e200) {
      log_prod += std::log(prod);
      prod = 1.0;
    }
    y += 1.0;
  }
  log_prod += std::log(prod);
  const double big = stirling_lgamma(y);
  return {big - log_prod, std::abs(big) + std::abs(log_prod), true};
}

}  // namespace

PositiveReal::PositiveReal(double v) : value_(v) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw domain_error("expected a finite positive real, got " + std::to_string(v));
  }
}

namespace detail {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r <= 0.25) return std::sin(pi * r);
  if (r <= 0.75) return std::cos(pi * (r - 0.5));
  if (r <= 1.25) return -std::sin(pi * (r - 1.0));
  if (r <= 1.75) return -std::cos(pi * (r - 1.5));
  return std::sin(pi * (r - 2.0));
}

SignedLog log_abs_gamma(double x) {
  require_finite(x, "log_abs_gamma");
  if (is_nonpositive_integer(x)) throw pole_error("log_abs_gamma: pole at " + std::to_string(x));
  if (x > 0.0) return {lgamma_positive(x).value, 1};
  const double s = sin_pi(x);
  return {std::log(pi) - std::log(std::abs(s)) - lgamma_positive(1.0 - x).value, s > 0.0 ? 1 : -1};
}

double digamma_any(double x) {
  require_finite(x, "digamma");
  if (is_nonpositive_integer(x)) throw pole_error("digamma: pole at " + std::to_string(x));
  if (x > 0.0) return digamma(x).value;
  // Psi(x) = Psi(1-x) - pi cot(pi x)
  const double cot = sin_pi(x + 0.5) / sin_pi(x);
  return digamma(1.0 - x).value - pi * cot;
}

}  // namespace detail

EvalResult gamma_ln(PositiveReal x) {
  const auto parts = lgamma_positive(x);
  return {parts.value, 4.0 * eps * parts.scale,
          parts.shifted ? Method::recurrence_shift : Method::asymptotic};
}

EvalResult gamma(double x) {
  require_finite(x, "gamma");
  if (detail::is_nonpositive_integer(x)) throw pole_error("gamma: pole at " + std::to_string(x));
  if (x > 0.0) {
    const auto lg = gamma_ln(x);
    const double v = std::exp(lg.value);
    return {v, std::abs(v) * (lg.abs_err_est + 2.0 * eps), lg.method};
  }
  const double s = detail::sin_pi(x);
  const auto lg = gamma_ln(1.0 - x);
  const double v = pi / (s * std::exp(lg.value));
  return {v, std::abs(v) * (lg.abs_err_est + 8.0 * eps), Method::reflection};
}

double rgamma(double x) {
  require_finite(x, "rgamma");
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x > 0.0) return std::exp(-lgamma_positive(x).value);
  const double s = detail::sin_pi(x);
  const double mag = std::exp(std::log(std::abs(s)) + lgamma_positive(1.0 - x).value - std::log(pi));
  return s > 0.0 ? mag : -mag;
}

EvalResult digamma(PositiveReal px) {
  double x = px;
  double acc = 0.0;
  double acc_abs = 0.0;
  bool shifted = false;
  while (x < digamma_shift_target) {
    acc -= 1.0 / x;
    acc_abs += 1.0 / x;
    x += 1.0;
    shifted = true;
  }
  const double tail = asymptotic_digamma(x);
  const double v = acc + tail;
  return {v, 4.0 * eps * (acc_abs + std::abs(tail)),
          shifted ? Method::recurrence_shift : Method::asymptotic};
}

EvalResult digamma_deriv(PositiveReal px) {
  double x = px;
  double acc = 0.0;
  bool shifted = false;
  while (x < digamma_shift_target) {
    acc += 1.0 / (x * x);
    x += 1.0;
    shifted = true;
  }
  const double v = acc + asymptotic_trigamma(x);
  return {v, 4.0 * eps * v, shifted ? Method::recurrence_shift : Method::asymptotic};
}

EvalResult beta(PositiveReal x, PositiveReal y) {
  const auto gx = lgamma_positive(x);
  const auto gy = lgamma_positive(y);
  const auto gxy = lgamma_positive(x + y);
  const double log_b = gx.value + gy.value - gxy.value;
  const double v = std::exp(log_b);
  const double log_err = 4.0 * eps * (gx.scale + gy.scale + gxy.scale);
  return {v, v * (log_err + 2.0 * eps), Method::closed_form};
}

double appell(double a, std::uint32_t n) {
  if (n == 0) return 1.0;
  double p = 1.0;
  if (n <= 16) {
    for (std::uint32_t k = 0; k < n; ++k) p *= a + k;
    return p;
  }
  // Compensated product: the rounding error of each multiply is recovered
  // exactly with fma and propagated alongside the running product.
  double err = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    const double f = a + k;
    const double next = p * f;
    const double local = std::fma(p, f, -next);
    err = err * f + local;
    p = next;
  }
  return p + err;
}

EvalResult appell_ext(double a, double t) {
  require_finite(a, "appell_ext");
  require_finite(t, "appell_ext");
  if (detail::is_nonpositive_integer(a)) throw pole_error("appell_ext: Gamma(a) has a pole");
  if (detail::is_nonpositive_integer(a + t)) throw pole_error("appell_ext: Gamma(a+t) has a pole");
  if (t >= 0.0 && t == std::floor(t) && t <= 64.0) {
    const double v = appell(a, static_cast<std::uint32_t>(t));
    return {v, 4.0 * eps * t * std::abs(v), Method::closed_form};
  }
  const auto num = detail::log_abs_gamma(a + t);
  const auto den = detail::log_abs_gamma(a);
  const double mag = std::exp(num.log_abs - den.log_abs);
  const double scale = std::abs(num.log_abs) + std::abs(den.log_abs);
  const double v = num.sign * den.sign > 0 ? mag : -mag;
  return {v, std::abs(v) * 8.0 * eps * (1.0 + scale),
          (a < 0.0 || a + t < 0.0) ? Method::reflection : Method::recurrence_shift};
}

EvalResult ramanujan_R(PositiveReal a, PositiveReal b) {
  const auto pa = digamma(a);
  const auto pb = digamma(b);
  return {-pa.value - pb.value - 2.0 * euler_gamma,
          pa.abs_err_est + pb.abs_err_est + 4.0 * eps, Method::closed_form};
}

}  // namespace genellip
