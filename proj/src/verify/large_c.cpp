#include "genellip/verify/large_c.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

#include "genellip/errors.hpp"
#include "genellip/hypergeom.hpp"
#include "genellip/scalar_special.hpp"

namespace genellip::verify::large_c {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double logit_limit = 700.0;
constexpr long max_terms = 5'000'000;

struct LogF {
  double v;    // log F
  double rel;  // relative error of F
};

// sum_n (a,n)(b,n)/(n!)^2 w^n [2 psi(n+1) - psi(a+n) - psi(b+n) - log w] = B(a,b) F(a,b;a+b;1-w)
LogF log_series(double a, double b, double w) {
  const double lw = std::log(w);
  double psi_n1 = -euler_gamma;
  double psi_a = digamma(a).value;
  // -psi(b) - log w, kept accurate for large b where psi(b) ~ log b.
  double tail = -(digamma(b).value - std::log(b)) - std::log(b * w);
  double term = 1.0;
  double sum = 0.0;
  double comp = 0.0;
  double sum_abs = 0.0;
  long n = 0;
  for (; n < max_terms; ++n) {
    const double t = term * (2.0 * psi_n1 - psi_a + tail);
    const double s = sum + t;
    comp += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
    sum = s;
    sum_abs += std::abs(t);
    if (n > 2.0 * (a + b) * w + 4 && std::abs(t) <= 1e-17 * std::abs(sum) && std::abs(term) * (1.0 + std::abs(lw)) <= 1e-17 * std::abs(sum)) {
      break;
    }
    const double nn = static_cast<double>(n);
    term *= (a + nn) * (b + nn) / ((nn + 1.0) * (nn + 1.0)) * w;
    psi_n1 += 1.0 / (nn + 1.0);
    psi_a += 1.0 / (a + nn);
    tail -= 1.0 / (b + nn);
  }
  if (n >= max_terms) throw convergence_error("large-c logarithmic series did not converge");
  sum += comp;
  const double log_b = std::lgamma(a) + std::log(boost::math::tgamma_delta_ratio(b, a));
  return {std::log(sum) - log_b, 16.0 * eps * (sum_abs / std::abs(sum)) * std::sqrt(n + 1.0)};
}

LogF log_f(double a, double b, double c, double z, double w) {
  // Maclaurin unless it needs more than 2e4 terms and the log series is cheaper.
  const double mac_cost = 40.0 / -std::log1p(-w);
  const double log_cost = 60.0 + 3.0 * (a + b) * w + (w > 0.5 ? 40.0 / z : 0.0);
  if (mac_cost <= 2e4 || mac_cost <= log_cost) {
    const auto f = detail::maclaurin_series(a, b, c, z);
    return {std::log(f.value), f.abs_err_est / f.value + eps};
  }
  return log_series(a, b, w);
}

struct LogMu {
  double v;
  double rel;
};

LogMu log_mu(double a, double c, double z, double w) {
  const double b = c - a;
  const auto num = log_f(a, b, c, w, z);
  const auto den = log_f(a, b, c, z, w);
  return {log_half_beta(a, c) + num.v - den.v, num.rel + den.rel + 8.0 * eps};
}

void check_ac(double a, double c) {
  if (!std::isfinite(a) || !std::isfinite(c) || !(a > 0.0) || !(a < c)) {
    throw domain_error("large-c family needs 0 < a < c");
  }
}

}  // namespace

double log_half_beta(double a, double c) {
  check_ac(a, c);
  const double b = c - a;
  return std::lgamma(a) + std::log(boost::math::tgamma_delta_ratio(b, a)) - std::log(2.0);
}

Est f(double a, double c, const Arg& z) {
  check_ac(a, c);
  if (!(z.x >= 0.0) || !(z.comp > 0.0)) throw domain_error("large-c F needs 0 <= z < 1");
  if (z.x == 0.0) return Est::exact(1.0);
  const auto lf = log_f(a, c - a, c, z.x, z.comp);
  const double v = std::exp(lf.v);
  return {v, v * (lf.rel + eps * (1.0 + std::abs(lf.v)))};
}

Est mu(double a, double c, const Arg& r) {
  check_ac(a, c);
  if (!(r.x > 0.0) || !(r.comp > 0.0)) throw domain_error("large-c mu needs 0 < r < 1");
  const double z = r.x * r.x;
  const double w = r.comp * (1.0 + r.x);
  const auto lm = log_mu(a, c, z, w);
  const double v = std::exp(lm.v);
  return {v, v * (lm.rel + eps * (1.0 + std::abs(lm.v)))};
}

Est mu_inv(double a, double c, double x) {
  check_ac(a, c);
  if (!std::isfinite(x) || !(x > 0.0)) throw domain_error("large-c mu_inv needs x > 0");
  const double target = std::log(x);
  auto f = [&](double u) {
    const double z = 1.0 / (1.0 + std::exp(-u));
    const double w = 1.0 / (1.0 + std::exp(u));
    return log_mu(a, c, z, w).v - target;
  };
  const double f_lo = f(-logit_limit);
  const double f_hi = f(logit_limit);
  if (f_lo <= 0.0) return Est::exact(0.0);
  if (f_hi >= 0.0) return Est::exact(1.0);
  std::uintmax_t iters = 300;
  auto tol = [](double lo, double hi) { return std::abs(hi - lo) <= 4.0 * eps * std::max(1.0, std::abs(lo)); };
  const auto br = boost::math::tools::toms748_solve(f, -logit_limit, logit_limit, f_lo, f_hi, tol, iters);
  const double u = 0.5 * (br.first + br.second);
  const double z = 1.0 / (1.0 + std::exp(-u));
  const double w = 1.0 / (1.0 + std::exp(u));
  const double r = std::sqrt(z);
  const double du = std::abs(br.second - br.first) + 64.0 * eps * (1.0 + std::abs(u));
  return {r, 0.5 * r * w * du};
}

Est k_minus_half_beta(double a, double c, const Arg& r) {
  check_ac(a, c);
  const double z = r.x * r.x;
  const auto f = detail::maclaurin_series(a, c - a, c, z);
  const double h = std::exp(log_half_beta(a, c));
  const double v = h * (f.value - 1.0);
  return {v, h * (f.abs_err_est + eps * f.value) + 8.0 * eps * std::abs(v)};
}

Est half_beta_minus_e(double a, double c, const Arg& r) {
  check_ac(a, c);
  const double z = r.x * r.x;
  const auto f = detail::maclaurin_series(a - 1.0, c - a, c, z);
  const double h = std::exp(log_half_beta(a, c));
  const double v = h * (1.0 - f.value);
  return {v, h * (f.abs_err_est + eps * f.value) + 8.0 * eps * std::abs(v)};
}

}  // namespace genellip::verify::large_c
