#include "genellip/hypergeom.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "genellip/scalar_special.hpp"

namespace genellip {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double series_eps = 1e-15;
constexpr long max_series_terms = 5'000'000;

// |c-a-b - m| below this is treated as the integer m (logarithmic case).
constexpr double integer_snap = 1e-12;
// Inside this window around an integer the connection formula cancels badly.
constexpr double near_integer_window = 0.05;
// Below this 1-z the direct series would need more than ~2e6 terms.
constexpr double direct_series_min_w = 2e-5;

void check_parameter(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0) || v > max_hyp_parameter) {
    throw parameter_error(std::string("hypergeometric parameter ") + name +
                          " must lie in (0, 50], got " + std::to_string(v));
  }
}

// Gauss connection formula for non-integer s = c-a-b > 0:
// F = A1 F(a,b;1-s;w) + A2 w^s F(c-a,c-b;1+s;w).
EvalResult connection_generic(double a, double b, double c, double s, double w) {
  const double gc = gamma(c).value;
  const double a1 = gc * gamma(s).value * rgamma(c - a) * rgamma(c - b);
  const double a2 = gc * gamma(-s).value * rgamma(a) * rgamma(b);
  const auto f1 = detail::maclaurin_series(a, b, 1.0 - s, w);
  const auto f2 = detail::maclaurin_series(c - a, c - b, 1.0 + s, w);
  const double t1 = a1 * f1.value;
  const double t2 = a2 * std::pow(w, s) * f2.value;
  const double v = t1 + t2;
  const double err = std::abs(a1) * f1.abs_err_est + std::abs(a2 * std::pow(w, s)) * f2.abs_err_est +
                     32.0 * eps * (std::abs(t1) + std::abs(t2));
  return {v, err, Method::transform_near_one};
}

// Limit form of the connection formula for c = a + b + m, m >= 1.
EvalResult connection_integer(double a, double b, int m, double w) {
  const double c = a + b + m;
  const double gc = gamma(c).value;
  const double lw = std::log(w);

  // Finite part: Gamma(m)Gamma(c)/(Gamma(a+m)Gamma(b+m)) sum_{n<m} (a,n)(b,n)/(n!(1-m,n)) w^n
  double s1 = 0.0;
  double s1_abs = 0.0;
  {
    double t = 1.0;
    for (int n = 0; n < m; ++n) {
      if (n > 0) t *= (a + n - 1) * (b + n - 1) / (n * (1.0 - m + n - 1)) * w;
      s1 += t;
      s1_abs += std::abs(t);
    }
  }
  const double pref1 = gamma(static_cast<double>(m)).value * gc * rgamma(a + m) * rgamma(b + m);

  // Logarithmic part.
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // -(-1)^m
  const double pref2 = sign * std::pow(w, m) * gc * rgamma(a) * rgamma(b);
  double s2 = 0.0;
  double s2_abs = 0.0;
  if (pref2 != 0.0) {
    double t = 1.0 / gamma(m + 1.0).value;
    double psi_n1 = -euler_gamma;
    double psi_nm1 = detail::digamma_any(m + 1.0);
    double psi_am = detail::digamma_any(a + m);
    double psi_bm = detail::digamma_any(b + m);
    int small = 0;
    for (long n = 0; n < max_series_terms; ++n) {
      if (n > 0) {
        t *= (a + m + n - 1) * (b + m + n - 1) / (static_cast<double>(n) * (n + m)) * w;
        psi_n1 += 1.0 / n;
        psi_nm1 += 1.0 / (n + m);
        psi_am += 1.0 / (a + m + n - 1);
        psi_bm += 1.0 / (b + m + n - 1);
      }
      const double bracket = lw - psi_n1 - psi_nm1 + psi_am + psi_bm;
      const double term = t * bracket;
      s2 += term;
      s2_abs += std::abs(term) + std::abs(t) * (std::abs(lw) + std::abs(psi_n1) + std::abs(psi_nm1) +
                                                std::abs(psi_am) + std::abs(psi_bm)) *
                                     eps;
      if (t == 0.0) break;
      if (std::abs(term) <= series_eps * std::abs(s2)) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
  }
  const double v1 = pref1 * s1;
  const double v2 = pref2 * s2;
  const double err = 8.0 * eps * (std::abs(pref1) * s1_abs + std::abs(pref2) * s2_abs) +
                     16.0 * eps * (std::abs(v1) + std::abs(v2));
  return {v1 + v2, err, Method::transform_near_one};
}

// 2F1(a,b;a+b;z) = (1/B(a,b)) sum (a,n)(b,n)/(n!)^2 [2Psi(n+1)-Psi(a+n)-Psi(b+n)-ln w] w^n
EvalResult zero_balanced_log(double a, double b, double w) {
  const double inv_beta = gamma(a + b).value * rgamma(a) * rgamma(b);
  const double lw = std::log(w);
  double t = 1.0;
  double psi1 = -euler_gamma;
  double psia = detail::digamma_any(a);
  double psib = detail::digamma_any(b);
  double sum = 0.0;
  double sum_abs = 0.0;
  int small = 0;
  for (long n = 0; n < max_series_terms; ++n) {
    if (n > 0) {
      t *= (a + n - 1) * (b + n - 1) / (static_cast<double>(n) * n) * w;
      psi1 += 1.0 / n;
      psia += 1.0 / (a + n - 1);
      psib += 1.0 / (b + n - 1);
    }
    const double bracket = 2.0 * psi1 - psia - psib - lw;
    const double term = t * bracket;
    sum += term;
    sum_abs += std::abs(term) +
               std::abs(t) * eps * (2.0 * std::abs(psi1) + std::abs(psia) + std::abs(psib) + std::abs(lw));
    if (t == 0.0) break;
    if (std::abs(term) <= series_eps * std::abs(sum)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  const double v = inv_beta * sum;
  return {v, std::abs(inv_beta) * 8.0 * eps * sum_abs + 16.0 * eps * std::abs(v),
          Method::transform_near_one};
}

}  // namespace

// ---------------------------------------------------------------------------

HypParams::HypParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
  check_parameter(a, "a");
  check_parameter(b, "b");
  check_parameter(c, "c");
}

bool HypParams::zero_balanced() const { return std::abs(a_ + b_ - c_) <= zero_balanced_tol; }

Argument::Argument(double z) : Argument(z, 1.0 - z) {}

Argument::Argument(double z, double z_comp) : z_(z), z_comp_(z_comp) {
  if (!std::isfinite(z) || !std::isfinite(z_comp) || z < 0.0 || z > 1.0 || !(z_comp > 0.0) ||
      z_comp > 1.0) {
    throw domain_error("hypergeometric argument must satisfy 0 <= z < 1, got z=" + std::to_string(z));
  }
  if (std::abs(z + z_comp - 1.0) > 8.0 * eps) {
    throw domain_error("inconsistent argument pair: z + (1-z) != 1");
  }
}

Argument Argument::from_complement(double z_comp) { return Argument(1.0 - z_comp, z_comp); }

namespace detail {

EvalResult maclaurin_series(double a, double b, double c, double z) {
  if (z == 0.0 || a == 0.0 || b == 0.0) return {1.0, 0.0, Method::series};
  // Neumaier-compensated sum; long series near z = 1 otherwise lose ~sqrt(n) ulps.
  double sum = 1.0;
  double comp = 0.0;
  double sum_abs = 1.0;
  double term = 1.0;
  int small = 0;
  for (long n = 0; n < max_series_terms; ++n) {
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    term *= ratio;
    if (term == 0.0) return {sum + comp, 4.0 * eps * sum_abs, Method::series};
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    sum_abs += std::abs(term) * std::sqrt(n + 1.0);
    if (std::abs(term) <= series_eps * std::abs(sum)) {
      ++small;
      const double rho = std::max(std::abs(ratio), z);
      if (small >= 3 && rho < 1.0) {
        const double tail = std::abs(term) * rho / (1.0 - rho);
        if (tail <= series_eps * std::abs(sum)) {
          return {sum + comp, 4.0 * eps * sum_abs + tail, Method::series};
        }
      }
    } else {
      small = 0;
    }
  }
  throw convergence_error("hypergeometric series did not converge");
}

EvalResult hyp2f1_real(double a, double b, double c, double z, double w) {
  if (z == 0.0 || a == 0.0 || b == 0.0) return {1.0, 0.0, Method::closed_form};
  if (z < z_switch) return maclaurin_series(a, b, c, z);

  const double s = c - a - b;
  if (std::abs(s) <= zero_balanced_tol) return zero_balanced_log(a, b, w);
  if (s < 0.0) {
    const auto inner = hyp2f1_real(c - a, c - b, c, z, w);
    const double scale = std::pow(w, s);
    return {scale * inner.value, scale * inner.abs_err_est + 4.0 * eps * std::abs(scale * inner.value),
            Method::transform_near_one};
  }
  const double m = std::round(s);
  const double d = s - m;
  if (std::abs(d) <= integer_snap) {
    if (m == 0.0) return zero_balanced_log(a, b, w);
    return connection_integer(a, b, static_cast<int>(m), w);
  }
  if (std::abs(d) < near_integer_window) {
    if (w >= direct_series_min_w) return maclaurin_series(a, b, c, z);
    auto r = connection_generic(a, b, c, s, w);
    r.abs_err_est += std::abs(r.value) * eps / std::abs(d);
    return r;
  }
  return connection_generic(a, b, c, s, w);
}

double log_hyp2f1_real(double a, double b, double c, double z, double w) {
  const double s = c - a - b;
  if (z >= z_switch && s < -zero_balanced_tol) {
    return s * std::log(w) + std::log(hyp2f1_real(c - a, c - b, c, z, w).value);
  }
  return std::log(hyp2f1_real(a, b, c, z, w).value);
}

}  // namespace detail

EvalResult hyp2f1(const HypParams& p, const Argument& z) {
  return detail::hyp2f1_real(p.a(), p.b(), p.c(), z.z(), z.z_comp());
}

EvalResult hyp2f1_zero_balanced_near_one(const HypParams& p, const Argument& z) {
  if (!p.zero_balanced()) throw regime_error("zero-balanced expansion requires a+b == c");
  if (z.z() < z_switch) throw domain_error("zero-balanced expansion requires z >= 0.75");
  return zero_balanced_log(p.a(), p.b(), z.z_comp());
}

EvalResult euler_transform(const HypParams& p, const Argument& z) {
  const double ca = p.c() - p.a();
  const double cb = p.c() - p.b();
  if (!(ca > 0.0) || !(cb > 0.0)) throw parameter_error("Euler transform requires c-a > 0 and c-b > 0");
  const HypParams q(ca, cb, p.c());
  const auto inner = hyp2f1(q, z);
  const double scale = std::pow(z.z_comp(), p.c() - p.a() - p.b());
  return {scale * inner.value, scale * inner.abs_err_est + 4.0 * eps * std::abs(scale * inner.value),
          inner.method};
}

EvalResult contiguous_shift(const HypParams& p, Shift which, const Argument& z) {
  switch (which) {
    case Shift::a_plus: return hyp2f1(HypParams(p.a() + 1.0, p.b(), p.c()), z);
    case Shift::b_plus: return hyp2f1(HypParams(p.a(), p.b() + 1.0, p.c()), z);
    case Shift::c_plus: return hyp2f1(HypParams(p.a(), p.b(), p.c() + 1.0), z);
    case Shift::a_minus:
      // a-1 lies in (-1, 49]; the unchecked evaluator handles the sign change.
      return detail::hyp2f1_real(p.a() - 1.0, p.b(), p.c(), z.z(), z.z_comp());
  }
  throw parameter_error("unknown contiguous shift");
}

EvalResult hyp2f1_dz(const HypParams& p, const Argument& z) {
  const auto f = detail::hyp2f1_real(p.a() + 1.0, p.b() + 1.0, p.c() + 1.0, z.z(), z.z_comp());
  const double k = p.a() * p.b() / p.c();
  return {k * f.value, std::abs(k) * f.abs_err_est, f.method};
}

}  // namespace genellip
