#pragma once

// 50-digit reference implementations used only by the tests. They share no
// code with the library: plain series in cpp_bin_float_50 plus Boost.Math.

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

namespace oracle {

using mpf = boost::multiprecision::cpp_bin_float_50;

inline mpf pi() { return boost::math::constants::pi<mpf>(); }
inline mpf euler() { return boost::math::constants::euler<mpf>(); }

inline mpf tgamma(const mpf& x) { return boost::math::tgamma(x); }
inline mpf lgamma(const mpf& x) { return boost::math::lgamma(x); }
inline mpf beta(const mpf& x, const mpf& y) { return exp(lgamma(x) + lgamma(y) - lgamma(x + y)); }

// ln Gamma by upward recurrence to x >= 40 and a 20-term Stirling series.
inline mpf lgamma_stirling(mpf x) {
  static const double b2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6,
                               -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};
  mpf shift = 0;
  while (x < 40) {
    shift += log(x);
    x += 1;
  }
  mpf s = (x - mpf(0.5)) * log(x) - x + log(2 * pi()) / 2;
  mpf p = 1 / x;
  for (int k = 1; k <= 10; ++k) {
    s += mpf(b2k[k - 1]) / (2 * k * (2 * k - 1)) * p;
    p /= x * x;
  }
  return s - shift;
}

// Psi(x) = -gamma - 1/x + sum_{n>=1} x/(n(n+x)), N terms plus an asymptotic tail.
inline mpf digamma_series(const mpf& x, int N = 20000) {
  mpf s = -euler() - 1 / x;
  for (int n = 1; n <= N; ++n) s += x / (mpf(n) * (n + x));
  // tail = Psi(N+1+x) - Psi(N+1)
  auto psi_asym = [](const mpf& y) {
    const mpf y2 = y * y;
    return log(y) - 1 / (2 * y) - 1 / (12 * y2) + 1 / (120 * y2 * y2) - 1 / (252 * y2 * y2 * y2);
  };
  return s + psi_asym(N + 1 + x) - psi_asym(mpf(N + 1));
}

// Psi'(x) = sum_{n>=0} 1/(n+x)^2 with a Hurwitz-zeta tail.
inline mpf trigamma_series(const mpf& x, int N = 20000) {
  mpf s = 0;
  for (int n = 0; n < N; ++n) s += 1 / ((n + x) * (n + x));
  const mpf y = N + x;
  return s + 1 / y + 1 / (2 * y * y) + 1 / (6 * y * y * y) - 1 / (30 * pow(y, 5));
}

// Maclaurin series of 2F1 with a geometric tail bound; z must stay below ~0.999.
inline mpf hyp2f1(const mpf& a, const mpf& b, const mpf& c, const mpf& z) {
  const mpf tol = mpf("1e-45");
  mpf sum = 1, term = 1;
  for (long n = 0; n < 2000000; ++n) {
    const mpf ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * z;
    term *= ratio;
    sum += term;
    if (n > 10 && abs(ratio) < 1 && abs(term) / (1 - abs(ratio)) < tol * abs(sum)) return sum;
  }
  throw std::runtime_error("oracle series did not converge");
}

inline mpf hyp2f1_dz(const mpf& a, const mpf& b, const mpf& c, const mpf& z) {
  return a * b / c * hyp2f1(a + 1, b + 1, c + 1, z);
}

inline mpf agm(mpf x, mpf y) {
  for (int i = 0; i < 200; ++i) {
    const mpf nx = (x + y) / 2;
    const mpf ny = sqrt(x * y);
    if (abs(nx - ny) < mpf("1e-48") * nx) return nx;
    x = nx;
    y = ny;
  }
  return x;
}

/// Classical K(k) = pi / (2 AGM(1, k')).
inline mpf ellip_k(const mpf& k) { return pi() / (2 * agm(mpf(1), sqrt(1 - k * k))); }

/// Classical modulus mu(r) = (pi/2) K(r') / K(r).
inline mpf classical_mu(const mpf& r) { return pi() / 2 * ellip_k(sqrt(1 - r * r)) / ellip_k(r); }

/// Wronskian form z(1-z)(v1 v' - v v1'), with v1(z) = v(1-z).
inline mpf m_wronskian(const mpf& a, const mpf& b, const mpf& c, const mpf& z) {
  const mpf w = 1 - z;
  return z * w * (hyp2f1(a, b, c, w) * hyp2f1_dz(a, b, c, z) + hyp2f1(a, b, c, z) * hyp2f1_dz(a, b, c, w));
}

/// mu_{a,b,c}(r) from the series (moderate r only).
inline mpf mu(const mpf& a, const mpf& b, const mpf& c, const mpf& r) {
  return beta(a, b) / 2 * hyp2f1(a, b, c, 1 - r * r) / hyp2f1(a, b, c, r * r);
}

/// Root of mu(s) = y by bisection on (lo, hi).
inline mpf mu_inv_bisect(const mpf& a, const mpf& b, const mpf& c, const mpf& y, mpf lo = mpf("0.02"),
                         mpf hi = mpf("0.98")) {
  for (int i = 0; i < 120; ++i) {
    const mpf mid = (lo + hi) / 2;
    if (mu(a, b, c, mid) > y) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

inline double d(const mpf& x) { return x.convert_to<double>(); }

}  // namespace oracle
