// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "genellip/legendre_m.hpp"
#include "genellip/modulus_modular.hpp"
#include "genellip/scalar_special.hpp"
#include "genellip/verify/finite_diff.hpp"
#include "genellip/verify/registry.hpp"

using namespace genellip;

namespace {

constexpr double ulp = 2.220446049250313e-16;
constexpr double inf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// n logit-spaced points on [lo, hi], each with its exact complement.
std::vector<Modulus> logit_r(int n, double lo, double hi) {
  const double x0 = std::log(lo / (1 - lo)), x1 = std::log(hi / (1 - hi));
  std::vector<Modulus> out;
  for (int i = 0; i < n; ++i) {
    const double x = x0 + (x1 - x0) * i / (n - 1);
    const double r = 1 / (1 + std::exp(-x)), one_minus_r = 1 / (1 + std::exp(x));
    out.push_back(Modulus(r, std::sqrt(one_minus_r * (1 + r))));
  }
  return out;
}

// z on a logit grid as (z, 1-z).
std::vector<Argument> logit_z(int n, double lo, double hi) {
  const double x0 = std::log(lo / (1 - lo)), x1 = std::log(hi / (1 - hi));
  std::vector<Argument> out;
  for (int i = 0; i < n; ++i) {
    const double x = x0 + (x1 - x0) * i / (n - 1);
    out.emplace_back(1 / (1 + std::exp(-x)), 1 / (1 + std::exp(x)));
  }
  return out;
}

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return v;
}

// b = c - a family grid: c in {0.3,...,1}, a = f c.
std::vector<std::array<double, 2>> ac_grid() {
  std::vector<std::array<double, 2>> g;
  for (double c : {0.3, 0.5, 0.7, 0.9, 1.0})
    for (double f : {0.1, 0.25, 0.5, 0.75, 0.9}) g.push_back({f * c, c});
  return g;
}

// Additive recurrence in d dimensions (generalized golden ratio).
double weyl(int k, int dim, int dims) {
  double g = 2.0;
  for (int i = 0; i < 60; ++i) g = std::pow(1 + g, 1.0 / (dims + 1));
  const double alpha = std::pow(1 / g, dim + 1);
  const double v = 0.5 + alpha * k;
  return v - std::floor(v);
}

Modulus modulus_of_logit(double x) { return Modulus::from_logit(x); }

double M(double a, double b, double c, const Argument& z) { return m_value(MPoint(a, b, c, z)).value; }

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& m : logit_r(33, 0.01, 0.99))
    worst = std::max(worst, std::abs(M(0.5, 0.5, 1, m.squared()) - std::numbers::inv_pi));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-10 && secs < 1.0, fmt("max |M - 1/pi| = %.2e, %.3f s", worst, secs)};
}

Outcome c2() {
  double worst = 0;
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const double ref = std::sin(std::numbers::pi * a) / std::numbers::pi;
    for (const auto& z : logit_z(33, 0.001, 0.999)) worst = std::max(worst, std::abs(M(a, 1 - a, 1, z) - ref));
  }
  return {worst <= 1e-9, fmt("max |M - sin(pi a)/pi| = %.2e", worst)};
}

Outcome c3() {
  const std::array<std::array<double, 2>, 10> ab{{{0.37, 1.21},
                                                  {0.83, 0.29},
                                                  {1.74, 2.46},
                                                  {0.12, 0.65},
                                                  {2.91, 0.44},
                                                  {0.58, 0.58},
                                                  {1.13, 3.37},
                                                  {4.05, 1.62},
                                                  {0.21, 0.17},
                                                  {2.38, 2.77}}};
  double worst = 0;
  for (const auto& t : ab) {
    const double a = t[0], b = t[1], c = (a + b + 1) / 2;
    const double d = std::exp(2 * std::lgamma(c) - std::lgamma(a) - std::lgamma(b));
    for (const auto& z : logit_z(33, 0.001, 0.999)) {
      const double m = M(a, b, c, z);
      const double ref = d * std::pow(z.z() * z.z_comp(), 1 - c);
      worst = std::max(worst, std::abs(m - ref) / m);
    }
  }
  return {worst <= 1e-8, fmt("max relative deviation from d (z(1-z))^{1-c} = %.2e over 10 triples", worst)};
}

Outcome c4() {
  double worst = 0;
  int n = 0;
  for (double a : {0.1, 0.25, 0.5, 1.0, 2.5})
    for (double b : {0.1, 0.25, 0.5, 1.0, 2.5})
      for (double c : {0.3, 0.5, 0.7, 0.9, 1.0, 1.5, 3.0})
        for (const auto& z : logit_z(33, 0.001, 0.999)) {
          const double m = M(a, b, c, z);
          worst = std::max(worst, std::abs(m - M(a, b, c, z.reflected())) / m);
          ++n;
        }
  return {worst <= 1e-11, fmt("max |M(x) - M(1-x)|/M(x) = %.2e at %g points", worst, n)};
}

Outcome c5() {
  double round = 0, refl = 0;
  for (const auto& [a, c] : ac_grid()) {
    const auto p = ModulusParams::from_ac(a, c);
    const double h2 = p.beta() * p.beta() / 4;
    for (const auto& m : logit_r(33, 0.001, 0.999)) {
      const double u = mu(p, m).value;
      round = std::max(round, std::abs(mu_inv(p, u) - m.r()));
      refl = std::max(refl, std::abs(u * mu(p, m.complement()).value - h2) / h2);
    }
  }
  return {round <= 1e-10 && refl <= 1e-9,
          fmt("max |mu_inv(mu(r)) - r| = %.2e, max |mu(r)mu(r') - (B/2)^2|/(B/2)^2 = %.2e", round, refl)};
}

Outcome c6() {
  double worst = 0;
  int saturated = 0;
  for (const auto& [a, c] : ac_grid()) {
    const auto p = ModulusParams::from_ac(a, c);
    for (double K : {1.25, 2.0, 5.0, 10.0})
      for (const auto& m : logit_r(33, 0.001, 0.999)) {
        const auto s = phi_k(p, DegreeK(K), m);
        if (s.saturated) {
          ++saturated;
          continue;
        }
        const double u = mu(p, m).value;
        worst = std::max(worst, std::abs(mu(p, s.modulus()).value - u / K) / u);
      }
  }
  return {worst <= 1e-9 && saturated == 0,
          fmt("max |mu(phi_K(r)) - mu(r)/K|/mu(r) = %.2e, saturated %g", worst, saturated)};
}

Outcome c7() {
  double worst_lo = inf, worst_hi = inf;
  int bad = 0;
  for (const auto& [a, c] : std::vector<std::array<double, 2>>{{0.3, 0.8}, {0.5, 1.0}, {0.7, 0.9}}) {
    const auto p = ModulusParams::from_ac(a, c);
    const double R = ramanujan_R(a, c - a).value;
    for (double K : {1.25, 2.0, 5.0, 10.0})
      for (const auto& m : logit_r(33, 0.001, 0.999)) {
        const auto s = phi_k(p, DegreeK(K), m);
        const double x = 2 * (std::log(s.value) - std::log(s.value_comp));
        const double err_log_s = s.value_comp * s.value_comp * 32 * ulp * (1 + std::abs(x)) + 4 * ulp;
        const double f = std::log(s.value) - std::log(m.r()) / K;
        const double err = err_log_s + 4 * ulp * std::abs(std::log(m.r()) / K) + 8 * ulp * std::abs(R);
        const double lo = f, hi = (1 - 1 / K) * R / 2 - f;
        worst_lo = std::min(worst_lo, lo - err);
        worst_hi = std::min(worst_hi, hi - err);
        bad += s.saturated || !(lo > err) || !(hi > err);
      }
  }
  return {bad == 0, fmt("min lower margin beyond error = %.2e, min upper margin beyond error = %.2e, unresolved %g",
                        worst_lo, worst_hi, bad)};
}

Outcome c8() {
  using verify::finite_diff;
  const EllipticParams e(0.3, 0.5, 0.8);
  const ModulusParams g = ModulusParams::from_ac(0.3, 0.8);
  const ModulusParams pw(0.3, 0.7, 1.0);  // a+b+1 = 2c
  struct Item {
    const char* name;
    std::function<double(const Modulus&)> f;
    std::function<double(const Modulus&)> df;
  };
  auto log_sp = [](const ModulusParams& p, double K) {
    return [p, K](const Modulus& m) { return std::log(phi_k(p, DegreeK(K), m).value_comp); };
  };
  // d log s'/dr = -(s/s'^2) ds/dr
  auto log_sp_slope = [](const ModulusParams& p, double K, auto ds) {
    return [p, K, ds](const Modulus& m) {
      const auto s = phi_k(p, DegreeK(K), m);
      return -s.value / (s.value_comp * s.value_comp) * ds(p, DegreeK(K), m.r()).value;
    };
  };
  const std::vector<Item> items{
      {"dK", [&](const Modulus& m) { return ell_k(e, m).value; },
       [&](const Modulus& m) { return ell_derivatives(e, m).dK_dr; }},
      {"dE", [&](const Modulus& m) { return ell_e(e, m).value; },
       [&](const Modulus& m) { return ell_derivatives(e, m).dE_dr; }},
      {"d(K-E)", [&](const Modulus& m) { return ell_k(e, m).value - ell_e(e, m).value; },
       [&](const Modulus& m) { return ell_derivatives(e, m).dKmE_dr; }},
      {"d(E-r'^2K)",
       [&](const Modulus& m) { return ell_e(e, m).value - m.r_comp() * m.r_comp() * ell_k(e, m).value; },
       [&](const Modulus& m) { return ell_derivatives(e, m).dEmr2K_dr; }},
      {"dmu", [&](const Modulus& m) { return mu(g, m).value; },
       [&](const Modulus& m) { return mu_deriv(g, m.r()).value; }},
      {"dphi", log_sp(g, 2.0), log_sp_slope(g, 2.0, [](auto& p, DegreeK K, double r) { return phi_deriv(p, K, r); })},
      {"dmu power case", [&](const Modulus& m) { return mu(pw, m).value; },
       [&](const Modulus& m) { return mu_deriv_power_case(pw, m.r()).value; }},
      {"dphi power case", log_sp(pw, 2.0),
       log_sp_slope(pw, 2.0, [](auto& p, DegreeK K, double r) { return phi_deriv_power_case(p, K, r); })},
  };
  double worst = 0;
  std::string where;
  for (const auto& it : items) {
    for (const auto& m : logit_r(20, 0.05, 0.95)) {
      const double r = m.r();
      const double h = 0.05 * std::min({r, 1 - r, 0.2});
      const auto fd = finite_diff([&](double y) { return it.f(Modulus(y)); }, r, h, 1e-15);
      const double ref = it.df(m);
      const double rel = std::abs(fd.first - ref) / std::abs(ref);
      if (rel > worst) {
        worst = rel;
        where = it.name;
      }
    }
  }
  return {worst <= 1e-7, fmt("max relative mismatch = %.2e over 8 formulas x 20 points", worst) + " (" + where + ")"};
}

Outcome c9() {
  double worst = inf;
  for (const auto& [a, c] : ac_grid())
    for (const auto& m : logit_r(33, 0.001, 0.999)) {
      const MPoint pt(a, c - a, c, m.squared());
      const double z = m.r() * m.r();
      worst = std::min(worst, m_value(pt).value - 2 * z * m_deriv(pt).value - (c - a) * a);
    }
  return {worst >= -1e-9, fmt("min of M(r^2) - 2r^2 M'(r^2) - (c-a)a = %.3e", worst)};
}

Outcome c10() {
  double worst = inf;
  for (const auto& [a, c] : ac_grid()) {
    const auto p = ModulusParams::from_ac(a, c);
    for (double K : {2.0, 5.0})
      for (int i = 0; i <= 40; ++i) {
        const double x = -20.0 + i;
        const Modulus q = modulus_of_logit(x);
        auto pphi = [&](double k) {
          const auto s = phi_k(p, DegreeK(k), q);
          if (s.saturated) return s.value >= 1 ? inf : -inf;
          return 2 * (std::log(s.value) - std::log(s.value_comp));
        };
        const double g = pphi(K), h = pphi(1 / K);
        worst = std::min(worst, g - (x >= 0 ? K * x : x / K));
        worst = std::min(worst, (x >= 0 ? x / K : K * x) - h);
      }
  }
  return {worst >= -1e-9, fmt("min margin over g and h = %.3e", worst)};
}

Outcome c11() {
  int bad = 0, pairs = 0;
  double worst = inf;
  for (double a : {0.3, 0.6})
    for (double r : {0.2, 0.5, 0.8}) {
      std::vector<EvalResult> v;
      for (double c : log_space(a + 0.05, 10.0, 33)) v.push_back(mu(ModulusParams(a, c - a, c), Modulus(r)));
      for (std::size_t i = 0; i + 1 < v.size(); ++i, ++pairs) {
        const double d = v[i].value - v[i + 1].value, e = v[i].abs_err_est + v[i + 1].abs_err_est;
        worst = std::min(worst, d - e);
        bad += !(d > e);
      }
      std::vector<double> x;
      for (double t : log_space(0.02, 1.0, 33)) {
        const double c = a + (1 - a) * t;
        const auto s = phi_k(ModulusParams(a, c - a, c), DegreeK(2.0), Modulus(r));
        x.push_back(s.saturated ? inf : std::log(s.value) - std::log(s.value_comp));
      }
      for (std::size_t i = 0; i + 1 < x.size(); ++i, ++pairs) {
        const double d = x[i] - x[i + 1], e = 64 * ulp * (2 + std::abs(x[i]) + std::abs(x[i + 1]));
        worst = std::min(worst, d - e);
        bad += !(d > e);
      }
    }
  return {bad == 0, fmt("%g of %g decreasing steps resolved, min margin beyond error = %.2e", pairs - bad, pairs, worst)};
}

Outcome c12() {
  int pairs = 0, bad = 0;
  double worst = inf;
  for (const auto& [a, c] : std::vector<std::array<double, 2>>{{0.3, 0.8}, {0.5, 1.0}, {0.7, 0.9}}) {
    const auto p = ModulusParams::from_ac(a, c);
    for (int k = 0; k < 200; ++k) {
      const double xu = -7 + 14 * weyl(k, 0, 2), xt = -7 + 14 * weyl(k, 1, 2);
      const Modulus u = modulus_of_logit(xu), t = modulus_of_logit(xt);
      const auto mu_u = mu(p, u), mu_t = mu(p, t);
      const double mid = (mu_u.value + mu_t.value) / 2;
      const double w = std::sqrt(u.r_comp() * t.r_comp());
      const auto lower = mu(p, Modulus(std::sqrt((1 - w) * (1 + w)), w));
      const double gm = std::sqrt(u.r() * t.r());
      const auto upper = mu(p, Modulus(gm, std::sqrt((1 - gm) * (1 + gm))));
      const double e = mu_u.abs_err_est + mu_t.abs_err_est + 4 * ulp * mid;
      const double m1 = mid - lower.value, e1 = e + lower.abs_err_est;
      const double m2 = upper.value - mid, e2 = e + upper.abs_err_est;
      ++pairs;
      const bool distinct = std::abs(u.r() - t.r()) > 1e-3;
      worst = std::min({worst, m1 - e1, m2 - e2});
      if (distinct ? !(m1 > e1 && m2 > e2) : (m1 < -e1 || m2 < -e2)) ++bad;
    }
  }
  return {bad == 0 && pairs >= 200, fmt("%g (u,t) pairs, %g violations, min margin beyond error = %.2e", pairs, bad, worst)};
}

Outcome c13() {
  const auto reports = verify::run_checks(verify::registry(), 0);
  int passed = 0, failed = 0, gating_bad = 0, conj = 0;
  for (const auto& r : reports) {
    passed += r.verdict == verify::Verdict::pass;
    failed += r.verdict == verify::Verdict::fail;
    conj += !r.gating;
    gating_bad += r.gating && r.verdict != verify::Verdict::pass;
  }
  return {passed >= 40 && failed == 0 && gating_bad == 0,
          fmt("%g passed, %g failed, ", passed, failed) + fmt("%g gating not passed, %g conjectures reported", gating_bad, conj)};
}

Outcome c14() {
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const double c = 0.2 + 1.3 * weyl(k, 0, 4);
    const double a = 0.05 + (std::min(c, 1.0) - 0.1) * weyl(k, 1, 4);
    const double blo = std::max(c - a, 0.0) + 0.02, bhi = c - 0.02;
    const double b = blo + (bhi - blo) * weyl(k, 2, 4);
    const Modulus m = modulus_of_logit(-6 + 12 * weyl(k, 3, 4));
    const double x = m_value(MPoint(a, b, c, m.squared())).value;
    const double y = m_value_elliptic(EllipticParams(a, b, c), m).value;
    worst = std::max(worst, std::abs(x - y) / std::abs(y));
  }
  return {worst <= 1e-9, fmt("max relative difference over 100 points = %.2e", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Legendre relation, classical M = 1/pi", c1},
      {"M(a,1-a,1,z) = sin(pi a)/pi", c2},
      {"power closed form, a+b+1 = 2c", c3},
      {"symmetry M(x) = M(1-x)", c4},
      {"mu round trip and reflection", c5},
      {"phi_K functional equation", c6},
      {"phi_K two-sided bounds", c7},
      {"derivative formulas vs central differences", c8},
      {"M-functions lower bound", c9},
      {"linearization bounds for g and h", c10},
      {"mu and phi_K decreasing in c", c11},
      {"midpoint inequalities for mu", c12},
      {"full gating registry", c13},
      {"contiguous vs elliptic route for M", c14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
