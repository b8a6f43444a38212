#include "genellip/modulus_modular.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

#include "genellip/legendre_m.hpp"
#include "genellip/scalar_special.hpp"

namespace genellip {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double logit_limit = 700.0;
constexpr int default_max_iterations = 200;
constexpr double power_case_tol = 1e-12;

void check_open_unit(double r, const char* who) {
  if (!std::isfinite(r) || !(r > 0.0) || !(r < 1.0)) {
    throw domain_error(std::string(who) + ": r must lie in (0,1), got " + std::to_string(r));
  }
}

void check_open_modulus(const Modulus& m, const char* who) {
  if (!(m.r() > 0.0) || !(m.r_comp() > 0.0)) {
    throw domain_error(std::string(who) + ": r must lie in (0,1)");
  }
}

EvalResult f_at(const ModulusParams& p, double z, double zc) {
  return detail::hyp2f1_real(p.a(), p.b(), p.c(), z, zc);
}

// (B/2) F(a,b;c;r^2)
EvalResult k_of(const ModulusParams& p, const Modulus& m) {
  const auto f = f_at(p, m.r() * m.r(), m.r_comp() * m.r_comp());
  const double h = 0.5 * p.beta();
  return {h * f.value, h * f.abs_err_est + 2.0 * eps * std::abs(h * f.value), f.method};
}

double rel(const EvalResult& e) { return std::abs(e.rel_err_est()); }

void require_power_case(const ModulusParams& p) {
  if (std::abs(p.a() + p.b() + 1.0 - 2.0 * p.c()) > power_case_tol) {
    throw regime_error("closed-form derivative needs a+b+1 = 2c");
  }
}

}  // namespace

ModulusParams::ModulusParams(double a, double b, double c) : a_(a), b_(b), c_(c), beta_(0.0) {
  for (double v : {a, b, c}) {
    if (!std::isfinite(v) || !(v > 0.0) || v > max_hyp_parameter) {
      throw parameter_error("modulus parameters must lie in (0, 50]");
    }
  }
  if (a + b < c - zero_balanced_tol) {
    throw parameter_error("generalized modulus needs a+b >= c; got a+b=" + std::to_string(a + b) +
                          ", c=" + std::to_string(c));
  }
  beta_ = genellip::beta(a, b).value;
}

ModulusParams ModulusParams::from_ac(double a, double c) {
  if (!std::isfinite(a) || !std::isfinite(c) || !(a > 0.0) || !(a < c)) {
    throw parameter_error("the (a,c) family needs 0 < a < c");
  }
  return ModulusParams(a, c - a, c);
}

bool ModulusParams::ac_family() const {
  return std::abs(a_ + b_ - c_) <= zero_balanced_tol && a_ < c_ && c_ <= 1.0;
}

DegreeK::DegreeK(double K) : K_(K) {
  if (!std::isfinite(K) || !(K > 0.0)) {
    throw domain_error("degree K must be a finite positive number, got " + std::to_string(K));
  }
}

double log_mu(const ModulusParams& p, const Modulus& m) {
  check_open_modulus(m, "mu");
  const double z = m.r() * m.r();
  const double zc = m.r_comp() * m.r_comp();
  return std::log(0.5 * p.beta()) + detail::log_hyp2f1_real(p.a(), p.b(), p.c(), zc, z) -
         detail::log_hyp2f1_real(p.a(), p.b(), p.c(), z, zc);
}

EvalResult mu(const ModulusParams& p, const Modulus& m) {
  check_open_modulus(m, "mu");
  const double z = m.r() * m.r();
  const double zc = m.r_comp() * m.r_comp();
  const auto num = f_at(p, zc, z);
  const auto den = f_at(p, z, zc);
  const double relerr = rel(num) + rel(den) + 4.0 * eps;
  double v = 0.5 * p.beta() * num.value / den.value;
  if (!std::isfinite(v) || !std::isfinite(num.value) || !std::isfinite(den.value) || v == 0.0) {
    v = std::exp(log_mu(p, m));
  }
  const Method method = num.method == Method::series ? den.method : num.method;
  return {v, relerr * v, method};
}

EvalResult mu(const ModulusParams& p, double r) {
  check_open_unit(r, "mu");
  return mu(p, Modulus(r));
}

int solver_max_iterations() {
  if (const char* env = std::getenv("GENELLIP_MAX_ITERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
  }
  return default_max_iterations;
}

Solution mu_inv_log(const ModulusParams& p, double log_y) {
  if (!std::isfinite(log_y)) throw domain_error("mu_inv: target must be finite and positive");
  auto f = [&](double x) { return log_mu(p, Modulus::from_logit(x)) - log_y; };

  const double f_lo = f(-logit_limit);
  if (f_lo <= 0.0) return {0.0, 1.0, f_lo < 0.0, 0};
  const double f_hi = f(logit_limit);
  if (f_hi >= 0.0) return {1.0, 0.0, f_hi > 0.0, 0};

  const int budget = solver_max_iterations();
  std::uintmax_t iters = static_cast<std::uintmax_t>(budget);
  auto tol = [](double lo, double hi) { return std::abs(hi - lo) <= 4.0 * eps * std::max(1.0, std::abs(lo)); };
  const auto bracket = boost::math::tools::toms748_solve(f, -logit_limit, logit_limit, f_lo, f_hi, tol, iters);
  const double x = 0.5 * (bracket.first + bracket.second);
  const int used = static_cast<int>(iters);
  if (!tol(bracket.first, bracket.second)) {
    // Budget exhausted; accept only if the residual already meets the target.
    if (std::abs(f(x)) > 1e-12) {
      throw convergence_error("mu_inv: no convergence within " + std::to_string(budget) + " iterations");
    }
  }
  const Modulus s = Modulus::from_logit(x);
  return {s.r(), s.r_comp(), false, used};
}

double mu_inv(const ModulusParams& p, double y) {
  if (!std::isfinite(y) || !(y > 0.0)) {
    throw domain_error("mu_inv: target must be finite and positive, got " + std::to_string(y));
  }
  return mu_inv_log(p, std::log(y)).value;
}

Solution phi_k(const ModulusParams& p, DegreeK K, const Modulus& m) {
  check_open_modulus(m, "phi_k");
  if (K.K() > max_degree_K) return {1.0, 0.0, true, 0};
  if (K.K() < min_degree_K) return {0.0, 1.0, true, 0};
  if (K.K() == 1.0) return {m.r(), m.r_comp(), false, 0};
  return mu_inv_log(p, log_mu(p, m) - std::log(K.K()));
}

Solution phi_k(const ModulusParams& p, DegreeK K, double r) {
  check_open_unit(r, "phi_k");
  return phi_k(p, K, Modulus(r));
}

Solution modular_solve(const ModulusParams& p, double degree_p, double r) {
  if (!std::isfinite(degree_p) || !(degree_p > 0.0)) {
    throw domain_error("modular degree p must be positive, got " + std::to_string(degree_p));
  }
  return phi_k(p, DegreeK(1.0 / degree_p), r);
}

EvalResult mu_deriv(const ModulusParams& p, double r) {
  check_open_unit(r, "mu_deriv");
  const Modulus m(r);
  const double rc2 = m.r_comp() * m.r_comp();
  const auto mm = m_value(MPoint(p.a(), p.b(), p.c(), m.squared()));
  const auto v = f_at(p, r * r, rc2);
  const double val = -p.beta() * mm.value / (r * rc2 * v.value * v.value);
  const double relerr = rel(mm) + 2.0 * rel(v) + 8.0 * eps;
  return {val, std::abs(val) * relerr, mm.method};
}

EvalResult phi_deriv(const ModulusParams& p, DegreeK K, double r) {
  check_open_unit(r, "phi_deriv");
  const auto sol = phi_k(p, K, r);
  if (sol.saturated || !(sol.value > 0.0) || !(sol.value_comp > 0.0)) {
    throw regime_error("phi_deriv: phi_K(r) is saturated");
  }
  const Modulus m(r);
  const Modulus s = sol.modulus();
  const double r2 = r * r, rc2 = m.r_comp() * m.r_comp();
  const double s2 = s.r() * s.r(), sc2 = s.r_comp() * s.r_comp();
  const auto mr = m_value(MPoint(p.a(), p.b(), p.c(), m.squared()));
  const auto ms = m_value(MPoint(p.a(), p.b(), p.c(), s.squared()));
  const auto vr = f_at(p, r2, rc2);
  const auto vs = f_at(p, s2, sc2);
  const double ratio_v = vs.value / vr.value;
  const double val = (mr.value / ms.value) * (s.r() * sc2) / (r * rc2) * ratio_v * ratio_v / K.K();
  const double relerr = rel(mr) + rel(ms) + 2.0 * (rel(vr) + rel(vs)) + 16.0 * eps;
  return {val, std::abs(val) * relerr, mr.method};
}

EvalResult mu_deriv_power_case(const ModulusParams& p, double r) {
  check_open_unit(r, "mu_deriv");
  require_power_case(p);
  const Modulus m(r);
  const double a = p.a(), b = p.b(), c = p.c();
  const double log_d = 2.0 * (gamma_ln(a).value + gamma_ln(b).value + gamma_ln(c).value) -
                       std::log(4.0) - 3.0 * gamma_ln(a + b).value;
  const auto k = k_of(p, m);
  const double log_mag = log_d - (2.0 * c - 1.0) * std::log(r) - 2.0 * c * std::log(m.r_comp()) -
                         2.0 * std::log(k.value);
  const double val = -std::exp(log_mag);
  return {val, std::abs(val) * (2.0 * rel(k) + 16.0 * eps * (1.0 + std::abs(log_mag))),
          Method::closed_form};
}

EvalResult phi_deriv_power_case(const ModulusParams& p, DegreeK K, double r) {
  check_open_unit(r, "phi_deriv");
  require_power_case(p);
  const auto sol = phi_k(p, K, r);
  if (sol.saturated || !(sol.value > 0.0) || !(sol.value_comp > 0.0)) {
    throw regime_error("phi_deriv: phi_K(r) is saturated");
  }
  const Modulus m(r);
  const Modulus s = sol.modulus();
  const double c = p.c();
  const auto kr = k_of(p, m);
  const auto ks = k_of(p, s);
  const double log_val = (2.0 * c - 1.0) * std::log(s.r() / r) + 2.0 * c * std::log(s.r_comp() / m.r_comp()) +
                         2.0 * std::log(ks.value / kr.value) - std::log(K.K());
  const double val = std::exp(log_val);
  return {val, val * (2.0 * (rel(kr) + rel(ks)) + 16.0 * eps * (1.0 + std::abs(log_val))),
          Method::closed_form};
}

double logit_p(double x) {
  check_open_unit(x, "logit_p");
  return 2.0 * std::log(x) - std::log1p(-x * x);
}

double logit_p(const Modulus& m) {
  check_open_modulus(m, "logit_p");
  return 2.0 * (std::log(m.r()) - std::log(m.r_comp()));
}

Modulus logit_q(double x) { return Modulus::from_logit(x); }

}  // namespace genellip
