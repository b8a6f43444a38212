#include "genellip/elliptic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "genellip/scalar_special.hpp"

namespace genellip {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

std::string triple(double a, double b, double c) {
  return "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// (B/2) F(a_shifted, b; c; r^2)
EvalResult scaled_f(const EllipticParams& p, double a_eff, const Modulus& m) {
  const auto f = detail::hyp2f1_real(a_eff, p.b(), p.c(), m.r() * m.r(), m.r_comp() * m.r_comp());
  const double h = 0.5 * p.beta();
  return {h * f.value, h * f.abs_err_est + 4.0 * eps * std::abs(h * f.value), f.method};
}

}  // namespace

EllipticParams::EllipticParams(double a, double b, double c, Unchecked)
    : a_(a), b_(b), c_(c), beta_(genellip::beta(a, b).value) {}

EllipticParams::EllipticParams(double a, double b, double c)
    : EllipticParams(a, b, c, Unchecked{}) {
  const bool ok = std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && a > 0.0 &&
                  a < std::min(c, 1.0) && b > 0.0 && b < c && c <= a + b + zero_balanced_tol &&
                  c <= max_hyp_parameter;
  if (!ok) {
    throw parameter_error("elliptic parameters need 0<a<min(c,1), 0<b<c<=a+b; got " + triple(a, b, c));
  }
}

EllipticParams EllipticParams::from_ac(double a, double c) {
  if (!std::isfinite(a) || !std::isfinite(c) || !(a > 0.0) || !(a < c) || !(c <= 1.0)) {
    throw parameter_error("the (a,c) family needs 0<a<c<=1; got a=" + std::to_string(a) +
                          ", c=" + std::to_string(c));
  }
  return EllipticParams(a, c - a, c, Unchecked{});
}

Modulus::Modulus(double r) : r_(r), r_comp_(0.0) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw domain_error("modulus must lie in [0,1], got " + std::to_string(r));
  }
  r_comp_ = std::sqrt((1.0 - r) * (1.0 + r));
}

Modulus::Modulus(double r, double r_comp) : r_(r), r_comp_(r_comp) {
  if (!std::isfinite(r) || !std::isfinite(r_comp) || r < 0.0 || r > 1.0 || r_comp < 0.0 ||
      r_comp > 1.0) {
    throw domain_error("modulus pair must lie in [0,1]");
  }
  if (std::abs(r * r + r_comp * r_comp - 1.0) > 4.0 * eps) {
    throw domain_error("inconsistent modulus pair: r^2 + r'^2 != 1");
  }
}

Modulus Modulus::from_logit(double x) {
  if (std::isnan(x)) throw domain_error("logit coordinate is NaN");
  const double r2 = 1.0 / (1.0 + std::exp(-x));
  const double c2 = 1.0 / (1.0 + std::exp(x));
  Modulus m(0.0);
  m.r_ = std::sqrt(r2);
  m.r_comp_ = std::sqrt(c2);
  return m;
}

Argument Modulus::squared() const { return Argument(r_ * r_, r_comp_ * r_comp_); }

EvalResult ell_k(const EllipticParams& p, const Modulus& m) {
  if (m.r_comp() == 0.0) return EvalResult::infinity();
  if (m.r() == 0.0) return {0.5 * p.beta(), 2.0 * eps * p.beta(), Method::closed_form};
  return scaled_f(p, p.a(), m);
}

EvalResult ell_e(const EllipticParams& p, const Modulus& m) {
  if (m.r() == 0.0) return {0.5 * p.beta(), 2.0 * eps * p.beta(), Method::closed_form};
  if (m.r_comp() == 0.0) {
    const double v = ell_e_at_one(p);
    return {v, 16.0 * eps * v, Method::closed_form};
  }
  return scaled_f(p, p.a() - 1.0, m);
}

EvalResult ell_k_comp(const EllipticParams& p, const Modulus& m) { return ell_k(p, m.complement()); }

EvalResult ell_e_comp(const EllipticParams& p, const Modulus& m) { return ell_e(p, m.complement()); }

double ell_e_at_one(const EllipticParams& p) {
  const double a = p.a();
  const double b = p.b();
  const double c = p.c();
  return 0.5 * p.beta() * beta(c, c + 1.0 - a - b).value / beta(c + 1.0 - a, c - b).value;
}

EllipticDerivatives ell_derivatives(const EllipticParams& p, const Modulus& m) {
  const double r = m.r();
  const double rc2 = m.r_comp() * m.r_comp();
  if (!(r > 0.0) || !(rc2 > 0.0)) {
    throw domain_error("elliptic derivatives need 0 < r < 1, got r=" + std::to_string(r));
  }
  const double a = p.a();
  const double b = p.b();
  const double c = p.c();
  const double r2 = r * r;
  const double k = ell_k(p, m).value;
  const double e = ell_e(p, m).value;

  EllipticDerivatives d{};
  d.dK_dr = 2.0 / (r * rc2) * ((c - a) * e + (b * r2 + a - c) * k);
  d.dE_dr = 2.0 * (a - 1.0) / r * (k - e);
  d.dKmE_dr = 2.0 / (r * rc2) * (((c - a) - (1.0 - a) * rc2) * e + ((a + b) * r2 - c + rc2) * k);
  d.dEmr2K_dr = 2.0 / r * ((1.0 - c) * e + (c - 1.0 - (b - 1.0) * r2) * k);
  return d;
}

double arth(const Modulus& m) {
  if (m.r_comp() == 0.0) return std::numeric_limits<double>::infinity();
  if (m.r() < 0.5) return std::atanh(m.r());
  return std::log((1.0 + m.r()) / m.r_comp());
}

}  // namespace genellip
