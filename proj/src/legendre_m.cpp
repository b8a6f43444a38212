#include "genellip/legendre_m.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "genellip/scalar_special.hpp"

namespace genellip {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double closed_form_tol = 1e-12;
// Below this distance from an endpoint, a+b > c uses the factored form.
constexpr double factored_window = 0.05;

void check_point(double a, double b, double c, double z, double zc) {
  for (double v : {a, b, c}) {
    if (!std::isfinite(v) || !(v > 0.0) || v > max_hyp_parameter) {
      throw parameter_error("M-function parameters must lie in (0, 50]");
    }
  }
  if (!(z > 0.0) || !(zc > 0.0)) {
    throw domain_error("M-function argument must lie in (0,1), got z=" + std::to_string(z));
  }
}

struct Pair {
  EvalResult at_z;
  EvalResult at_comp;
};

Pair both_sides(double a, double b, double c, const MPoint& pt) {
  return {detail::hyp2f1_real(a, b, c, pt.z, pt.z_comp),
          detail::hyp2f1_real(a, b, c, pt.z_comp, pt.z)};
}

// Terms t_i = coef_i * x_i * y_i; the error is propagated from the factors.
struct Accum {
  double value = 0.0;
  double err = 0.0;
  double mag = 0.0;
  void add(double coef, const EvalResult& x, const EvalResult& y, double extra = 1.0) {
    const double t = coef * extra * x.value * y.value;
    value += t;
    mag += std::abs(t);
    err += std::abs(coef * extra) * (x.abs_err_est * std::abs(y.value) + y.abs_err_est * std::abs(x.value));
  }
  EvalResult result(Method m) const { return {value, err + 8.0 * eps * mag, m}; }
};

// Contiguous form, direct.
EvalResult contiguous(const MPoint& pt) {
  const double a = pt.a, b = pt.b, c = pt.c;
  const auto v = both_sides(a, b, c, pt);
  const auto u = both_sides(a - 1.0, b, c, pt);
  Accum acc;
  acc.add(c - a, u.at_z, v.at_comp);
  acc.add(c - a, u.at_comp, v.at_z);
  acc.add(2.0 * (a - c) + b, v.at_z, v.at_comp);
  return acc.result(std::max(pt.z, pt.z_comp) < z_switch ? Method::series : Method::transform_near_one);
}

// Phi = (z(1-z))^{a+b-c} M through the Euler-transformed functions
// V = F(c-a,c-b;c;.), U = F(c-a+1,c-b;c;.).
EvalResult factored(const MPoint& pt) {
  const double a = pt.a, b = pt.b, c = pt.c;
  const auto vv = both_sides(c - a, c - b, c, pt);
  const auto uu = both_sides(c - a + 1.0, c - b, c, pt);
  Accum acc;
  acc.add(c - a, uu.at_z, vv.at_comp, pt.z_comp);
  acc.add(c - a, uu.at_comp, vv.at_z, pt.z);
  acc.add(2.0 * (a - c) + b, vv.at_z, vv.at_comp);
  return acc.result(Method::transform_near_one);
}

// z(1-z) [v1 v' + v F'(1-z)] with F' = (ab/c) F(a+1,b+1;c+1;.); every term is
// positive, so this keeps relative accuracy where M -> 0 (c > a+b, z near 0 or 1).
EvalResult positive_wronskian(const MPoint& pt) {
  const double a = pt.a, b = pt.b, c = pt.c;
  const auto v = both_sides(a, b, c, pt);
  const auto dv = both_sides(a + 1.0, b + 1.0, c + 1.0, pt);
  Accum acc;
  const double k = a * b / c * pt.z * pt.z_comp;
  acc.add(k, v.at_comp, dv.at_z);
  acc.add(k, v.at_z, dv.at_comp);
  return acc.result(Method::transform_near_one);
}

}  // namespace

MPoint::MPoint(double a_, double b_, double c_, double z_)
    : a(a_), b(b_), c(c_), z(z_), z_comp(1.0 - z_) {
  check_point(a, b, c, z, z_comp);
}

MPoint::MPoint(double a_, double b_, double c_, const Argument& arg)
    : a(a_), b(b_), c(c_), z(arg.z()), z_comp(arg.z_comp()) {
  check_point(a, b, c, z, z_comp);
}

EvalResult m_value(const MPoint& pt) {
  const double s = pt.c - pt.a - pt.b;
  if (s < -zero_balanced_tol && std::min(pt.z, pt.z_comp) < factored_window) {
    const auto phi = factored(pt);
    const double scale = std::exp(s * std::log(pt.z * pt.z_comp));
    return {scale * phi.value, scale * phi.abs_err_est + 8.0 * eps * std::abs(scale * phi.value),
            phi.method};
  }
  if (s > zero_balanced_tol && std::min(pt.z, pt.z_comp) < factored_window) return positive_wronskian(pt);
  return contiguous(pt);
}

EvalResult m_bounded_factor(const MPoint& pt) {
  const double s = pt.c - pt.a - pt.b;
  if (s < -zero_balanced_tol) return factored(pt);
  const auto m = m_value(pt);
  const double scale = std::exp(-s * std::log(pt.z * pt.z_comp));
  return {scale * m.value, scale * m.abs_err_est, m.method};
}

double m_bounded_factor_at_zero(double a, double b, double c) {
  const double d = a + b - c;
  if (!(d > 0.0)) throw regime_error("bounded-factor limit needs a+b > c");
  return d * beta(c, d).value / beta(a, b).value;
}

EvalResult m_value_elliptic(const EllipticParams& p, const Modulus& m) {
  if (!(m.r() > 0.0) || !(m.r_comp() > 0.0)) {
    throw domain_error("M from elliptic integrals needs 0 < r < 1");
  }
  const auto k = ell_k(p, m);
  const auto e = ell_e(p, m);
  const auto kc = ell_k_comp(p, m);
  const auto ec = ell_e_comp(p, m);
  const double a = p.a(), b = p.b(), c = p.c();
  Accum acc;
  acc.add(a + b - c, k, kc);
  acc.add(c - a, k, ec);
  acc.add(c - a, kc, e);
  acc.add(-(c - a), k, kc);
  const double h = 0.5 * p.beta();
  const double inv = 1.0 / (h * h);
  const auto r = acc.result(Method::transform_near_one);
  return {inv * r.value, inv * r.abs_err_est + 4.0 * eps * std::abs(inv * r.value), r.method};
}

EvalResult m_deriv(const MPoint& pt) {
  const double a = pt.a, b = pt.b, c = pt.c, z = pt.z;
  const auto v = both_sides(a, b, c, pt);
  const auto u = both_sides(a - 1.0, b, c, pt);
  const double abm1 = a + b - 1.0;
  Accum acc;
  acc.add((c - a) * ((1.0 - c) + abm1 * z), u.at_z, v.at_comp);
  acc.add((c - a) * ((c - a - b) + abm1 * z), u.at_comp, v.at_z);
  acc.add((pt.z_comp - z) * ((c - a) * (a + 2.0 * b - 1.0) - b * b), v.at_z, v.at_comp);
  const double inv = 1.0 / (z * pt.z_comp);
  const auto r = acc.result(Method::transform_near_one);
  return {inv * r.value, inv * r.abs_err_est + 4.0 * eps * std::abs(inv * r.value), r.method};
}

std::optional<EvalResult> m_closed_form(const MPoint& pt) {
  const double a = pt.a, b = pt.b, c = pt.c;
  const double lzz = std::log(pt.z * pt.z_comp);
  if (std::abs(a - c) <= closed_form_tol) {
    const double v = b * std::exp(-b * lzz);
    return EvalResult{v, 8.0 * eps * std::abs(v) * (1.0 + std::abs(b * lzz)), Method::closed_form};
  }
  if (std::abs(b - c) <= closed_form_tol) {
    const double v = a * std::exp(-a * lzz);
    return EvalResult{v, 8.0 * eps * std::abs(v) * (1.0 + std::abs(a * lzz)), Method::closed_form};
  }
  if (std::abs(a + b + 1.0 - 2.0 * c) <= closed_form_tol) {
    const auto lc = detail::log_abs_gamma(c);
    const auto la = detail::log_abs_gamma(a);
    const auto lb = detail::log_abs_gamma(b);
    const double log_d = 2.0 * lc.log_abs - la.log_abs - lb.log_abs;
    const double v = std::exp(log_d + (1.0 - c) * lzz);
    const double scale = 2.0 * std::abs(lc.log_abs) + std::abs(la.log_abs) + std::abs(lb.log_abs) +
                         std::abs((1.0 - c) * lzz);
    return EvalResult{v, 8.0 * eps * std::abs(v) * (1.0 + scale), Method::closed_form};
  }
  return std::nullopt;
}

}  // namespace genellip
