#pragma once

// Shared pieces of the check catalog: default lattices, endpoint builders and
// Est wrappers around the library functions.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "genellip/elliptic.hpp"
#include "genellip/hypergeom.hpp"
#include "genellip/legendre_m.hpp"
#include "genellip/modulus_modular.hpp"
#include "genellip/scalar_special.hpp"
#include "genellip/verify/check.hpp"

namespace genellip::verify::reg {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline const std::vector<double>& unit_deltas() {
  static const std::vector<double> d{1e-1, 1e-2, 1e-4, 1e-8, 1e-16, 1e-32, 1e-64, 1e-128, 1e-256};
  return d;
}

// 1/c for c -> infinity.
inline const std::vector<double>& inverse_deltas() {
  static const std::vector<double> d{1e-1, 1e-2, 1e-4, 1e-8, 1e-16, 1e-32};
  return d;
}

inline Dim r_dim(int count = 33, double lo = 0.001, double hi = 0.999) {
  return Dim::range("r", lo, hi, count, Scale::logit);
}
inline GridSpec r_grid(int count = 33) { return {{r_dim(count)}}; }

inline const std::vector<double>& default_k() {
  static const std::vector<double> k{1.25, 2.0, 5.0, 10.0};
  return k;
}

// c in {0.3,...,1}, a = af*c, b = c-a.
inline GridSpec ac_grid(bool with_k = false) {
  GridSpec g{{Dim::list("c", {0.3, 0.5, 0.7, 0.9, 1.0}), Dim::list("af", {0.1, 0.25, 0.5, 0.75, 0.9})}};
  if (with_k) g.dims.push_back(Dim::list("K", default_k()));
  return g;
}

inline void expand_ac(Point& p) {
  const double a = p["af"] * p["c"];
  p.set("a", a);
  p.set("b", p["c"] - a);
}

// Fixed parameter table addressed by an index dimension "i".
inline GridSpec table_grid(std::size_t n) {
  std::vector<double> idx;
  for (std::size_t i = 0; i < n; ++i) idx.push_back(static_cast<double>(i));
  return {{Dim::list("i", idx)}};
}

inline std::function<void(Point&)> expand_table(std::vector<std::array<double, 3>> rows) {
  return [rows = std::move(rows)](Point& p) {
    const auto& t = rows.at(static_cast<std::size_t>(p["i"]));
    p.set("a", t[0]);
    p.set("b", t[1]);
    p.set("c", t[2]);
  };
}

// Modulus from a sample, keeping r' accurate as r -> 1.
inline Modulus modulus(const Arg& x) {
  if (x.x <= 0.5) return Modulus(x.x);
  const double rp = std::sqrt(x.comp * (1.0 + x.x));
  return Modulus(std::sqrt((1.0 - rp) * (1.0 + rp)), rp);
}

inline Arg arg_of(const Modulus& m) {
  const double r = m.r();
  return {r, r > 0.5 ? m.r_comp() * m.r_comp() / (1.0 + r) : 1.0 - r};
}

// log r and log r' for a modulus, both without cancellation.
inline double log_r(const Modulus& m) {
  return m.r() > 0.5 ? 0.5 * std::log1p(-m.r_comp() * m.r_comp()) : std::log(m.r());
}
inline double log_rp(const Modulus& m) {
  return m.r_comp() > 0.5 ? 0.5 * std::log1p(-m.r() * m.r()) : std::log(m.r_comp());
}
inline double arth_of(double x, double xc) {
  return x < 0.5 ? std::atanh(x) : std::log((1.0 + x) / xc);
}

inline Args at(double x) { return {Arg{x, 1.0 - x}}; }
inline Args near_one(double delta) { return {Arg{1.0 - delta, delta}}; }

inline Endpoint to_zero(std::function<double(const Point&)> limit, std::string label = "r->0+") {
  Endpoint e;
  e.label = std::move(label);
  e.locate = [](const Point&, double d) { return at(d); };
  e.limit = std::move(limit);
  e.deltas = unit_deltas();
  return e;
}

inline Endpoint to_one(std::function<double(const Point&)> limit, std::string label = "r->1-") {
  Endpoint e;
  e.label = std::move(label);
  e.locate = [](const Point&, double d) { return near_one(d); };
  e.limit = std::move(limit);
  e.deltas = unit_deltas();
  return e;
}

inline std::function<double(const Point&)> constant(double v) {
  return [v](const Point&) { return v; };
}

// ---- Est wrappers -------------------------------------------------------

inline double beta_of(double a, double b) { return genellip::beta(a, b).value; }

inline EllipticParams ell(const Point& p) { return EllipticParams(p["a"], p["b"], p["c"]); }
inline ModulusParams modp(const Point& p) { return ModulusParams(p["a"], p["b"], p["c"]); }

inline Est K(const EllipticParams& e, const Modulus& m) { return from(ell_k(e, m)); }
inline Est E(const EllipticParams& e, const Modulus& m) { return from(ell_e(e, m)); }

inline Est M(double a, double b, double c, const Argument& z) { return from(m_value(MPoint(a, b, c, z))); }
inline Est M(const Point& p, const Argument& z) { return M(p["a"], p["b"], p["c"], z); }

inline Est F(double a, double b, double c, const Arg& z) {
  return from(hyp2f1(HypParams(a, b, c), Argument(z.x, z.comp)));
}

inline Est mu_est(const ModulusParams& mp, const Modulus& m) { return from(mu(mp, m)); }

// phi_K(r) as the pair (s, s') with errors from the logit root tolerance.
struct PhiEst {
  Est s;
  Est sp;
  Est log_s;
  Est log_sp;
  bool saturated = false;
  Modulus modulus() const { return Modulus(s.v, sp.v); }
};

inline PhiEst phi(const ModulusParams& mp, double K, const Modulus& m) {
  const auto sol = phi_k(mp, DegreeK(K), m);
  PhiEst out;
  out.saturated = sol.saturated;
  const double s = sol.value, sp = sol.value_comp;
  if (sol.saturated || !(s > 0.0) || !(sp > 0.0)) {
    out.saturated = true;
    out.s = {s, 0.0};
    out.sp = {sp, 0.0};
    out.log_s = {std::log(s), 0.0};
    out.log_sp = {std::log(sp), 0.0};
    return out;
  }
  const double x = 2.0 * (std::log(s) - std::log(sp));
  const double dx = 64.0 * ulp * (1.0 + std::abs(x));
  out.s = {s, s * sp * sp * dx / 2.0};
  out.sp = {sp, sp * s * s * dx / 2.0};
  const Modulus sm(s, sp);
  out.log_s = {log_r(sm), sp * sp * dx / 2.0};
  out.log_sp = {log_rp(sm), s * s * dx / 2.0};
  return out;
}

inline CheckSpec make(std::string id, std::string anchor, Kind kind) {
  CheckSpec s;
  s.id = std::move(id);
  s.paper_anchor = std::move(anchor);
  s.kind = kind;
  return s;
}

void add_m_checks(std::vector<CheckSpec>& out);
void add_ek_checks(std::vector<CheckSpec>& out);
void add_modular_checks(std::vector<CheckSpec>& out);
void add_depc_checks(std::vector<CheckSpec>& out);
void add_conjectures(std::vector<CheckSpec>& out);

inline Est nan_est() { return {std::numeric_limits<double>::quiet_NaN(), inf}; }

}  // namespace genellip::verify::reg
