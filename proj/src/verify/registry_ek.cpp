#include <cmath>
#include <vector>

#include "registry_support.hpp"

namespace genellip::verify::reg {

namespace {

GridSpec ek_grid() {
  const std::vector<double> ab{0.2, 0.45, 0.7, 0.9};
  return {{Dim::list("a", ab), Dim::list("b", ab), Dim::list("c", {0.5, 0.8, 1.0, 1.3, 1.6})}};
}

bool ek_admissible(const Point& p) {
  const double a = p["a"], b = p["b"], c = p["c"];
  const double m = std::min(c, 1.0);
  return a < m && b < m && c <= a + b + 1e-12;
}

Est half_b(const Point& p) {
  const double h = 0.5 * beta_of(p["a"], p["b"]);
  return {h, 4.0 * ulp * h};
}

Est Fz(double a, double b, double c, const Argument& z) { return from(hyp2f1(HypParams(a, b, c), z)); }

// (K - E)/r^2 = (B/2)(b/c) F(a,b+1;c+1;r^2)
Est kme_over_r2(const Point& p, const Modulus& m) {
  const double a = p["a"], b = p["b"], c = p["c"];
  return half_b(p) * (b / c) * Fz(a, b + 1.0, c + 1.0, m.squared());
}

// (E - r'^2 K)/r^2 = (B/2)((c-b)/c) F(a,b;c+1;r^2)
Est emk_over_r2(const Point& p, const Modulus& m) {
  const double a = p["a"], b = p["b"], c = p["c"];
  return half_b(p) * ((c - b) / c) * Fz(a, b, c + 1.0, m.squared());
}

// (F(a,b;c;z) - 1)/z by direct summation, z < 0.1.
Est fm1_over_z(double a, double b, double c, double z) {
  double term = a * b / c;
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
  }
  return {sum, 8.0 * ulp * std::abs(sum)};
}

// (1-z)^s F(a,b;c;z) - 1 from the Cauchy product of both Maclaurin series, z <= 1/4.
Est weighted_fm1(double a, double b, double c, double s, double z) {
  std::vector<double> t{1.0}, w{1.0};
  double sum = 0.0, sum_abs = 0.0, zn = 1.0;
  for (int n = 1; n < 400; ++n) {
    const double k = n - 1.0;
    t.push_back(t.back() * (a + k) * (b + k) / ((c + k) * n));
    w.push_back(w.back() * (k - s) / n);
    zn *= z;
    double d = 0.0, d_abs = 0.0;
    for (int i = 0; i <= n; ++i) {
      d += t[i] * w[n - i];
      d_abs += std::abs(t[i] * w[n - i]);
    }
    sum += d * zn;
    sum_abs += d_abs * zn;
    if (n >= 3 && d_abs * zn <= 1e-18 * std::abs(sum)) break;
  }
  return {sum, 16.0 * ulp * sum_abs};
}

Est exact_r(const Modulus& m) { return Est::exact(m.r()); }
Est exact_rp(const Modulus& m) { return Est::exact(m.r_comp()); }
Est log_of_rp(const Modulus& m) { const double v = log_rp(m); return {v, 4.0 * ulp * std::abs(v) + 2.0 * ulp}; }
Est arth_est(const Modulus& m) { const double v = arth(m); return {v, 8.0 * ulp * std::abs(v)}; }

CheckSpec ek_check(std::string id, std::string anchor, Kind kind, std::vector<Shape> shapes) {
  auto s = make(std::move(id), std::move(anchor), kind);
  s.param_grid = ek_grid();
  s.admissible = ek_admissible;
  s.arg_grid = r_grid();
  s.shapes = std::move(shapes);
  return s;
}

CheckSpec ac_check(std::string id, std::string anchor, Kind kind, std::vector<Shape> shapes) {
  auto s = make(std::move(id), std::move(anchor), kind);
  s.param_grid = ac_grid();
  s.expand = expand_ac;
  s.arg_grid = r_grid();
  s.shapes = std::move(shapes);
  return s;
}

std::function<double(const Point&)> b_over_2() {
  return [](const Point& p) { return 0.5 * beta_of(p["a"], p["b"]); };
}

double ramanujan_r(double a, double b) {
  return -digamma(a).value - digamma(b).value - 2.0 * euler_gamma;
}

}  // namespace

void add_ek_checks(std::vector<CheckSpec>& out) {
  {
    auto s = ek_check("ek-k-increasing", "K(r) increasing and unbounded, E(r) decreasing and bounded",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) { return K(ell(p), modulus(x[0])); };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(inf))};
    out.push_back(s);
    s.id = "ek-e-decreasing";
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) { return E(ell(p), modulus(x[0])); };
    s.endpoints = {to_zero(b_over_2()), to_one([](const Point& p) { return ell_e_at_one(ell(p)); })};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ek-contiguous", "K - E = (B/2)(b/c) r^2 F(a,b+1;c+1;r^2), E - r'^2 K = (B/2)((c-b)/c) r^2 F(a,b;c+1;r^2)",
                      Kind::identity, {Shape::zero});
    s.arg_grid = {{r_dim(33, 0.05, 0.999)}};
    s.tolerance = 1e-10;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const Est k = K(ell(p), m), e = E(ell(p), m);
      const double r2 = m.r() * m.r(), rp2 = m.r_comp() * m.r_comp();
      const Est d1 = ((k - e) - r2 * kme_over_r2(p, m)) / (k - e);
      const Est d2 = ((e - rp2 * k) - r2 * emk_over_r2(p, m)) / (e - rp2 * k);
      return std::abs(d1.v) > std::abs(d2.v) ? d1 : d2;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-1", "(K-E)/(r^2 K) strictly increasing from (0,1) onto (b/c,1)", Kind::range_endpoints,
                      {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return kme_over_r2(p, m) / K(ell(p), m);
    };
    s.endpoints = {to_zero([](const Point& p) { return p["b"] / p["c"]; }), to_one(constant(1.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-2", "(E - r'^2 K)/r^2 has positive Maclaurin coefficients, onto (B(c-b)/(2c), d) with d = E(1)",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) { return emk_over_r2(p, modulus(x[0])); };
    s.endpoints = {to_zero([](const Point& p) { return beta_of(p["a"], p["b"]) * (p["c"] - p["b"]) / (2.0 * p["c"]); }),
                   to_one([](const Point& p) { return ell_e_at_one(ell(p)); })};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-3", "E/r'^2 has positive Maclaurin coefficients, onto [B/2, inf)", Kind::range_endpoints,
                      {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return E(ell(p), m) / (m.r_comp() * m.r_comp());
    };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(inf))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-4", "r'^2 K has negative Maclaurin coefficients past the constant, onto (0, B/2]",
                      Kind::range_endpoints, {Shape::decreasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return m.r_comp() * m.r_comp() * K(ell(p), m);
    };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-5", "K log-convex from [0,1) onto [B/2, inf)", Kind::range_endpoints,
                      {Shape::increasing, Shape::convex});
    s.curve = [](const Point& p, const Args& x) { return log(K(ell(p), modulus(x[0]))); };
    s.endpoints = {to_zero([](const Point& p) { return std::log(0.5 * beta_of(p["a"], p["b"])); }),
                   to_one(constant(inf))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-6", "(E - r'^2 K)/(r^2 K) strictly decreasing from (0,1) onto (0, 1-b/c)",
                      Kind::range_endpoints, {Shape::decreasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return emk_over_r2(p, m) / K(ell(p), m);
    };
    s.endpoints = {to_zero([](const Point& p) { return 1.0 - p["b"] / p["c"]; }), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot-7", "(K-E)/(E - r'^2 K) strictly increasing from (0,1) onto (b/(c-b), inf)",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return kme_over_r2(p, m) / emk_over_r2(p, m);
    };
    s.endpoints = {to_zero([](const Point& p) { return p["b"] / (p["c"] - p["b"]); }), to_one(constant(inf))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("ekmonot2-1", "b = c-a, a,b in (0,1): r^2 K/log(1/r') strictly decreasing from (0,1) onto (1,B)",
                  Kind::range_endpoints);
    s.param_grid = {{Dim::list("c", {0.3, 0.5, 0.7, 0.9, 1.0, 1.3, 1.6}), Dim::list("af", {0.1, 0.25, 0.5, 0.75, 0.9})}};
    s.expand = expand_ac;
    s.admissible = [](const Point& p) { return p["a"] < 1.0 && p["b"] < 1.0; };
    s.arg_grid = r_grid();
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return m.r() * m.r() * K(ell(p), m) / -log_of_rp(m);
    };
    s.endpoints = {to_zero([](const Point& p) { return beta_of(p["a"], p["b"]); }), to_one(constant(1.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("ekmonot2-2", "2ab < c <= a+b < c+1/2: r'K strictly decreasing from [0,1) onto (0, B/2]",
                      Kind::range_endpoints, {Shape::decreasing});
    s.admissible = [](const Point& p) {
      const double a = p["a"], b = p["b"], c = p["c"];
      return ek_admissible(p) && 2.0 * a * b < c && a + b < c + 0.5;
    };
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return m.r_comp() * K(ell(p), m);
    };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("hyper-1", "0<a<c<=1, b=c-a: r K/arth(r) strictly decreasing from (0,1) onto (1, B/2)",
                      Kind::range_endpoints, {Shape::decreasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return exact_r(m) * K(ell(p), m) / arth_est(m);
    };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(1.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("hyper-2",
                      "0<a<c<=1, b=c-a: ((B/2)^2 - (r'K)^2)/(E - r'^2 K) strictly increasing onto "
                      "(B(c-2ac+2a^2)/(2a), B^2(c-a)/2)",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const Est h = half_b(p);
      const Est k = K(ell(p), m);
      const double rp2 = m.r_comp() * m.r_comp();
      if (m.r() < 0.3) {
        // (1 - r'^2 F^2)/r^2 = F^2 - q(F+1), q = (F-1)/r^2
        const Est f = k / h;
        const Est q = fm1_over_z(p["a"], p["b"], p["c"], m.r() * m.r());
        return h * h * (f * f - q * (f + 1.0)) / emk_over_r2(p, m);
      }
      return (h * h - rp2 * k * k) / (m.r() * m.r() * emk_over_r2(p, m));
    };
    s.endpoints = {to_zero([](const Point& p) {
                     const double a = p["a"], c = p["c"];
                     return beta_of(a, p["b"]) * (c - 2.0 * a * c + 2.0 * a * a) / (2.0 * a);
                   }),
                   to_one([](const Point& p) {
                     const double B = beta_of(p["a"], p["b"]);
                     return B * B * (p["c"] - p["a"]) / 2.0;
                   })};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("hyper-3", "0<a<c<=1, b=c-a: r'^2(K-E)/(r^2 E) strictly decreasing from (0,1) to (0,(c-a)/c)",
                      Kind::range_endpoints, {Shape::decreasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return m.r_comp() * m.r_comp() * kme_over_r2(p, m) / E(ell(p), m);
    };
    s.endpoints = {to_zero([](const Point& p) { return (p["c"] - p["a"]) / p["c"]; }), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("squareroottimesk-1",
                  "0<a<c<=1: r'^p K decreasing iff p >= 2a(c-a)/c, then onto (0,B/2); sqrt(r')K decreasing",
                  Kind::range_endpoints);
    s.param_grid = ac_grid();
    s.param_grid.dims.push_back(Dim::list("pf", {0.0, 0.75, 1.0, 1.5}));
    s.expand = [](Point& p) {
      expand_ac(p);
      const double p0 = 2.0 * p["a"] * (p["c"] - p["a"]) / p["c"];
      // pf = 0 stands for p = 1/2.
      p.set("p", p["pf"] == 0.0 ? 0.5 : p["pf"] * p0);
    };
    s.arg_grid = r_grid();
    // p = 2a(c-a)/c: increments near r = 0 are O(r^4).
    s.tolerance = 1e-15;
    s.shapes_for = [](const Point& p) {
      return std::vector<Shape>{p["pf"] == 0.0 || p["pf"] >= 1.0 ? Shape::decreasing : Shape::somewhere_increasing};
    };
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double z = m.r() * m.r();
      if (z <= 0.25) {
        const Est h = weighted_fm1(p["a"], p["b"], p["c"], 0.5 * p["p"], z);
        return half_b(p) * Est{1.0 + h.v, h.e + ulp};
      }
      const double w = std::exp(p["p"] * log_rp(m));
      return w * K(ell(p), m);
    };
    auto decreasing = [](const Point& p) { return p["pf"] == 0.0 || p["pf"] >= 1.0; };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(0.0))};
    for (auto& e : s.endpoints) e.applies = decreasing;
    out.push_back(std::move(s));
  }
  {
    auto s = make("squareroottimesk-2",
                  "0<a<c<=1: r'^p E increasing iff p <= -2(1-a)(c-a)/c, then onto (B/2,inf); E/r'^2 increasing",
                  Kind::range_endpoints);
    s.param_grid = ac_grid();
    s.param_grid.dims.push_back(Dim::list("pf", {0.0, 0.75, 1.0, 1.5}));
    s.expand = [](Point& p) {
      expand_ac(p);
      const double p0 = -2.0 * (1.0 - p["a"]) * (p["c"] - p["a"]) / p["c"];
      // pf = 0 stands for p = -2.
      p.set("p", p["pf"] == 0.0 ? -2.0 : p["pf"] * p0);
    };
    s.arg_grid = r_grid();
    s.shapes_for = [](const Point& p) {
      return std::vector<Shape>{p["pf"] == 0.0 || p["pf"] >= 1.0 ? Shape::increasing : Shape::somewhere_decreasing};
    };
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double w = std::exp(p["p"] * log_rp(m));
      return w * E(ell(p), m);
    };
    auto increasing = [](const Point& p) { return p["pf"] == 0.0 || p["pf"] >= 1.0; };
    s.endpoints = {to_zero(b_over_2()), to_one(constant(inf))};
    for (auto& e : s.endpoints) e.applies = increasing;
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("logconvexke-1",
                      "r'^{2(a+b-c)} K has positive Maclaurin coefficients, log-convex onto (B(a,b)/2, B(c,a+b-c)/2)",
                      Kind::range_endpoints, {Shape::increasing, Shape::convex});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double w = 2.0 * (p["a"] + p["b"] - p["c"]) * log_rp(m);
      return log(K(ell(p), m)) + Est{w, 4.0 * ulp * std::abs(w)};
    };
    s.endpoints = {to_zero([](const Point& p) { return std::log(0.5 * beta_of(p["a"], p["b"])); }),
                   to_one([](const Point& p) {
                     const double s = p["a"] + p["b"] - p["c"];
                     return s > 1e-12 ? std::log(0.5 * beta_of(p["c"], s)) : inf;
                   })};
    out.push_back(std::move(s));
  }
  {
    auto s = ek_check("logconvexke-2",
                      "r'^{2(a+b-c-1)} E has positive Maclaurin coefficients, log-convex onto (B(a,b)/2, inf)",
                      Kind::range_endpoints, {Shape::increasing, Shape::convex});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double w = 2.0 * (p["a"] + p["b"] - p["c"] - 1.0) * log_rp(m);
      return log(E(ell(p), m)) + Est{w, 4.0 * ulp * std::abs(w)};
    };
    s.endpoints = {to_zero([](const Point& p) { return std::log(0.5 * beta_of(p["a"], p["b"])); }),
                   to_one(constant(inf))};
    out.push_back(std::move(s));
  }

  // ---- mu combinations, b = c - a ----
  auto mu_r = [](const Point& p, const Modulus& m) { return mu_est(modp(p), m); };
  {
    auto s = ac_check("mutheorem-1", "mu(r) + log r strictly decreasing from (0,1] onto [0, R(a,c-a)/2)",
                      Kind::range_endpoints, {Shape::decreasing});
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double lr = log_r(m);
      return mu_r(p, m) + Est{lr, 2.0 * ulp * std::abs(lr)};
    };
    s.endpoints = {to_zero([](const Point& p) { return 0.5 * ramanujan_r(p["a"], p["b"]); }), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("mutheorem-2", "(r'^2 log r')/(r^2 log r) mu(r) strictly increasing from (0,1] onto (1/2, B^2/2]",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double w = m.r_comp() * m.r_comp() * log_rp(m) / (m.r() * m.r() * log_r(m));
      return Est{w, 8.0 * ulp * std::abs(w)} * mu_r(p, m);
    };
    s.endpoints = {to_zero(constant(0.5)), to_one([](const Point& p) {
                     const double B = beta_of(p["a"], p["b"]);
                     return B * B / 2.0;
                   })};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("mutheorem-3", "r' arth(r)/(r arth(r')) mu(r) strictly increasing from (0,1) onto (1, (B/2)^2]",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return exact_rp(m) * arth_est(m) / (exact_r(m) * arth_est(m.complement())) * mu_r(p, m);
    };
    s.endpoints = {to_zero(constant(1.0)), to_one([](const Point& p) {
                     const double h = 0.5 * beta_of(p["a"], p["b"]);
                     return h * h;
                   })};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("mutheorem-4", "r' mu(r)/log(1/r) strictly increasing from (0,1) onto (1, inf)",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double lr = -log_r(m);
      return exact_rp(m) * mu_r(p, m) / Est{lr, 2.0 * ulp * lr};
    };
    s.endpoints = {to_zero(constant(1.0)), to_one(constant(inf))};
    out.push_back(s);
    s.id = "mutheorem-4-tilde";
    s.paper_anchor = "mu(r)/log(1/r) strictly increasing from (0,1) onto (1, inf)";
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double lr = -log_r(m);
      return mu_r(p, m) / Est{lr, 2.0 * ulp * lr};
    };
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("mutheorem-5", "mu(r) arth(r) strictly increasing from (0,1) onto (0, (B/2)^2)",
                      Kind::range_endpoints, {Shape::increasing});
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return mu_r(p, m) * arth_est(m);
    };
    s.endpoints = {to_zero(constant(0.0)), to_one([](const Point& p) {
                     const double h = 0.5 * beta_of(p["a"], p["b"]);
                     return h * h;
                   })};
    out.push_back(std::move(s));
  }
  {
    auto s = ac_check("mutheorem-6", "mu(r) log(r/r') increasing from [1/sqrt2, 1) onto [0, (B/2)^2)",
                      Kind::range_endpoints, {Shape::increasing});
    const double s2 = std::sqrt(0.5);
    s.arg_grid = {{Dim::range("r", s2, 0.999, 33, Scale::logit)}};
    s.curve = [mu_r](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double l = log_r(m) - log_rp(m);
      return mu_r(p, m) * Est{l, 4.0 * ulp * (std::abs(log_r(m)) + std::abs(log_rp(m)))};
    };
    Endpoint left = to_zero(constant(0.0), "r->1/sqrt2+");
    left.locate = [s2](const Point&, double d) { return Args{Arg{s2 + d * s2, 1.0 - s2 - d * s2}}; };
    left.deltas = {1e-1, 1e-2, 1e-4, 1e-8};
    s.endpoints = {left, to_one([](const Point& p) {
                     const double h = 0.5 * beta_of(p["a"], p["b"]);
                     return h * h;
                   })};
    out.push_back(std::move(s));
  }

  // ---- parameter comparison ----
  {
    auto s = make("differentparams1",
                  "a'>=a, b'>=b, c'<=c (one strict), max(a',b')<c': F(a',b';c';r)/F(a,b;c;r) strictly increasing on "
                  "[0,1) onto [1,L)",
                  Kind::range_endpoints);
    const std::vector<std::array<double, 3>> base{
        {0.3, 0.4, 1.2}, {0.5, 0.5, 1.0}, {0.2, 0.7, 0.9}, {0.6, 0.3, 1.5}, {1.0, 0.5, 2.0}, {0.25, 0.25, 0.6}};
    const std::vector<std::array<double, 3>> shifts{{0.1, 0.0, 0.0},  {0.0, 0.1, 0.0},  {0.0, 0.0, -0.1},
                                                    {0.1, 0.1, -0.1}, {0.3, 0.0, 0.0},  {0.0, 0.0, -0.05},
                                                    {0.05, 0.0, -0.4}};
    s.param_grid = {{Dim::list("i", {0, 1, 2, 3, 4, 5}), Dim::list("j", {0, 1, 2, 3, 4, 5, 6})}};
    s.expand = [base, shifts](Point& p) {
      const auto& t = base.at(static_cast<std::size_t>(p["i"]));
      const auto& d = shifts.at(static_cast<std::size_t>(p["j"]));
      p.set("a", t[0]);
      p.set("b", t[1]);
      p.set("c", t[2]);
      p.set("a1", t[0] + d[0]);
      p.set("b1", t[1] + d[1]);
      p.set("c1", t[2] + d[2]);
    };
    s.admissible = [](const Point& p) { return std::max(p["a1"], p["b1"]) < p["c1"]; };
    s.arg_grid = {{Dim::range("r", 0.001, 0.999, 33, Scale::logit)}};
    s.shapes = {Shape::increasing};
    s.curve = [](const Point& p, const Args& x) {
      return F(p["a1"], p["b1"], p["c1"], x[0]) / F(p["a"], p["b"], p["c"], x[0]);
    };
    auto limit = [](const Point& p) {
      const double a = p["a"], b = p["b"], c = p["c"], a1 = p["a1"], b1 = p["b1"], c1 = p["c1"];
      if (a1 + b1 >= c1) return inf;
      return beta_of(c1, c1 - a1 - b1) * beta_of(c - a, c - b) / (beta_of(c, c - a - b) * beta_of(c1 - a1, c1 - b1));
    };
    s.endpoints = {to_zero(constant(1.0)), to_one(limit)};
    out.push_back(std::move(s));
  }
  {
    const std::vector<double> ab{0.2, 0.5, 0.8, 1.3};
    auto grid = GridSpec{{Dim::list("a", ab), Dim::list("b", ab), Dim::list("c", {0.6, 1.0, 2.4, 4.0})}};
    auto base = [&](std::string id, std::string anchor) {
      auto s = make(std::move(id), std::move(anchor), Kind::range_endpoints);
      s.param_grid = grid;
      s.arg_grid = {{Dim::range("z", 0.001, 0.999, 33, Scale::logit)}};
      s.shapes = {Shape::increasing};
      return s;
    };
    {
      auto s = base("diffparamscor-1", "F(a+1)/F increasing, 1 at 0, (c-a-1)/(c-a-b-1) at 1 if a+b+1<c, else inf");
      s.curve = [](const Point& p, const Args& x) {
        return F(p["a"] + 1.0, p["b"], p["c"], x[0]) / F(p["a"], p["b"], p["c"], x[0]);
      };
      s.endpoints = {to_zero(constant(1.0), "z->0+"), to_one([](const Point& p) {
                       const double a = p["a"], b = p["b"], c = p["c"];
                       return a + b + 1.0 < c ? (c - a - 1.0) / (c - a - b - 1.0) : inf;
                     }, "z->1-")};
      out.push_back(std::move(s));
    }
    {
      auto s = base("diffparamscor-2", "F(b+1)/F increasing, 1 at 0, (c-b-1)/(c-a-b-1) at 1 if a+b+1<c, else inf");
      s.curve = [](const Point& p, const Args& x) {
        return F(p["a"], p["b"] + 1.0, p["c"], x[0]) / F(p["a"], p["b"], p["c"], x[0]);
      };
      s.endpoints = {to_zero(constant(1.0), "z->0+"), to_one([](const Point& p) {
                       const double a = p["a"], b = p["b"], c = p["c"];
                       return a + b + 1.0 < c ? (c - b - 1.0) / (c - a - b - 1.0) : inf;
                     }, "z->1-")};
      out.push_back(std::move(s));
    }
    {
      auto s = base("diffparamscor-3", "F/F(c+1) increasing, 1 at 0, (c-a)(c-b)/(c(c-a-b)) at 1 if a+b<c, else inf");
      s.curve = [](const Point& p, const Args& x) {
        return F(p["a"], p["b"], p["c"], x[0]) / F(p["a"], p["b"], p["c"] + 1.0, x[0]);
      };
      s.endpoints = {to_zero(constant(1.0), "z->0+"), to_one([](const Point& p) {
                       const double a = p["a"], b = p["b"], c = p["c"];
                       return a + b < c ? (c - a) * (c - b) / (c * (c - a - b)) : inf;
                     }, "z->1-")};
      out.push_back(std::move(s));
    }
  }
}

}  // namespace genellip::verify::reg
