#include <cmath>

#include "genellip/verify/large_c.hpp"
#include "genellip/verify/pab.hpp"
#include "registry_support.hpp"

namespace genellip::verify::reg {

namespace {

// Argument d = c - a, log-spaced; c -> a+ is d -> 0, c -> inf is d -> inf.
Dim d_dim() { return Dim::range("d", 0.05, 10.0, 33, Scale::log); }

constexpr double c_cap = max_hyp_parameter;

Endpoint c_to_a(std::function<double(const Point&)> limit) {
  Endpoint e;
  e.label = "c->a+";
  e.locate = [](const Point&, double delta) { return Args{Arg{delta, 1.0 - delta}}; };
  e.limit = std::move(limit);
  e.deltas = unit_deltas();
  return e;
}

Endpoint c_to_inf(std::function<double(const Point&)> limit) {
  Endpoint e;
  e.label = "c->inf";
  e.locate = [](const Point&, double delta) { return Args{Arg{1.0 / delta, 1.0 - 1.0 / delta}}; };
  e.limit = std::move(limit);
  e.deltas = inverse_deltas();
  return e;
}

Est logit_of(const Solution& s) {
  if (s.saturated) return Est::exact(s.value >= 1.0 ? inf : -inf);
  const Modulus m(s.value, s.value_comp);
  const double x = log_r(m) - log_rp(m);
  return {x, 64.0 * ulp * (1.0 + std::abs(x))};
}

Arg r_arg(const Point& p) { return Arg{p["r"], 1.0 - p["r"]}; }

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

}  // namespace

void add_depc_checks(std::vector<CheckSpec>& out) {
  {
    auto s = make("ambm-1", "B_t = P(a,c,t) - P(a,c,0) strictly increasing in t, B >= 0 with equality iff t = 0",
                  Kind::monotone);
    s.param_grid = {{Dim::list("a", {0.3, 0.6, 1.5}), Dim::list("dc", {0.2, 1.0, 5.0})}};
    s.expand = [](Point& p) { p.set("c", p["a"] + p["dc"]); };
    s.arg_grid = {{Dim::range("t", 0.0, 20.0, 41, Scale::linear)}};
    s.shapes = {Shape::increasing, Shape::nonnegative};
    s.tolerance = 1e-13;
    s.curve = [](const Point& p, const Args& x) {
      const double b = pab(p["a"], p["c"], x[0].x).B_t;
      return Est{b, 16.0 * ulp * (1.0 + std::abs(b))};
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("ambm-2", "dA/dc = A B_t", Kind::derivative_match);
    s.param_grid = {{Dim::list("a", {0.3, 0.6, 1.5}), Dim::list("t", {0.5, 1.0, 2.0, 4.0})}};
    s.arg_grid = {{Dim::range("c", 1.6, 5.0, 18, Scale::linear)}};
    s.tolerance = 1e-6;
    s.step = [](const Point&, const Arg&) { return 1e-3; };
    s.curve = [](const Point& p, const Args& x) {
      const double v = pab(p["a"], x[0].x, p["t"]).A;
      return Est{v, 16.0 * ulp * std::abs(v)};
    };
    s.reference = [](const Point& p, const Args& x) {
      const auto n = pab(p["a"], x[0].x, p["t"]);
      return Est{n.A * n.B_t, 32.0 * ulp * std::abs(n.A * n.B_t)};
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("quotfdepc", "a > 0, x,y in (0,1): B(a,c-a) F(a,c-a;c;x)/F(a,c-a;c;y) strictly decreasing from (a,inf) onto (0,inf)",
                  Kind::range_endpoints);
    s.param_grid = {{Dim::list("a", {0.3, 0.6, 1.5}), Dim::list("j", {0, 1, 2, 3})}};
    s.expand = [](Point& p) {
      static const double xy[4][2] = {{0.2, 0.7}, {0.7, 0.2}, {0.5, 0.9}, {0.05, 0.95}};
      const auto& row = xy[static_cast<int>(p["j"])];
      p.set("x", row[0]);
      p.set("y", row[1]);
    };
    s.arg_grid = {{d_dim()}};
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], d = x[0].x, c = a + d;
      const Arg px{p["x"], 1.0 - p["x"]}, py{p["y"], 1.0 - p["y"]};
      if (c <= c_cap) {
        const double B = std::exp(log_beta(a, d));
        return Est{B, 16.0 * ulp * B * (1.0 + std::abs(std::log(B)))} * F(a, d, c, px) / F(a, d, c, py);
      }
      const double lb = large_c::log_half_beta(a, c) + std::log(2.0);
      const double B = std::exp(lb);
      return Est{B, 16.0 * ulp * B * (1.0 + std::abs(lb))} * large_c::f(a, c, px) / large_c::f(a, c, py);
    };
    s.endpoints = {c_to_a(constant(inf)), c_to_inf(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mudepc", "c -> mu_{a,c}(r) strictly decreasing from (a,inf) onto (0,inf)", Kind::range_endpoints);
    s.param_grid = {{Dim::list("a", {0.3, 0.6}), Dim::list("r", {0.2, 0.5, 0.8})}};
    s.arg_grid = {{d_dim()}};
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], d = x[0].x, c = a + d;
      if (c <= c_cap) return from(mu(ModulusParams(a, d, c), Modulus(p["r"])));
      return large_c::mu(a, c, r_arg(p));
    };
    s.endpoints = {c_to_a(constant(inf)), c_to_inf(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("imudpec", "c -> mu_{a,c}^{-1}(x) strictly decreasing from (a,inf) onto (0,1), tracked as log(r/r')",
                  Kind::range_endpoints);
    s.param_grid = {{Dim::list("a", {0.3, 0.6}), Dim::list("x", {0.5, 1.0, 2.0})}};
    s.arg_grid = {{d_dim()}};
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], d = x[0].x, c = a + d;
      if (c <= c_cap) return logit_of(mu_inv_log(ModulusParams(a, d, c), std::log(p["x"])));
      const Est r = large_c::mu_inv(a, c, p["x"]);
      if (r.v <= 0.0) return Est::exact(-inf);
      const double rp = std::sqrt((1.0 - r.v) * (1.0 + r.v));
      const double v = std::log(r.v) - std::log(rp);
      return Est{v, r.e / (r.v * rp * rp) + 4.0 * ulp * (1.0 + std::abs(v))};
    };
    s.endpoints = {c_to_a(constant(inf)), c_to_inf(constant(-inf))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("phidepc-K", "c -> phi^{a,c}_K(r) strictly decreasing from (a,1] onto [phi^a_K(r), 1), tracked as log(s/s')",
                  Kind::range_endpoints);
    s.param_grid = {{Dim::list("a", {0.3, 0.6}), Dim::list("r", {0.2, 0.5, 0.8}), Dim::list("K", {1.25, 2.0, 5.0})}};
    // c = a + (1-a) v; below v = 0.02 the solution is within 1e-300 of its limit.
    s.arg_grid = {{Dim::range("v", 0.02, 1.0, 33, Scale::log)}};
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], b = (1.0 - a) * x[0].x;
      return logit_of(phi_k(ModulusParams(a, b, a + b), DegreeK(p["K"]), Modulus(p["r"])));
    };
    s.endpoints = {c_to_a(constant(inf))};
    out.push_back(s);
    s.id = "phidepc-invK";
    s.paper_anchor = "c -> phi^{a,c}_{1/K}(r) strictly increasing from (a,1] onto (0, phi^a_{1/K}(r)], tracked as log(t/t')";
    s.shapes = {Shape::increasing};
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], b = (1.0 - a) * x[0].x;
      return logit_of(phi_k(ModulusParams(a, b, a + b), DegreeK(1.0 / p["K"]), Modulus(p["r"])));
    };
    s.endpoints = {c_to_a(constant(-inf))};
    out.push_back(std::move(s));
  }
  {
    auto base = [](std::string id, std::string anchor) {
      auto s = make(std::move(id), std::move(anchor), Kind::range_endpoints);
      s.param_grid = {{Dim::list("a", {0.3, 0.6}), Dim::list("r", {0.2, 0.5, 0.8})}};
      s.arg_grid = {{d_dim()}};
      s.shapes = {Shape::decreasing};
      return s;
    };
    auto near_a = [](std::function<double(const Point&)> limit) {
      Endpoint e = c_to_a(std::move(limit));
      e.deltas = {1e-4};
      e.extrapolate = false;
      return e;
    };
    auto log_inv_rp = [](const Point& p) { return -0.5 * std::log1p(-p["r"] * p["r"]); };
    {
      auto s = base("thkeb-f", "f(c) = K_{a,c}(r) - B/2 strictly decreasing, f(a+) = log(1/r'), f(inf) = 0");
      s.curve = [](const Point& p, const Args& x) {
        const double a = p["a"], d = x[0].x, c = a + d;
        if (c > c_cap) return large_c::k_minus_half_beta(a, c, r_arg(p));
        const EllipticParams e(a, d, c);
        const double h = 0.5 * e.beta();
        return K(e, Modulus(p["r"])) - Est{h, 4.0 * ulp * h};
      };
      s.endpoints = {near_a(log_inv_rp), c_to_inf(constant(0.0))};
      out.push_back(std::move(s));
    }
    {
      auto s = base("thkeb-g",
                    "g(c) = B/2 - E_{a,c}(r) strictly decreasing, g(inf) = 0, "
                    "g(a+) = (1/2) sum_{n>=1} r^{2n}/(a+n-1) - log(1/r')");
      s.curve = [](const Point& p, const Args& x) {
        const double a = p["a"], d = x[0].x, c = a + d;
        if (c > c_cap) return large_c::half_beta_minus_e(a, c, r_arg(p));
        const EllipticParams e(a, d, c);
        const double h = 0.5 * e.beta();
        return Est{h, 4.0 * ulp * h} - E(e, Modulus(p["r"]));
      };
      s.endpoints = {near_a([log_inv_rp](const Point& p) {
                       const double r2 = p["r"] * p["r"];
                       double sum = 0.0, pw = 1.0;
                       for (int n = 1; n <= 500; ++n) {
                         pw *= r2;
                         sum += pw / (p["a"] + n - 1.0);
                       }
                       return 0.5 * sum - log_inv_rp(p);
                     }),
                     c_to_inf(constant(0.0))};
      out.push_back(std::move(s));
    }
  }
}

}  // namespace genellip::verify::reg
