#include <cmath>
#include <numbers>

#include "registry_support.hpp"

namespace genellip::verify::reg {

namespace {

Dim z_dim(int count = 33, double lo = 0.001, double hi = 0.999) { return Dim::range("z", lo, hi, count, Scale::logit); }

GridSpec triple_grid() {
  const std::vector<double> ab{0.2, 0.5, 0.8, 1.3, 2.5};
  return {{Dim::list("a", ab), Dim::list("b", ab), Dim::list("c", {0.3, 0.6, 0.9, 1.0, 1.5, 2.4, 4.0})}};
}

Argument zarg(const Arg& x) { return Argument(x.x, x.comp); }

Args z_near_zero(double d) { return {Arg{d, 1.0 - d}}; }
Args z_near_one(double d) { return {Arg{1.0 - d, d}}; }

Endpoint z_end(bool at_zero, std::function<double(const Point&)> limit) {
  Endpoint e;
  e.label = at_zero ? "z->0+" : "z->1-";
  e.locate = [at_zero](const Point&, double d) { return at_zero ? z_near_zero(d) : z_near_one(d); };
  e.limit = std::move(limit);
  e.deltas = unit_deltas();
  return e;
}

bool zero_balanced(const Point& p) { return std::abs(p["a"] + p["b"] - p["c"]) <= 1e-12; }

// a+b+1 = 2c with a, b <= c: a = lo + af (hi - lo), lo = max(c-1,0), hi = min(c,2c-1).
void expand_power(Point& p) {
  const double c = p["c"];
  const double lo = std::max(c - 1.0, 0.0);
  const double hi = std::min(c, 2.0 * c - 1.0);
  const double a = lo + p["af"] * (hi - lo);
  p.set("a", a);
  p.set("b", 2.0 * c - 1.0 - a);
}

double power_d(const Point& p) {
  return std::exp(2.0 * std::lgamma(p["c"]) - std::lgamma(p["a"]) - std::lgamma(p["b"]));
}

Est m_of_r2(const Point& p, const Modulus& m) { return M(p, m.squared()); }

Est m_deriv_of_r2(const Point& p, const Modulus& m) {
  return from(m_deriv(MPoint(p["a"], p["b"], p["c"], m.squared())));
}

GridSpec ek_grid() {
  const std::vector<double> ab{0.2, 0.45, 0.7, 0.9};
  return {{Dim::list("a", ab), Dim::list("b", ab), Dim::list("c", {0.5, 0.8, 1.0, 1.3, 1.6})}};
}

bool ek_admissible(const Point& p) {
  const double a = p["a"], b = p["b"], c = p["c"];
  const double m = std::min(c, 1.0);
  return a < m && b < m && c <= a + b + 1e-12;
}

CheckSpec derivative(std::string id, std::string anchor, Curve curve, Curve ref) {
  auto s = make(std::move(id), std::move(anchor), Kind::derivative_match);
  s.param_grid = ac_grid();
  s.expand = expand_ac;
  s.arg_grid = {{r_dim(20, 0.01, 0.99)}};
  s.tolerance = 1e-7;
  s.curve = std::move(curve);
  s.reference = std::move(ref);
  return s;
}

// Derivatives of phi_K via log s': d log s'/dr = -(s/s'^2) ds/dr.
Est phi_log_sp(const Point& p, const Args& x) {
  const auto ph = phi(modp(p), p["K"], modulus(x[0]));
  if (ph.saturated) return Est::none();
  return ph.log_sp;
}

Est log_sp_slope(const Point& p, const Args& x, const Est& ds_dr) {
  const auto ph = phi(modp(p), p["K"], modulus(x[0]));
  if (ph.saturated) return Est::none();
  return Est{-ph.s.v, ph.s.e} / (ph.sp * ph.sp) * ds_dr;
}

}  // namespace

void add_m_checks(std::vector<CheckSpec>& out) {
  {
    auto s = make("mprop-1", "M(x) = M(1-x) on (0,1) for a,b,c > 0", Kind::identity);
    s.param_grid = triple_grid();
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::zero};
    s.tolerance = 1e-11;
    s.curve = [](const Point& p, const Args& x) {
      const Est m = M(p, zarg(x[0]));
      return (m - M(p, zarg(x[0]).reflected())) / m;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-1-positive", "M(x) > 0 on (0,1) for a,b,c > 0", Kind::inequality);
    s.param_grid = triple_grid();
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::positive};
    s.tolerance = 1e-300;
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-2", "a+b <= c: M bounded with M(0+) = M(1-) = 0 (a+b<c) or 1/B(a,b) (a+b=c)",
                  Kind::limit);
    s.param_grid = {{Dim::list("a", {0.2, 0.5}), Dim::list("c", {1.0, 1.5, 2.4}), Dim::list("bf", {0.4, 0.8, 1.0})}};
    s.expand = [](Point& p) { p.set("b", p["bf"] * (p["c"] - p["a"])); };
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    auto lim = [](const Point& p) { return zero_balanced(p) ? 1.0 / beta_of(p["a"], p["b"]) : 0.0; };
    s.endpoints = {z_end(true, lim), z_end(false, lim)};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-2-constant", "M(a,1-a,1,z) = sin(pi a)/pi", Kind::identity);
    s.param_grid = {{Dim::list("a", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})}};
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::zero};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"];
      return M(a, 1.0 - a, 1.0, zarg(x[0])) - std::sin(std::numbers::pi * a) / std::numbers::pi;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("legendre-relation", "M(1/2,1/2,1,r^2) = 1/pi", Kind::identity);
    s.param_grid = {{Dim::list("a", {0.5})}};
    s.arg_grid = r_grid();
    s.shapes = {Shape::zero};
    s.tolerance = 1e-10;
    s.curve = [](const Point&, const Args& x) {
      return M(0.5, 0.5, 1.0, modulus(x[0]).squared()) - 1.0 / std::numbers::pi;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-3", "a+b > c: M(0+) = M(1-) = infinity", Kind::limit);
    s.param_grid = triple_grid();
    s.admissible = [](const Point& p) { return p["a"] + p["b"] > p["c"] + 1e-12; };
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    s.endpoints = {z_end(true, constant(inf)), z_end(false, constant(inf))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-4",
                  "(a+b-1)(c-b) > 0, a+b >= c >= a, ab/(a+b+1) < c: M strictly convex, decreasing on (0,1/2], "
                  "increasing on [1/2,1)",
                  Kind::convex_concave);
    s.param_grid = triple_grid();
    s.admissible = [](const Point& p) {
      const double a = p["a"], b = p["b"], c = p["c"];
      return (a + b - 1.0) * (c - b) > 0.0 && a + b >= c && c >= a && a * b / (a + b + 1.0) < c;
    };
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::convex};
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    out.push_back(s);
    s.id = "mprop-4-left";
    s.kind = Kind::monotone;
    s.arg_grid = {{z_dim(33, 0.001, 0.5)}};
    s.shapes = {Shape::decreasing};
    out.push_back(s);
    s.id = "mprop-4-right";
    s.arg_grid = {{z_dim(33, 0.5, 0.999)}};
    s.shapes = {Shape::increasing};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-5",
                  "(a+b-1)(c-b) < 0, a+b <= c, ab/(a+b+1) < c: M strictly concave, increasing on (0,1/2], "
                  "decreasing on [1/2,1)",
                  Kind::convex_concave);
    s.param_grid = triple_grid();
    s.admissible = [](const Point& p) {
      const double a = p["a"], b = p["b"], c = p["c"];
      return (a + b - 1.0) * (c - b) < 0.0 && a + b <= c && a * b / (a + b + 1.0) < c;
    };
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::concave};
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    out.push_back(s);
    s.id = "mprop-5-left";
    s.kind = Kind::monotone;
    s.arg_grid = {{z_dim(33, 0.001, 0.5)}};
    s.shapes = {Shape::increasing};
    out.push_back(s);
    s.id = "mprop-5-right";
    s.arg_grid = {{z_dim(33, 0.5, 0.999)}};
    s.shapes = {Shape::decreasing};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mprop-6", "a+b >= c: M(r) > ab/c on (0,1)", Kind::inequality);
    s.param_grid = triple_grid();
    s.admissible = [](const Point& p) { return p["a"] + p["b"] >= p["c"] - 1e-12; };
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::positive};
    s.tolerance = 1e-12;
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])) - p["a"] * p["b"] / p["c"]; };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mextra-1",
                  "a+b > c, a,b <= c: (r(1-r))^{a+b-c} M bounded, tending to (a+b-c)B(c,a+b-c)/B(a,b) at both ends",
                  Kind::limit);
    s.param_grid = triple_grid();
    s.admissible = [](const Point& p) {
      return p["a"] + p["b"] > p["c"] + 1e-12 && p["a"] <= p["c"] && p["b"] <= p["c"];
    };
    s.curve = [](const Point& p, const Args& x) {
      return from(m_bounded_factor(MPoint(p["a"], p["b"], p["c"], zarg(x[0]))));
    };
    auto lim = [](const Point& p) { return m_bounded_factor_at_zero(p["a"], p["b"], p["c"]); };
    s.endpoints = {z_end(true, lim), z_end(false, lim)};
    out.push_back(std::move(s));
  }
  {
    auto s = make("mextra-2", "a = c: (r(1-r))^b M = b; b = c: (r(1-r))^a M = a", Kind::identity);
    s.param_grid = {{Dim::list("c", {0.3, 0.6, 1.0, 1.5, 2.4}), Dim::list("f", {0.25, 0.5, 1.0}),
                     Dim::list("swap", {0.0, 1.0})}};
    s.expand = [](Point& p) {
      const double c = p["c"], other = p["f"] * c;
      const bool swap = p["swap"] != 0.0;
      p.set("a", swap ? other : c);
      p.set("b", swap ? c : other);
    };
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::zero};
    s.tolerance = 1e-10;
    s.curve = [](const Point& p, const Args& x) {
      const double a = p["a"], b = p["b"], c = p["c"];
      const double expect = p["swap"] != 0.0 ? a : b;
      const double scale = std::exp((a + b - c) * std::log(x[0].x * x[0].comp));
      return (scale * M(p, zarg(x[0])) - expect) / expect;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mextra-3", "a+b+1 = 2c, a,b <= c: M = d (r(1-r))^{1-c}, d = Gamma(c)^2/(Gamma(a)Gamma(b))",
                  Kind::identity);
    s.param_grid = {{Dim::list("c", {0.6, 0.8, 1.0, 1.3, 2.0}), Dim::list("af", {0.1, 0.4, 0.7, 0.95})}};
    s.expand = expand_power;
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::zero};
    s.tolerance = 1e-8;
    s.curve = [](const Point& p, const Args& x) {
      const double d = power_d(p);
      const double scale = std::exp((p["c"] - 1.0) * std::log(x[0].x * x[0].comp));
      return (scale * M(p, zarg(x[0])) - d) / d;
    };
    out.push_back(s);
    s.id = "mextra-3-constant-iff";
    s.paper_anchor = "a+b+1 = 2c: M constant iff c = 1 (increasing on (0,1/2) for c < 1, decreasing for c > 1)";
    s.kind = Kind::monotone;
    s.admissible = [](const Point& p) { return p["c"] != 1.0; };
    s.arg_grid = {{z_dim(33, 0.001, 0.5)}};
    s.shapes_for = [](const Point& p) {
      return std::vector<Shape>{p["c"] < 1.0 ? Shape::increasing : Shape::decreasing};
    };
    s.tolerance = 1e-13;
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mcorollary-1",
                  "a+b+1 = 2c: dmu/dr = -D/(r^{2c-1} r'^{2c} K(r)^2), D = (Gamma(a)Gamma(b)Gamma(c))^2/(4 Gamma(a+b)^3)",
                  Kind::derivative_match);
    s.param_grid = {{Dim::list("c", {1.0, 1.25, 1.6, 2.2}), Dim::list("af", {0.2, 0.5, 0.8})}};
    s.expand = expand_power;
    s.arg_grid = {{r_dim(20, 0.01, 0.99)}};
    s.tolerance = 1e-7;
    s.curve = [](const Point& p, const Args& x) { return mu_est(modp(p), modulus(x[0])); };
    s.reference = [](const Point& p, const Args& x) { return from(mu_deriv_power_case(modp(p), x[0].x)); };
    out.push_back(s);
    s.id = "mcorollary-2";
    s.paper_anchor = "a+b+1 = 2c, s = phi_K(r): ds/dr = (1/K)(s/r)^{2c-1}(s'/r')^{2c}(K(s)/K(r))^2";
    s.param_grid.dims.push_back(Dim::list("K", {2.0, 5.0}));
    s.curve = phi_log_sp;
    s.reference = [](const Point& p, const Args& x) {
      return log_sp_slope(p, x, from(phi_deriv_power_case(modp(p), DegreeK(p["K"]), x[0].x)));
    };
    out.push_back(std::move(s));
  }

  out.push_back(derivative(
      "deriv-k", "dK/dr = (2/(r r'^2))((c-a)E + (b r^2 + a - c)K)",
      [](const Point& p, const Args& x) { return K(ell(p), modulus(x[0])); },
      [](const Point& p, const Args& x) {
        return Est{ell_derivatives(ell(p), modulus(x[0])).dK_dr, 0.0};
      }));
  out.push_back(derivative(
      "deriv-e", "dE/dr = (2(a-1)/r)(K - E)",
      [](const Point& p, const Args& x) { return E(ell(p), modulus(x[0])); },
      [](const Point& p, const Args& x) {
        return Est{ell_derivatives(ell(p), modulus(x[0])).dE_dr, 0.0};
      }));
  out.push_back(derivative(
      "deriv-k-minus-e", "d(K-E)/dr = (2/(r r'^2))(((c-a)+(1-a)r'^2)E + ((a+b)r^2 - c + r'^2)K)",
      [](const Point& p, const Args& x) {
        const auto m = modulus(x[0]);
        return K(ell(p), m) - E(ell(p), m);
      },
      [](const Point& p, const Args& x) {
        return Est{ell_derivatives(ell(p), modulus(x[0])).dKmE_dr, 0.0};
      }));
  out.push_back(derivative(
      "deriv-e-minus-r2k", "d(E - r'^2 K)/dr = (2/r)((1-c)E + (c-1-(b-1)r^2)K)",
      [](const Point& p, const Args& x) {
        const auto m = modulus(x[0]);
        return E(ell(p), m) - m.r_comp() * m.r_comp() * K(ell(p), m);
      },
      [](const Point& p, const Args& x) {
        return Est{ell_derivatives(ell(p), modulus(x[0])).dEmr2K_dr, 0.0};
      }));
  out.push_back(derivative(
      "deriv-mu", "dmu/dr = -B^3 M(r^2)/(4 r r'^2 K^2)",
      [](const Point& p, const Args& x) { return mu_est(modp(p), modulus(x[0])); },
      [](const Point& p, const Args& x) { return from(mu_deriv(modp(p), x[0].x)); }));
  {
    auto s = derivative(
        "deriv-phi", "(M(s^2)/M(r^2)) ds/dr = (1/K) s s'^2 K(s)^2/(r r'^2 K(r)^2), s = phi_K(r)",
        phi_log_sp,
        [](const Point& p, const Args& x) {
          return log_sp_slope(p, x, from(phi_deriv(modp(p), DegreeK(p["K"]), x[0].x)));
        });
    s.param_grid = ac_grid(true);
    out.push_back(std::move(s));
  }
  {
    auto s = make("deriv-m", "dM/dz in closed form from u, v and their reflections", Kind::derivative_match);
    const std::vector<std::array<double, 3>> rows{{0.3, 0.5, 0.9}, {0.2, 0.5, 0.6}, {0.8, 1.3, 1.5}, {1.3, 0.5, 1.0},
                                                  {0.5, 0.8, 2.4}, {2.5, 1.3, 4.0}, {0.4, 0.7, 1.6}};
    s.param_grid = table_grid(rows.size());
    s.expand = expand_table(rows);
    s.arg_grid = {{z_dim(20, 0.01, 0.99)}};
    s.tolerance = 1e-7;
    s.curve = [](const Point& p, const Args& x) { return M(p, zarg(x[0])); };
    s.reference = [](const Point& p, const Args& x) {
      return from(m_deriv(MPoint(p["a"], p["b"], p["c"], zarg(x[0]))));
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("m-forms", "(B/2)^2 M(r^2) = (a+b-c)KK' + (c-a)(KE' + K'E - KK')", Kind::identity);
    s.param_grid = ek_grid();
    s.admissible = ek_admissible;
    s.arg_grid = r_grid();
    s.shapes = {Shape::zero};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const Est direct = m_of_r2(p, m);
      return (direct - from(m_value_elliptic(ell(p), m))) / direct;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("m-wronskian", "M = z(1-z)(v1 dv/dz - v dv1/dz), v = F(a,b;c;z), v1(z) = v(1-z)", Kind::identity);
    s.param_grid = triple_grid();
    s.arg_grid = {{z_dim()}};
    s.shapes = {Shape::zero};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const HypParams hp(p["a"], p["b"], p["c"]);
      const Argument z = zarg(x[0]);
      const Est v = from(hyp2f1(hp, z)), v1 = from(hyp2f1(hp, z.reflected()));
      const Est dv = from(hyp2f1_dz(hp, z)), dv1 = from(hyp2f1_dz(hp, z.reflected()));
      const Est w = x[0].x * x[0].comp * (v1 * dv + v * dv1);
      const Est m = M(p, z);
      return (m - w) / m;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mfunctions-1-bound", "0<a<c<=1, b=c-a: M(r^2) - 2 r^2 M'(r^2) >= (c-a)a", Kind::inequality);
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.arg_grid = r_grid();
    s.shapes = {Shape::nonnegative};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double r2 = m.r() * m.r();
      return m_of_r2(p, m) - 2.0 * r2 * m_deriv_of_r2(p, m) - (p["c"] - p["a"]) * p["a"];
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mfunctions-1", "0<a<c<=1, b=c-a: r/M(r^2) - a(c-a)r increasing from [0,1] onto [0, B - a(c-a)]",
                  Kind::range_endpoints);
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.arg_grid = r_grid();
    s.shapes = {Shape::increasing};
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return m.r() / m_of_r2(p, m) - p["a"] * (p["c"] - p["a"]) * m.r();
    };
    auto top = [](const Point& p) { return beta_of(p["a"], p["b"]) - p["a"] * (p["c"] - p["a"]); };
    s.endpoints = {to_zero(constant(0.0)), to_one(top)};
    out.push_back(s);
    s.id = "mfunctions-2";
    s.paper_anchor = "0<a<c<=1, b=c-a: g(r) = f(r') decreasing from [0,1] onto [0, B - a(c-a)]";
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]).complement();
      return m.r() / m_of_r2(p, m) - p["a"] * (p["c"] - p["a"]) * m.r();
    };
    s.endpoints = {to_zero(top), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
}

void add_conjectures(std::vector<CheckSpec>& out) {
  auto base = [](std::string id, std::string anchor, std::vector<Shape> shapes) {
    auto s = make(std::move(id), std::move(anchor), Kind::range_endpoints);
    s.gating = false;
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.admissible = [](const Point& p) { return p["c"] < 1.0; };
    s.arg_grid = r_grid();
    s.shapes = std::move(shapes);
    return s;
  };
  {
    auto s = base("ops-1-f", "conjecture, 0<a<c<1: sqrt(r)/M(r^2) increasing from (0,1) onto (0,B)", {Shape::increasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return std::sqrt(m.r()) / m_of_r2(p, m);
    };
    s.endpoints = {to_zero(constant(0.0)), to_one([](const Point& p) { return beta_of(p["a"], p["b"]); })};
    out.push_back(std::move(s));
  }
  {
    auto s = base("ops-1-g", "conjecture, 0<a<c<1: sqrt(r')/M(r^2) decreasing from (0,1) onto (0,B)", {Shape::decreasing});
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      return std::sqrt(m.r_comp()) / m_of_r2(p, m);
    };
    s.endpoints = {to_zero([](const Point& p) { return beta_of(p["a"], p["b"]); }), to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  struct Item {
    const char* id;
    const char* anchor;
    double (*lo)(double K);
    double (*hi)(double K);
    int which;
  };
  const Item items[] = {
      {"ops-2-i", "conjecture, s = phi_K(r): s M(r^2)/(r M(s^2)) decreasing from (0,1) onto (1,inf)",
       [](double) { return inf; }, [](double) { return 1.0; }, 0},
      {"ops-2-ii", "conjecture, s = phi_K(r): s' M(r^2)/(r' M(s^2)) decreasing from (0,1) onto (0,1)",
       [](double) { return 1.0; }, [](double) { return 0.0; }, 1},
      {"ops-2-iii", "conjecture, s = phi_K(r): K(r)M(r^2)/(K(s)M(s^2)) decreasing from (0,1) onto (1/K,1)",
       [](double) { return 1.0; }, [](double k) { return 1.0 / k; }, 2},
      {"ops-2-iv", "conjecture, s = phi_K(r): K'(r)M(r^2)/(K'(s)M(s^2)) decreasing from (0,1) onto (1,K)",
       [](double k) { return k; }, [](double) { return 1.0; }, 3},
  };
  for (const auto& it : items) {
    auto s = base(it.id, it.anchor, {Shape::decreasing});
    s.param_grid = ac_grid(true);
    const int which = it.which;
    s.curve = [which](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const auto ph = phi(modp(p), p["K"], m);
      if (ph.saturated) return nan_est();
      const auto sm = ph.modulus();
      const Est ratio = m_of_r2(p, m) / m_of_r2(p, sm);
      switch (which) {
        case 0: return ph.s / m.r() * ratio;
        case 1: return ph.sp / m.r_comp() * ratio;
        case 2: return K(ell(p), m) / K(ell(p), sm) * ratio;
        default: return K(ell(p), m.complement()) / K(ell(p), sm.complement()) * ratio;
      }
    };
    auto lo = it.lo;
    auto hi = it.hi;
    s.endpoints = {to_zero([lo](const Point& p) { return lo(p["K"]); }),
                   to_one([hi](const Point& p) { return hi(p["K"]); })};
    out.push_back(std::move(s));
  }
}

}  // namespace genellip::verify::reg
