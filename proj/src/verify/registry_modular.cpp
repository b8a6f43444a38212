#include <cmath>

#include "registry_support.hpp"

namespace genellip::verify::reg {

namespace {

double ramanujan_r(double a, double b) { return -digamma(a).value - digamma(b).value - 2.0 * euler_gamma; }

// phi_K(r) or phi_{1/K}(r) with K(s), K'(s) and their propagated errors.
struct Side {
  PhiEst phi;
  Est Ks, Kps;
};

Side side(const Point& p, double degree, const Modulus& m) {
  Side out;
  out.phi = phi(modp(p), degree, m);
  if (out.phi.saturated) return out;
  const auto e = ell(p);
  const auto sm = out.phi.modulus();
  const Est ks = K(e, sm), kps = K(e, sm.complement());
  const double dks = std::abs(ell_derivatives(e, sm).dK_dr);
  const double dkps = std::abs(ell_derivatives(e, sm.complement()).dK_dr);
  out.Ks = {ks.v, ks.e + dks * out.phi.s.e};
  out.Kps = {kps.v, kps.e + dkps * out.phi.sp.e};
  return out;
}

Est sq(Est x) { return x * x; }

using SideCurve = Est (*)(const Side&, const Point&, const Modulus&);

struct KItem {
  const char* id;
  const char* anchor;
  bool inverse;  // t = phi_{1/K}
  Shape shape;
  double (*at0)(double K);
  double (*at1)(double K);
  SideCurve f;
};

double one(double) { return 1.0; }
double zero(double) { return 0.0; }
double infinite(double) { return inf; }
double kval(double k) { return k; }
double inv_k(double k) { return 1.0 / k; }

Est s_over_r(const Side& s, const Point&, const Modulus& m) { return s.phi.s / m.r(); }
Est sp_over_rp(const Side& s, const Point&, const Modulus& m) { return s.phi.sp / m.r_comp(); }
Est ks_over_kr(const Side& s, const Point& p, const Modulus& m) { return s.Ks / K(ell(p), m); }
Est kps_over_kpr(const Side& s, const Point& p, const Modulus& m) { return s.Kps / K(ell(p), m.complement()); }
Est f5(const Side& s, const Point& p, const Modulus& m) {
  return s.phi.sp * sq(s.Ks) / (m.r_comp() * sq(K(ell(p), m)));
}
Est f6(const Side& s, const Point& p, const Modulus& m) {
  return s.phi.s * sq(s.Kps) / (m.r() * sq(K(ell(p), m.complement())));
}

const KItem k_items[] = {
    {"ktheo-1", "s = phi_K(r), K > 1: s/r decreasing from (0,1) onto (1,inf)", false, Shape::decreasing, infinite, one,
     s_over_r},
    {"ktheo-2", "s'/r' decreasing from (0,1) onto (0,1)", false, Shape::decreasing, one, zero, sp_over_rp},
    {"ktheo-3", "K(s)/K(r) increasing from (0,1) onto (1,K)", false, Shape::increasing, one, kval, ks_over_kr},
    {"ktheo-4", "K'(s)/K'(r) increasing from (0,1) onto (1/K,1)", false, Shape::increasing, inv_k, one, kps_over_kpr},
    {"ktheo-5", "s' K(s)^2/(r' K(r)^2) decreasing from (0,1) onto (0,1)", false, Shape::decreasing, one, zero, f5},
    {"ktheo-6", "s K'(s)^2/(r K'(r)^2) decreasing from (0,1) onto (1,inf)", false, Shape::decreasing, infinite, one, f6},
    {"ktheo-7", "t = phi_{1/K}(r): t/r increasing from (0,1) onto (0,1)", true, Shape::increasing, zero, one, s_over_r},
    {"ktheo-8", "t'/r' increasing from (0,1) onto (1,inf)", true, Shape::increasing, one, infinite, sp_over_rp},
    {"ktheo-9", "K(t)/K(r) decreasing from (0,1) onto (1/K,1)", true, Shape::decreasing, one, inv_k, ks_over_kr},
    {"ktheo-10", "K'(t)/K'(r) decreasing from (0,1) onto (1,K)", true, Shape::decreasing, kval, one, kps_over_kpr},
    {"ktheo-11", "t' K(t)^2/(r' K(r)^2) increasing from (0,1) onto (1,inf)", true, Shape::increasing, one, infinite, f5},
    {"ktheo-12", "t K'(t)^2/(r K'(r)^2) increasing from (0,1) onto (0,1)", true, Shape::increasing, zero, one, f6},
};

CheckSpec ack(std::string id, std::string anchor, Kind kind) {
  auto s = make(std::move(id), std::move(anchor), kind);
  s.param_grid = ac_grid(true);
  s.expand = expand_ac;
  s.arg_grid = r_grid();
  return s;
}

// Modulus for x in (0,1) given 1-x as well.
Modulus modulus_of(double x, double xc) { return modulus(Arg{x, xc}); }

Est log_phi(const Point& p, double degree, const Modulus& m) {
  const auto ph = phi(modp(p), degree, m);
  if (ph.saturated) return nan_est();
  return ph.log_s;
}

// p(s) = 2 log(s/s') for s = phi(q(x)).
Est p_of_phi(const Point& p, double degree, double x) {
  const auto ph = phi(modp(p), degree, Modulus::from_logit(x));
  if (ph.saturated) return nan_est();
  return 2.0 * (ph.log_s - ph.log_sp);
}

}  // namespace

void add_modular_checks(std::vector<CheckSpec>& out) {
  {
    auto s = make("mu-reflection", "mu(r) mu(r') = (B/2)^2", Kind::identity);
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.arg_grid = r_grid();
    s.shapes = {Shape::zero};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double h = 0.5 * beta_of(p["a"], p["b"]);
      return (mu_est(modp(p), m) * mu_est(modp(p), m.complement()) - h * h) / (h * h);
    };
    out.push_back(std::move(s));
  }
  {
    auto s = make("mu-inverse", "mu^{-1}(mu(r)) = r", Kind::identity);
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.arg_grid = r_grid();
    s.shapes = {Shape::zero};
    s.tolerance = 1e-10;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double y = mu(modp(p), m).value;
      return Est{mu_inv(modp(p), y) - m.r(), 0.0};
    };
    out.push_back(std::move(s));
  }
  {
    auto s = ack("phi-functional", "mu(phi_K(r)) = mu(r)/K", Kind::identity);
    s.shapes = {Shape::zero};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const auto ph = phi(modp(p), p["K"], m);
      if (ph.saturated) return nan_est();
      const Est mr = mu_est(modp(p), m);
      return (mu_est(modp(p), ph.modulus()) - mr / p["K"]) / mr;
    };
    out.push_back(std::move(s));
  }

  for (const auto& it : k_items) {
    auto s = ack(it.id, it.anchor, Kind::range_endpoints);
    s.shapes = {it.shape};
    const bool inverse = it.inverse;
    const SideCurve f = it.f;
    s.curve = [inverse, f](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double k = p["K"];
      const Side sd = side(p, inverse ? 1.0 / k : k, m);
      if (sd.phi.saturated) return nan_est();
      return f(sd, p, m);
    };
    auto at0 = it.at0;
    auto at1 = it.at1;
    s.endpoints = {to_zero([at0](const Point& p) { return at0(p["K"]); }),
                   to_one([at1](const Point& p) { return at1(p["K"]); })};
    out.push_back(std::move(s));
  }

  {
    auto s = make("mufunc-g1", "(1-r) mu'(r) increasing", Kind::monotone);
    s.param_grid = ac_grid();
    s.expand = expand_ac;
    s.arg_grid = r_grid();
    s.shapes = {Shape::increasing};
    s.curve = [](const Point& p, const Args& x) { return x[0].comp * from(mu_deriv(modp(p), x[0].x)); };
    out.push_back(s);
    s.id = "mufunc-g2";
    s.paper_anchor = "r mu'(r) decreasing";
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) { return x[0].x * from(mu_deriv(modp(p), x[0].x)); };
    out.push_back(std::move(s));
  }
  {
    auto base = [](std::string id, std::string anchor) {
      auto s = make(std::move(id), std::move(anchor), Kind::inequality);
      s.param_grid = ac_grid();
      s.expand = expand_ac;
      s.arg_grid = {{Dim::range("u", 0.01, 0.99, 15, Scale::logit), Dim::range("t", 0.01, 0.99, 15, Scale::logit)}};
      s.shapes = {Shape::positive};
      s.tolerance = 1e-300;
      s.strict_fraction = 1.0;
      return s;
    };
    {
      auto s = base("mufunc-ineq-lower", "mu(1 - sqrt((1-u)(1-t))) <= (mu(u)+mu(t))/2, equality iff u = t");
      s.curve = [](const Point& p, const Args& x) {
        if (std::abs(x[0].x - x[1].x) < 1e-3) return Est::none();
        const auto mp = modp(p);
        const double w = std::sqrt(x[0].comp * x[1].comp);
        const Est mid = 0.5 * (mu_est(mp, modulus(x[0])) + mu_est(mp, modulus(x[1])));
        return mid - mu_est(mp, modulus_of(1.0 - w, w));
      };
      out.push_back(std::move(s));
    }
    {
      auto s = base("mufunc-ineq-upper", "(mu(u)+mu(t))/2 <= mu(sqrt(ut)), equality iff u = t");
      s.curve = [](const Point& p, const Args& x) {
        if (std::abs(x[0].x - x[1].x) < 1e-3) return Est::none();
        const auto mp = modp(p);
        const double g = std::sqrt(x[0].x * x[1].x);
        const Est mid = 0.5 * (mu_est(mp, modulus(x[0])) + mu_est(mp, modulus(x[1])));
        return mu_est(mp, modulus_of(g, 1.0 - g)) - mid;
      };
      out.push_back(std::move(s));
    }
  }
  {
    auto s = ack("phiperr-f", "phi_K(r)/r^{1/K} strictly decreasing from (0,1] onto [1, e^{(1-1/K)R(a,c-a)/2})",
                 Kind::range_endpoints);
    s.shapes = {Shape::decreasing};
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double k = p["K"];
      const double lr = log_r(m) / k;
      return log_phi(p, k, m) - Est{lr, 2.0 * ulp * std::abs(lr)};
    };
    s.endpoints = {to_zero([](const Point& p) { return (1.0 - 1.0 / p["K"]) * ramanujan_r(p["a"], p["b"]) / 2.0; }),
                   to_one(constant(0.0))};
    out.push_back(s);
    s.id = "phiperr-g";
    s.paper_anchor = "phi_{1/K}(r)/r^K strictly increasing from (0,1] onto (e^{(1-K)R(a,c-a)/2}, 1]";
    s.shapes = {Shape::increasing};
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double k = p["K"];
      const double lr = log_r(m) * k;
      return log_phi(p, 1.0 / k, m) - Est{lr, 2.0 * ulp * std::abs(lr)};
    };
    s.endpoints = {to_zero([](const Point& p) { return (1.0 - p["K"]) * ramanujan_r(p["a"], p["b"]) / 2.0; }),
                   to_one(constant(0.0))};
    out.push_back(std::move(s));
  }
  {
    auto s = make("phiperr-bounds", "r^{1/K} < phi_K(r) < e^{(1-1/K)R/2} r^{1/K}", Kind::inequality);
    s.param_grid = {{Dim::list("i", {0, 1, 2}), Dim::list("K", default_k())}};
    s.expand = [](Point& p) {
      static const double ac[3][2] = {{0.3, 0.8}, {0.5, 1.0}, {0.7, 0.9}};
      const auto& row = ac[static_cast<int>(p["i"])];
      p.set("a", row[0]);
      p.set("c", row[1]);
      p.set("b", row[1] - row[0]);
    };
    s.arg_grid = r_grid();
    s.shapes = {Shape::positive};
    s.tolerance = 1e-300;
    s.strict_fraction = 1.0;
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double k = p["K"];
      const double lr = log_r(m) / k;
      const Est d = log_phi(p, k, m) - Est{lr, 2.0 * ulp * std::abs(lr)};
      const double top = (1.0 - 1.0 / k) * ramanujan_r(p["a"], p["b"]) / 2.0;
      const Est upper = Est{top, 8.0 * ulp * std::abs(top)} - d;
      return d.v - d.e < upper.v - upper.e ? d : upper;
    };
    out.push_back(s);
    s.id = "phiperr-bounds-inverse";
    s.paper_anchor = "r^K > phi_{1/K}(r) > e^{(1-K)R/2} r^K";
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double k = p["K"];
      const double lr = log_r(m) * k;
      const Est d = Est{lr, 2.0 * ulp * std::abs(lr)} - log_phi(p, 1.0 / k, m);
      const double bottom = (k - 1.0) * ramanujan_r(p["a"], p["b"]) / 2.0;
      const Est lower = Est{bottom, 8.0 * ulp * std::abs(bottom)} - d;
      return d.v - d.e < lower.v - lower.e ? d : lower;
    };
    out.push_back(std::move(s));
  }
  {
    auto s = ack("funcineq1-1", "log phi_K(r') decreasing and concave on (0,1)", Kind::convex_concave);
    s.shapes = {Shape::decreasing, Shape::concave};
    s.curve = [](const Point& p, const Args& x) { return log_phi(p, p["K"], modulus(x[0]).complement()); };
    out.push_back(s);
    s.id = "funcineq1-2";
    s.paper_anchor = "log phi_K(r'^2) decreasing and concave on (0,1)";
    s.curve = [](const Point& p, const Args& x) {
      const auto m = modulus(x[0]);
      const double v = m.r_comp() * m.r_comp();
      return log_phi(p, p["K"], Modulus(v, m.r() * std::sqrt(1.0 + v)));
    };
    out.push_back(s);
    s.id = "funcineq1-3";
    s.paper_anchor = "log phi_K(1 - e^{-r}) increasing and concave on (0,inf)";
    s.arg_grid = {{Dim::range("v", 0.001, 30.0, 33, Scale::log)}};
    s.shapes = {Shape::increasing, Shape::concave};
    s.curve = [](const Point& p, const Args& x) {
      const double v = x[0].x;
      const double w = std::exp(-v);
      return log_phi(p, p["K"], modulus_of(-std::expm1(-v), w));
    };
    out.push_back(std::move(s));
  }
  {
    auto s = ack("linconj-g", "g(x) = p(phi_K(q(x))) >= Kx for x >= 0 and >= x/K for x < 0", Kind::inequality);
    s.arg_grid = {{Dim::range("x", -20.0, 20.0, 41, Scale::linear)}};
    s.shapes = {Shape::nonnegative};
    s.tolerance = 1e-9;
    s.curve = [](const Point& p, const Args& x) {
      const double k = p["K"], v = x[0].x;
      return p_of_phi(p, k, v) - (v >= 0.0 ? k * v : v / k);
    };
    out.push_back(s);
    s.id = "linconj-h";
    s.paper_anchor = "h(x) = p(phi_{1/K}(q(x))) <= x/K for x >= 0 and <= Kx for x < 0";
    s.curve = [](const Point& p, const Args& x) {
      const double k = p["K"], v = x[0].x;
      return (v >= 0.0 ? v / k : k * v) - p_of_phi(p, 1.0 / k, v);
    };
    out.push_back(std::move(s));
  }
}

}  // namespace genellip::verify::reg
