#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "genellip/hypergeom.hpp"
#include "genellip/legendre_m.hpp"
#include "genellip/modulus_modular.hpp"
#include "genellip/verify/finite_diff.hpp"
#include "genellip/verify/large_c.hpp"
#include "genellip/verify/pab.hpp"
#include "genellip/verify/registry.hpp"
#include "genellip/verify/report.hpp"
#include "oracle/mp_oracle.hpp"

using namespace genellip;
using namespace genellip::verify;
using oracle::mpf;

namespace {

double relerr(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

nlohmann::json without_seconds(const CheckReport& r) {
  auto j = to_json(r);
  j.erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("pab") {
  const auto z = pab(0.4, 1.1, 0.0);
  CHECK(z.A == 1.0);
  CHECK(z.A_tilde == 1.0);
  CHECK(z.B_t == 0.0);

  const auto n = pab(0.3, 0.8, 2.0);
  const mpf ref = oracle::tgamma(mpf("2.5")) * oracle::tgamma(mpf("0.8")) /
                  (oracle::tgamma(mpf("2.8")) * oracle::tgamma(mpf("0.5")));
  CHECK(relerr(n.A, oracle::d(ref)) < 1e-14);
  const mpf p_ref = oracle::digamma_series(mpf("2.5")) - oracle::digamma_series(mpf("2.8"));
  CHECK(std::abs(n.P - oracle::d(p_ref)) < 1e-12);
  CHECK(relerr(n.A_tilde, oracle::d(ref * oracle::tgamma(mpf("2.3")) / oracle::tgamma(mpf("0.3")))) < 1e-13);

  double prev = -1.0;
  for (double t : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double b = pab(0.3, 0.8, t).B_t;
    CHECK(b > prev);
    CHECK(b >= 0.0);
    prev = b;
  }
  CHECK_THROWS(pab(0.8, 0.3, 1.0));
  CHECK_THROWS(pab(0.3, 0.8, -1.0));
}

TEST_CASE("finite differences") {
  const auto sq = finite_diff([](double x) { return x * x; }, 3.0, 1e-4);
  CHECK(std::abs(sq.first - 6.0) < 1e-9);
  CHECK(std::abs(sq.second - 2.0) < 1e-5);
  const auto k = finite_diff([](double) { return 4.2; }, 0.5, 1e-3);
  CHECK(k.first == 0.0);
  CHECK(k.second == 0.0);
  const auto ex = finite_diff([](double x) { return std::exp(x); }, 1.0, 0.05);
  CHECK(relerr(ex.first, std::exp(1.0)) < 1e-10);
  CHECK(std::abs(ex.first - std::exp(1.0)) <= ex.first_err + 1e-14);

  const ModulusParams p = ModulusParams::from_ac(0.3, 0.8);
  for (double r : {0.1, 0.5, 0.9}) {
    const auto fd = finite_diff([&](double x) { return mu(p, x).value; }, r, 0.01 * std::min(r, 1 - r));
    CHECK(relerr(fd.first, mu_deriv(p, r).value) < 1e-8);
  }
}

TEST_CASE("grid parsing") {
  const Dim d = parse_dim("r", "0.001:0.999:5:logit");
  CHECK(d.count == 5);
  CHECK(d.scale == Scale::logit);
  const auto s = samples(d);
  REQUIRE(s.size() == 5);
  CHECK(s.front().x == doctest::Approx(0.001));
  CHECK(s.back().comp == doctest::Approx(0.001).epsilon(1e-12));
  CHECK(s[2].x == doctest::Approx(0.5));
  CHECK_THROWS(parse_dim("r", "1:0:5:linear"));
  CHECK_THROWS(parse_dim("r", "0:1:2:linear"));
  CHECK_THROWS(parse_dim("r", "0:1:5:cubic"));
}

TEST_CASE("run_check: constant M in the classical case") {
  CheckSpec s;
  s.id = "classical-m";
  s.paper_anchor = "M(1/2,1/2,1;z) = 1/pi";
  s.kind = Kind::identity;
  s.param_grid = {{Dim::list("unused", {0.0})}};
  s.arg_grid = {{Dim::range("z", 1e-4, 1 - 1e-4, 33, Scale::logit)}};
  s.shapes = {Shape::zero};
  s.tolerance = 1e-10;
  s.curve = [](const Point&, const Args& x) {
    const auto m = m_value(MPoint(0.5, 0.5, 1.0, Argument(x[0].x, x[0].comp)));
    return Est{m.value - std::numbers::inv_pi, m.abs_err_est};
  };
  const auto r = run_check(s);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.samples == 33);
  CHECK(r.worst_margin >= 0.0);
  CHECK(r.worst_margin <= 1e-10);
}

TEST_CASE("run_check: inverted claim fails with a witness") {
  CheckSpec s;
  s.id = "mu-increasing";
  s.paper_anchor = "mu increasing (false)";
  s.kind = Kind::monotone;
  s.param_grid = {{Dim::list("a", {0.3}), Dim::list("c", {0.8})}};
  s.arg_grid = {{Dim::range("r", 0.01, 0.99, 17, Scale::logit)}};
  s.shapes = {Shape::increasing};
  s.curve = [](const Point& p, const Args& x) {
    return from(mu(ModulusParams::from_ac(p["a"], p["c"]), Modulus(x[0].x)));
  };
  const auto r = run_check(s);
  CHECK_MESSAGE(r.verdict == Verdict::fail, r.note);
  CHECK(r.worst_margin < 0.0);
  CHECK(r.witness.has("r"));
  CHECK(r.witness.has("a"));

  s.shapes = {Shape::decreasing};
  CHECK(run_check(s).verdict == Verdict::pass);
}

TEST_CASE("run_check: quotient of F decreasing in c on a log grid") {
  const CheckSpec* q = find_check("quotfdepc");
  REQUIRE(q != nullptr);
  for (double a : {0.3, 0.6, 1.5}) {
    CheckSpec s = *q;
    s.param_grid = {{Dim::list("a", {a}), Dim::list("j", {0.0})}};
    s.arg_grid = {{Dim::range("d", 0.05, 10.0 - a, 33, Scale::log)}};
    const auto r = run_check(s);
    CHECK_MESSAGE(r.verdict == Verdict::pass, "a=", a, " ", r.note);
  }
  // row j = 0 is (x, y) = (0.2, 0.7)
  Point p;
  p.set("a", 0.3);
  p.set("j", 0.0);
  q->expand(p);
  CHECK(p["x"] == 0.2);
  CHECK(p["y"] == 0.7);
}

TEST_CASE("run_check: validation and empty grids") {
  CheckSpec s;
  s.id = "bad";
  s.kind = Kind::monotone;
  s.param_grid = {{Dim::list("a", {0.3})}};
  s.arg_grid = {{Dim::range("r", 0.1, 0.9, 5, Scale::linear)}};
  s.tolerance = 0.0;
  s.shapes = {Shape::increasing};
  s.curve = [](const Point&, const Args& x) { return Est::exact(x[0].x); };
  CHECK(run_check(s).verdict == Verdict::inconclusive);
  s.tolerance = 1e-13;
  CHECK(run_check(s).verdict == Verdict::pass);
}

TEST_CASE("registry catalog") {
  const auto& reg = registry();
  CHECK(reg.size() >= 40);
  std::set<std::string> ids;
  for (const auto& s : reg) {
    CHECK(ids.insert(s.id).second);
    CHECK(!s.paper_anchor.empty());
    CHECK(s.tolerance > 0.0);
    CHECK(s.gating == (s.id.rfind("ops-", 0) != 0));
  }
  for (const char* id : {"mprop-1", "ekmonot-1", "hyper-1", "squareroottimesk-1", "logconvexke-1", "mutheorem-1",
                         "differentparams1", "diffparamscor-1", "mextra-3", "mcorollary-1", "mfunctions-1", "ktheo-1",
                         "mufunc-ineq-lower", "phiperr-f", "funcineq1-1", "linconj-g", "ambm-2", "quotfdepc",
                         "mudepc", "imudpec", "phidepc-K", "thkeb-g", "ops-1-f"}) {
    CHECK_MESSAGE(find_check(id) != nullptr, id);
  }
  CHECK(find_check("no-such-check") == nullptr);
}

TEST_CASE("every registered check runs; gating checks pass") {
  const auto reports = run_checks(registry(), 0);
  REQUIRE(reports.size() == registry().size());
  std::size_t passed = 0;
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.note.find("aborted") == std::string::npos, r.id, ": ", r.note);
    CHECK_MESSAGE(r.samples > 0, r.id);
    if (r.gating) {
      CHECK_MESSAGE(r.verdict == Verdict::pass, r.id, ": ", r.note);
    }
    if (r.verdict == Verdict::fail) {
      CHECK_MESSAGE(!r.witness.items().empty(), r.id);
    }
    passed += r.verdict == Verdict::pass;
  }
  CHECK(passed >= 40);
}

TEST_CASE("run_check is deterministic") {
  for (const char* id : {"mutheorem-1", "ktheo-3", "mudepc", "deriv-phi"}) {
    const CheckSpec* s = find_check(id);
    REQUIRE(s != nullptr);
    CHECK(without_seconds(run_check(*s)).dump() == without_seconds(run_check(*s)).dump());
  }
  std::vector<CheckSpec> some{*find_check("mprop-4"), *find_check("hyper-2"), *find_check("phiperr-g")};
  const auto a = run_checks(some, 1);
  const auto b = run_checks(some, 3);
  for (std::size_t i = 0; i < some.size(); ++i) {
    CHECK(without_seconds(a[i]).dump() == without_seconds(b[i]).dump());
  }
}

TEST_CASE("overrides") {
  const CheckSpec* s = find_check("mutheorem-1");
  REQUIRE(s != nullptr);
  const auto o = with_overrides(*s, parse_dim("r", "0.1:0.9:9:linear"), 1e-12);
  CHECK(o.arg_grid.dims[0].name == s->arg_grid.dims[0].name);
  CHECK(o.arg_grid.dims[0].count == 9);
  CHECK(o.tolerance == 1e-12);
  CHECK_THROWS(with_overrides(*s, std::nullopt, 0.0));
  CHECK(run_check(o).verdict == Verdict::pass);
}

TEST_CASE("large-c family against the evaluator") {
  for (double a : {0.3, 0.6}) {
    for (double c : {5.0, 20.0, 50.0}) {
      const ModulusParams p(a, c - a, c);
      for (double r : {0.05, 0.5, 0.95}) {
        const Arg ra{r, 1.0 - r};
        CHECK(relerr(large_c::mu(a, c, ra).v, mu(p, r).value) < 1e-12);
        const double z = r * r;
        CHECK(relerr(large_c::f(a, c, Arg{z, 1.0 - z}).v, hyp2f1(HypParams(a, c - a, c), Argument(z)).value) < 1e-12);
      }
      for (double x : {0.5, 2.0}) {
        const auto inv = mu_inv_log(p, std::log(x));
        CHECK(relerr(large_c::mu_inv(a, c, x).v, inv.value) < 1e-10);
      }
    }
  }
  // mu_{a,c}(r) ~ (Gamma(a)/2) c^{-a} (r'/r)^{2a} as c -> infinity
  const double c = 1e12;
  const double r = 0.5, rp = std::sqrt(0.75);
  const double lead = 0.5 * std::tgamma(0.3) * std::pow(c, -0.3) * std::pow(rp / r, 0.6);
  CHECK(relerr(large_c::mu(0.3, c, Arg{r, 1 - r}).v, lead) < 1e-9);
  CHECK(relerr(std::exp(large_c::log_half_beta(0.3, c)), 0.5 * std::tgamma(0.3) * std::pow(c, -0.3)) < 1e-9);
}

TEST_CASE("report json") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CheckReport r;
  r.id = "x";
  r.paper_anchor = "anchor";
  r.verdict = Verdict::pass;
  r.worst_margin = std::numeric_limits<double>::infinity();
  r.witness.set("r", 0.25);
  r.samples = 3;
  const auto j = to_json(r);
  CHECK(j["worst_margin"] == "inf");
  CHECK(j["verdict"] == "pass");
  CHECK(j["witness"]["r"] == 0.25);
  const auto full = report_json({r}, "verify x", "2000-01-01T00:00:00Z");
  CHECK(full["run_id"] == fnv1a_hex("verify x"));
  CHECK(full["timestamp"] == "2000-01-01T00:00:00Z");
  CHECK(full["checks"].size() == 1);
  for (const char* key : {"id", "paper_anchor", "verdict", "worst_margin", "witness", "samples", "seconds"}) {
    CHECK_MESSAGE(full["checks"][0].contains(key), key);
  }
  const auto ts = utc_timestamp();
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
}
