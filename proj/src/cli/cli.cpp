#include "genellip/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genellip/elliptic.hpp"
#include "genellip/errors.hpp"
#include "genellip/hypergeom.hpp"
#include "genellip/legendre_m.hpp"
#include "genellip/modulus_modular.hpp"
#include "genellip/scalar_special.hpp"
#include "genellip/verify/registry.hpp"
#include "genellip/verify/report.hpp"

namespace genellip::cli {

namespace {

enum Exit { ok = 0, gating_failed = 1, usage = 2, no_convergence = 3, unknown_id = 4 };

struct unknown_check : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Bindings {
  std::optional<double> a, b, c, r, z, K, p, y;

  double need(const std::optional<double>& v, const char* flag) const {
    if (!v) throw domain_error(std::string("missing --") + flag);
    return *v;
  }
  double b_or_family() const {
    if (b) return *b;
    return need(c, "c") - need(a, "a");
  }
};

// Argument axis of each selector: "r" (modulus), "z" (2F1 argument), "x" (scalar), "" (none).
std::string axis_of(const std::string& fn) {
  if (fn == "hyp2f1" || fn == "M") return "z";
  if (fn == "K" || fn == "E" || fn == "Kp" || fn == "Ep" || fn == "mu" || fn == "phi") return "r";
  if (fn == "gamma" || fn == "digamma") return "x";
  if (fn == "R" || fn == "beta") return "";
  throw domain_error("unknown function '" + fn + "'");
}

EvalResult evaluate(const std::string& fn, const Bindings& bd, double x, double x_comp) {
  if (fn == "hyp2f1") {
    return hyp2f1(HypParams(bd.need(bd.a, "a"), bd.need(bd.b, "b"), bd.need(bd.c, "c")), Argument(x, x_comp));
  }
  if (fn == "M") {
    return m_value(MPoint(bd.need(bd.a, "a"), bd.need(bd.b, "b"), bd.need(bd.c, "c"), Argument(x, x_comp)));
  }
  if (fn == "K" || fn == "E" || fn == "Kp" || fn == "Ep") {
    const EllipticParams e(bd.need(bd.a, "a"), bd.b_or_family(), bd.need(bd.c, "c"));
    const Modulus m(x);
    if (fn == "K") return ell_k(e, m);
    if (fn == "E") return ell_e(e, m);
    if (fn == "Kp") return ell_k_comp(e, m);
    return ell_e_comp(e, m);
  }
  if (fn == "mu") return mu(ModulusParams(bd.need(bd.a, "a"), bd.b_or_family(), bd.need(bd.c, "c")), x);
  if (fn == "phi") {
    const auto s = phi_k(ModulusParams(bd.need(bd.a, "a"), bd.b_or_family(), bd.need(bd.c, "c")),
                         DegreeK(bd.need(bd.K, "K")), x);
    return {s.value, 8.0 * 2.220446049250313e-16 * s.value, Method::series};
  }
  if (fn == "gamma") return gamma(x);
  if (fn == "digamma") return digamma(x);
  if (fn == "R") return ramanujan_R(bd.need(bd.a, "a"), bd.need(bd.b, "b"));
  if (fn == "beta") return beta(bd.need(bd.a, "a"), bd.need(bd.b, "b"));
  throw domain_error("unknown function '" + fn + "'");
}

std::string header(const std::string& fn, const Bindings& bd) {
  auto v = [](const std::optional<double>& o) { return o ? fmt(*o, 17) : std::string(); };
  const bool family = !bd.b && bd.a && bd.c && axis_of(fn) == "r";
  std::string h = "# " + fn + "," + v(bd.a) + "," + (family ? fmt(*bd.c - *bd.a, 17) : v(bd.b)) + "," + v(bd.c);
  if (bd.K) h += ",K=" + fmt(*bd.K, 17);
  return h;
}

void add_bindings(CLI::App* app, Bindings& bd, bool point) {
  app->add_option("--a", bd.a, "parameter a");
  app->add_option("--b", bd.b, "parameter b (defaults to c-a where a family allows it)");
  app->add_option("--c", bd.c, "parameter c");
  app->add_option("--K", bd.K, "modular degree K");
  if (point) {
    app->add_option("--r", bd.r, "modulus r");
    app->add_option("--z", bd.z, "argument z");
  }
}

int cmd_eval(const std::string& fn, const Bindings& bd, const std::string& format, std::ostream& out) {
  const std::string ax = axis_of(fn);
  double x = 0.0;
  if (ax == "r") x = bd.need(bd.r, "r");
  if (ax == "z") x = bd.need(bd.z, "z");
  if (ax == "x") x = bd.a ? *bd.a : bd.need(bd.z, "z");
  const EvalResult res = evaluate(fn, bd, x, 1.0 - x);
  if (format == "json") {
    nlohmann::json j{{"fn", fn}, {"value", res.value}, {"abs_err_est", res.abs_err_est},
                     {"method", std::string(to_string(res.method))}};
    if (!ax.empty()) j[ax] = x;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << header(fn, bd) << "\n" << fmt(x, 17) << "," << fmt(res.value, 17) << "," << fmt(res.abs_err_est, 17) << "\n";
  } else {
    out << fmt(res.value, 12) << "  +- " << fmt(res.abs_err_est, 3) << "  [" << to_string(res.method) << "]\n";
  }
  return ok;
}

int cmd_tabulate(const std::string& fn, const Bindings& bd, const std::string& grid, std::ostream& out) {
  const std::string ax = axis_of(fn);
  if (ax.empty()) throw domain_error(fn + " has no argument to tabulate over");
  const auto dim = verify::parse_dim(ax, grid);
  out << header(fn, bd) << "\n";
  for (const auto& s : verify::samples(dim)) {
    const EvalResult res = evaluate(fn, bd, s.x, s.comp);
    out << fmt(s.x, 17) << "," << fmt(res.value, 17) << "," << fmt(res.abs_err_est, 17) << "\n";
  }
  return ok;
}

void print_solution(const std::string& what, const Solution& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << nlohmann::json{{what, s.value}, {what + "_comp", s.value_comp}, {"saturated", s.saturated},
                          {"iterations", s.iterations}}
               .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "# " << what << "," << what << "_comp,saturated\n"
        << fmt(s.value, 17) << "," << fmt(s.value_comp, 17) << "," << (s.saturated ? 1 : 0) << "\n";
  } else {
    out << fmt(s.value, 12) << "  (" << what << "' = " << fmt(s.value_comp, 12) << ")"
        << (s.saturated ? "  saturated" : "") << "\n";
  }
}

ModulusParams modulus_params(const Bindings& bd) {
  return ModulusParams(bd.need(bd.a, "a"), bd.b_or_family(), bd.need(bd.c, "c"));
}

int cmd_verify(const std::vector<std::string>& ids, bool non_gating, const std::optional<std::string>& grid,
               const std::optional<double>& tol, const std::string& out_path, unsigned threads,
               const std::string& invocation, std::ostream& out, std::ostream& err) {
  std::vector<verify::CheckSpec> specs;
  std::optional<verify::Dim> dim;
  if (grid) dim = verify::parse_dim("x", *grid);
  auto add = [&](const verify::CheckSpec& s) { specs.push_back(verify::with_overrides(s, dim, tol)); };
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& s : verify::registry()) add(s);
    } else if (id == "conjectures") {
      for (const auto& s : verify::registry()) {
        if (!s.gating) add(s);
      }
    } else if (const auto* s = verify::find_check(id)) {
      add(*s);
    } else {
      throw unknown_check("unknown check id '" + id + "'");
    }
  }
  const auto reports = verify::run_checks(specs, threads);
  const auto j = verify::report_json(reports, invocation, verify::utc_timestamp());
  std::ostream& summary = out_path.empty() ? err : out;
  bool gating_ok = true;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.verdict == verify::Verdict::pass) ++passed;
    if (r.gating && r.verdict != verify::Verdict::pass) gating_ok = false;
    summary << verify::to_string(r.verdict) << (r.gating ? "" : " (non-gating)") << "  " << r.id << "  margin "
            << fmt(r.worst_margin, 3) << "  " << fmt(r.seconds, 3) << "s" << (r.note.empty() ? "" : "  " + r.note)
            << "\n";
  }
  summary << passed << "/" << reports.size() << " passed\n";
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw domain_error("cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
  return (gating_ok || non_gating) ? ok : gating_failed;
}

int cmd_list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : verify::registry()) {
      arr.push_back({{"id", s.id}, {"kind", std::string(verify::to_string(s.kind))}, {"gating", s.gating},
                     {"paper_anchor", s.paper_anchor}});
    }
    out << arr.dump(2) << "\n";
    return ok;
  }
  for (const auto& s : verify::registry()) {
    out << s.id << "  " << verify::to_string(s.kind) << (s.gating ? "" : "  non-gating") << "  " << s.paper_anchor
        << "\n";
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized elliptic integrals, modulus and Legendre M-function"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  Bindings bd;
  std::string fn;
  std::string grid;

  auto* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("fn", fn, "hyp2f1 K E Kp Ep M mu R gamma digamma beta phi")->required();
  add_bindings(eval, bd, true);
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* tab = app.add_subcommand("tabulate", "tabulate a function over a grid (CSV)");
  tab->add_option("fn", fn)->required();
  add_bindings(tab, bd, false);
  tab->add_option("--grid", grid, "lo:hi:count:scale")->required();

  auto* inv = app.add_subcommand("invert", "r with mu(r) = y");
  add_bindings(inv, bd, false);
  inv->add_option("--y", bd.y, "value of mu")->required();
  inv->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* phi = app.add_subcommand("phi", "s = phi_K(r)");
  add_bindings(phi, bd, true);
  phi->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* solve = app.add_subcommand("solve", "s with mu(s) = p mu(r)");
  add_bindings(solve, bd, true);
  solve->add_option("--p", bd.p, "degree p")->required();
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  std::vector<std::string> ids;
  bool non_gating = false;
  std::optional<std::string> vgrid;
  std::optional<double> tol;
  std::string out_path;
  unsigned threads = 0;
  auto* ver = app.add_subcommand("verify", "run checks: ids, 'all' or 'conjectures'");
  ver->add_option("ids", ids)->required();
  ver->add_flag("--non-gating", non_gating, "exit 0 whatever the verdicts");
  ver->add_option("--grid", vgrid, "override the first argument axis, lo:hi:count:scale");
  ver->add_option("--tol", tol, "override the tolerance");
  ver->add_option("--out", out_path, "write the JSON report here");
  ver->add_option("--threads", threads, "worker threads, 0 = all cores");

  auto* list = app.add_subcommand("list-checks", "list registered checks");
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  // run_id ignores --out.
  std::string invocation;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--out") {
      ++i;
      continue;
    }
    if (arg.rfind("--out=", 0) == 0) continue;
    invocation += (invocation.empty() ? "" : " ") + std::string(arg);
  }

  try {
    if (*eval) return cmd_eval(fn, bd, format, out);
    if (*tab) return cmd_tabulate(fn, bd, grid, out);
    if (*inv) {
      const auto s = mu_inv_log(modulus_params(bd), std::log(bd.need(bd.y, "y")));
      print_solution("r", s, format, out);
      return ok;
    }
    if (*phi) {
      print_solution("s", phi_k(modulus_params(bd), DegreeK(bd.need(bd.K, "K")), bd.need(bd.r, "r")), format, out);
      return ok;
    }
    if (*solve) {
      print_solution("s", modular_solve(modulus_params(bd), bd.need(bd.p, "p"), bd.need(bd.r, "r")), format, out);
      return ok;
    }
    if (*ver) return cmd_verify(ids, non_gating, vgrid, tol, out_path, threads, invocation, out, err);
    if (*list) return cmd_list(format, out);
  } catch (const unknown_check& e) {
    err << "error: " << e.what() << "\n";
    return unknown_id;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return no_convergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace genellip::cli
