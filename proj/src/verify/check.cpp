#include "genellip/verify/check.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <exception>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "genellip/errors.hpp"
#include "genellip/verify/finite_diff.hpp"

namespace genellip::verify {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::monotone: return "monotone";
    case Kind::convex_concave: return "convex_concave";
    case Kind::range_endpoints: return "range_endpoints";
    case Kind::inequality: return "inequality";
    case Kind::identity: return "identity";
    case Kind::derivative_match: return "derivative_match";
    case Kind::limit: return "limit";
  }
  return "monotone";
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::increasing: return "increasing";
    case Shape::decreasing: return "decreasing";
    case Shape::convex: return "convex";
    case Shape::concave: return "concave";
    case Shape::nonnegative: return "nonnegative";
    case Shape::positive: return "positive";
    case Shape::zero: return "zero";
    case Shape::somewhere_increasing: return "somewhere_increasing";
    case Shape::somewhere_decreasing: return "somewhere_decreasing";
  }
  return "increasing";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void CheckSpec::validate() const {
  if (id.empty()) throw domain_error("check without id");
  if (!(tolerance > 0.0) || !(endpoint_tolerance > 0.0)) throw domain_error(id + ": tolerance must be positive");
  if (!curve) throw domain_error(id + ": no curve");
  param_grid.validate();
  if (kind == Kind::derivative_match && !reference) throw domain_error(id + ": derivative check without reference");
  const bool has_shapes = !shapes.empty() || static_cast<bool>(shapes_for);
  if (kind != Kind::limit && (kind != Kind::range_endpoints || has_shapes)) arg_grid.validate();
  if ((kind == Kind::limit || kind == Kind::range_endpoints) && endpoints.empty()) {
    throw domain_error(id + ": limit check without endpoints");
  }
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t max_notes = 3;

struct Tally {
  std::size_t samples = 0;
  bool violated = false;
  bool unresolved_hard = false;
  std::size_t strict_total = 0;
  std::size_t strict_ok = 0;
  double worst = inf;
  Point worst_point;
  double worst_violation = inf;
  Point violation_point;
  double obs_min = inf;
  double obs_max = -inf;
  std::vector<std::string> notes;

  void margin(double m, const Point& w) {
    if (std::isnan(m)) return;
    if (m < worst) {
      worst = m;
      worst_point = w;
    }
  }
  void violation(double m, const Point& w, std::string what) {
    violated = true;
    if (m < worst_violation || violation_point.items().empty()) {
      worst_violation = m;
      violation_point = w;
    }
    note(std::move(what));
  }
  void unresolved(const Point& w, std::string what) {
    unresolved_hard = true;
    if (worst_point.items().empty()) worst_point = w;
    note(std::move(what));
  }
  void note(std::string s) {
    if (notes.size() < max_notes && std::find(notes.begin(), notes.end(), s) == notes.end()) {
      notes.push_back(std::move(s));
    }
  }
  void observe(double v) {
    if (!std::isfinite(v)) return;
    obs_min = std::min(obs_min, v);
    obs_max = std::max(obs_max, v);
  }
};

Point witness_of(const Point& p, const GridSpec& g, const Args& args) {
  Point w = p;
  for (std::size_t i = 0; i < args.size(); ++i) {
    w.set(i < g.dims.size() ? g.dims[i].name : "arg" + std::to_string(i), args[i].x);
  }
  return w;
}

Est eval_safe(const CheckSpec& spec, const Point& p, const Args& args, Tally& t) {
  try {
    return spec.curve(p, args);
  } catch (const std::exception& e) {
    t.note(std::string("evaluation failed: ") + e.what());
    return {nan, inf};
  }
}

// Pairwise deltas for monotone and convexity shapes. `sign` is +1 when the
// quantity should grow.
struct Delta {
  double d;
  double err;
  std::size_t i;
};

std::vector<Delta> monotone_deltas(const std::vector<Est>& v, double sign, double floor_rel) {
  std::vector<Delta> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i].skip || v[i + 1].skip) continue;
    const double d = sign * (v[i + 1].v - v[i].v);
    const double err = v[i].e + v[i + 1].e + floor_rel * std::max(std::abs(v[i].v), std::abs(v[i + 1].v));
    out.push_back({d, err, i});
  }
  return out;
}

double spacing(const Arg& lo, const Arg& hi) {
  return lo.x > 0.5 ? lo.comp - hi.comp : hi.x - lo.x;
}

std::vector<Delta> convexity_deltas(const std::vector<Est>& v, const std::vector<Args>& xs, double sign,
                                    double floor_rel) {
  std::vector<Delta> out;
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    if (v[i].skip || v[i + 1].skip || v[i + 2].skip) continue;
    const double h0 = spacing(xs[i][0], xs[i + 1][0]);
    const double h1 = spacing(xs[i + 1][0], xs[i + 2][0]);
    auto err_of = [&](std::size_t k) { return v[k].e + floor_rel * std::abs(v[k].v); };
    const double s0 = (v[i + 1].v - v[i].v) / h0;
    const double s1 = (v[i + 2].v - v[i + 1].v) / h1;
    const double e0 = (err_of(i) + err_of(i + 1)) / h0;
    const double e1 = (err_of(i + 1) + err_of(i + 2)) / h1;
    out.push_back({sign * (s1 - s0), e0 + e1, i + 1});
  }
  return out;
}

void judge_strict(const std::vector<Delta>& deltas, const Point& p, const CheckSpec& spec,
                  const std::vector<Args>& xs, Shape shape, Tally& t) {
  for (const auto& d : deltas) {
    const Point w = witness_of(p, spec.arg_grid, xs[d.i]);
    ++t.strict_total;
    if (!std::isfinite(d.d) || !std::isfinite(d.err)) {
      t.note("non-finite sample");
      continue;
    }
    t.margin(d.d - d.err, w);
    if (d.d > d.err) {
      ++t.strict_ok;
    } else if (d.d < -d.err) {
      t.violation(d.d + d.err, w, std::string("not ") + std::string(to_string(shape)));
    }
  }
}

void judge_somewhere(const std::vector<Delta>& deltas, const Point& p, const CheckSpec& spec,
                     const std::vector<Args>& xs, Tally& t) {
  bool found = false;
  bool all_opposite = !deltas.empty();
  double best = -inf;
  std::size_t best_i = 0;
  for (const auto& d : deltas) {
    if (!std::isfinite(d.d)) {
      all_opposite = false;
      continue;
    }
    if (d.d - d.err > best) {
      best = d.d - d.err;
      best_i = d.i;
    }
    if (d.d > d.err) found = true;
    if (!(d.d < -d.err)) all_opposite = false;
  }
  const Point w = deltas.empty() ? p : witness_of(p, spec.arg_grid, xs[best_i]);
  t.margin(best, w);
  if (found) return;
  if (all_opposite) {
    t.violation(best, w, "monotone where a reversal was expected");
  } else {
    t.unresolved(w, "reversal not resolved above the error estimate");
  }
}

void judge_pointwise(const std::vector<Est>& v, const Point& p, const CheckSpec& spec,
                     const std::vector<Args>& xs, Shape shape, Tally& t) {
  const double tol = spec.tolerance;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].skip) continue;
    const Point w = witness_of(p, spec.arg_grid, xs[i]);
    if (!v[i].finite()) {
      t.unresolved(w, "non-finite sample");
      continue;
    }
    const double x = v[i].v;
    const double e = v[i].e;
    switch (shape) {
      case Shape::nonnegative:
        t.margin(x, w);
        if (x < -(tol + e)) {
          t.violation(x, w, "negative beyond tolerance");
        } else if (x < -tol) {
          t.unresolved(w, "sign not resolved");
        }
        break;
      case Shape::positive:
        t.margin(x, w);
        ++t.strict_total;
        if (x > e) {
          ++t.strict_ok;
        } else if (x + e < -tol) {
          t.violation(x, w, "not positive");
        }
        break;
      case Shape::zero:
        t.margin(tol - std::abs(x), w);
        if (std::abs(x) - e > tol) {
          t.violation(tol - std::abs(x), w, "identity residual above tolerance");
        } else if (std::abs(x) > tol) {
          t.unresolved(w, "identity residual within its error estimate");
        }
        break;
      default: break;
    }
  }
}

void run_shapes(const CheckSpec& spec, const Point& p, const std::vector<Args>& xs, Tally& t) {
  const auto shapes = spec.shapes_for ? spec.shapes_for(p) : spec.shapes;
  if (shapes.empty()) return;
  std::vector<Est> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    v[i] = eval_safe(spec, p, xs[i], t);
    ++t.samples;
    if (!v[i].skip) t.observe(v[i].v);
  }
  const double floor_rel = spec.tolerance;
  for (Shape s : shapes) {
    switch (s) {
      case Shape::increasing:
      case Shape::decreasing:
        judge_strict(monotone_deltas(v, s == Shape::increasing ? 1.0 : -1.0, floor_rel), p, spec, xs, s, t);
        break;
      case Shape::convex:
      case Shape::concave:
        judge_strict(convexity_deltas(v, xs, s == Shape::convex ? 1.0 : -1.0, floor_rel), p, spec, xs, s, t);
        break;
      case Shape::somewhere_increasing:
      case Shape::somewhere_decreasing:
        judge_somewhere(monotone_deltas(v, s == Shape::somewhere_increasing ? 1.0 : -1.0, floor_rel), p, spec,
                        xs, t);
        break;
      case Shape::nonnegative:
      case Shape::positive:
      case Shape::zero:
        judge_pointwise(v, p, spec, xs, s, t);
        break;
    }
  }
}

void run_derivatives(const CheckSpec& spec, const Point& p, const std::vector<Args>& xs, Tally& t) {
  const double tol = spec.tolerance;
  for (const auto& args : xs) {
    const Point w = witness_of(p, spec.arg_grid, args);
    ++t.samples;
    try {
      const Arg x0 = args[0];
      const double h = spec.step ? spec.step(p, x0) : 0.05 * std::min({x0.x, x0.comp, 0.2});
      const Est centre = spec.curve(p, args);
      if (centre.skip) continue;
      auto f = [&](double y) {
        Args a = args;
        a[0] = {y, x0.comp - (y - x0.x)};
        const Est v = spec.curve(p, a);
        if (v.skip) throw std::runtime_error("no value next to the sample");
        return v.v;
      };
      const double rel_f = centre.v != 0.0 ? std::abs(centre.e / centre.v) : 0.0;
      const auto fd = finite_diff(f, x0.x, h, rel_f);
      const Est ref = spec.reference(p, args);
      if (ref.skip) continue;
      t.observe(ref.v);
      const double scale = std::abs(ref.v);
      const double rel = std::abs(fd.first - ref.v) / scale;
      const double err = (fd.first_err + ref.e) / scale;
      t.margin(tol - rel, w);
      if (!std::isfinite(rel)) {
        t.unresolved(w, "non-finite derivative");
      } else if (rel - err > tol) {
        t.violation(tol - rel, w, "closed-form derivative disagrees with finite differences");
      } else if (rel > tol) {
        t.unresolved(w, "derivative mismatch within its error estimate");
      }
    } catch (const std::exception& e) {
      t.unresolved(w, std::string("evaluation failed: ") + e.what());
    }
  }
}

double aitken(double f0, double f1, double f2) {
  const double d1 = f1 - f0;
  const double d2 = f2 - f1;
  if (d1 == 0.0 || d2 == 0.0) return f2;
  const double ratio = d2 / d1;
  if (!(ratio > 0.0) || !(ratio < 0.95)) return f2;
  return f2 + d2 * ratio / (1.0 - ratio);
}

// Bulirsch-Stoer diagonal rational extrapolation to u = 0 through
// (us[i], fs[i]), lo <= i < hi.
double rational_at_zero(const std::vector<double>& us, const std::vector<double>& fs, std::size_t lo, std::size_t hi) {
  const std::size_t m = hi - lo;
  std::vector<double> prev2(m, 0.0);
  std::vector<double> prev(fs.begin() + static_cast<std::ptrdiff_t>(lo), fs.begin() + static_cast<std::ptrdiff_t>(hi));
  for (std::size_t k = 1; k < m; ++k) {
    std::vector<double> cur(m, nan);
    for (std::size_t i = k; i < m; ++i) {
      const double diff = prev[i] - prev[i - 1];
      const double den = prev[i] - prev2[i - 1];
      const double r = (us[lo + i - k] / us[lo + i]) * (1.0 - diff / den) - 1.0;
      cur[i] = diff == 0.0 ? prev[i] : prev[i] + diff / r;
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev[m - 1];
}

void run_endpoint(const CheckSpec& spec, const Endpoint& ep, const Point& p, Tally& t) {
  const double limit = ep.limit(p);
  const bool infinite = std::isinf(limit);
  const double lim_tol = spec.endpoint_tolerance * std::max(1.0, infinite ? 1.0 : std::abs(limit));
  std::vector<double> fs;
  std::vector<double> es;
  std::vector<double> us;
  double last_delta = ep.deltas.empty() ? nan : ep.deltas.front();
  bool reached_infinity = false;
  for (double delta : ep.deltas) {
    Args a;
    Est v;
    try {
      a = ep.locate(p, delta);
      v = spec.curve(p, a);
    } catch (const std::exception& e) {
      if (fs.empty()) t.note(ep.label + ": " + e.what());
      break;
    }
    ++t.samples;
    if (!std::isfinite(v.v)) {
      if (infinite && v.v == limit) reached_infinity = true;
      break;
    }
    if (!infinite && !(v.e <= 0.1 * lim_tol)) break;
    fs.push_back(v.v);
    es.push_back(v.e);
    us.push_back(1.0 / std::abs(std::log(delta)));
    last_delta = delta;
  }
  Point w = p;
  w.set("endpoint:" + ep.label, last_delta);
  const std::size_t n = fs.size();

  if (infinite) {
    const double sign = limit > 0.0 ? 1.0 : -1.0;
    if (reached_infinity && (n == 0 || sign * fs.back() > 0.0)) {
      t.margin(inf, w);
      return;
    }
    if (n < 3) {
      t.unresolved(w, ep.label + ": too few samples to judge divergence");
      return;
    }
    const double d1 = sign * (fs[n - 2] - fs[n - 3]);
    const double d2 = sign * (fs[n - 1] - fs[n - 2]);
    const double e2 = es[n - 1] + es[n - 2];
    const double growth = d1 > 0.0 ? d2 / d1 : nan;
    t.margin(std::isnan(growth) ? -inf : growth - 0.9, w);
    if (d2 > e2 && d1 > 0.0 && growth >= 0.9) return;
    if (d2 < -e2 || (d1 > 0.0 && growth < 0.6)) {
      t.violation(growth - 0.9, w, ep.label + ": increments decay, sequence appears bounded");
    } else {
      t.unresolved(w, ep.label + ": divergence not resolved");
    }
    return;
  }

  if (n == 0) {
    t.unresolved(w, ep.label + ": no usable samples");
    return;
  }
  double est = fs.back();
  double err = es.back();
  // Increment ratios near 1/2 under squaring deltas mean a tail in powers of
  // 1/log(1/delta): rational extrapolation in that variable. Other steady
  // ratios in (0, 0.95) get Aitken. Otherwise the last sample stands, with
  // its last increment as the error.
  bool geometric = false;
  bool logarithmic = false;
  if (ep.extrapolate && n >= 4) {
    const double r1 = (fs[n - 1] - fs[n - 2]) / (fs[n - 2] - fs[n - 3]);
    const double r0 = (fs[n - 2] - fs[n - 3]) / (fs[n - 3] - fs[n - 4]);
    geometric = r1 > 0.0 && r1 < 0.95 && r0 > 0.0 && r0 < 0.95 && std::abs(r1 / r0 - 1.0) < 0.5;
    logarithmic = geometric && std::abs(r1 - 0.5) < 0.15 && std::abs(r0 - 0.5) < 0.2;
  }
  if (logarithmic) {
    const std::size_t m = std::min<std::size_t>(n, 5);
    const double e_hi = rational_at_zero(us, fs, n - m, n);
    const double e_lo = rational_at_zero(us, fs, n - m + 1, n);
    logarithmic = std::isfinite(e_hi) && std::isfinite(e_lo);
    if (logarithmic) {
      est = e_hi;
      err += std::abs(e_hi - e_lo);
    }
  }
  if (!logarithmic && geometric) {
    const double a1 = aitken(fs[n - 3], fs[n - 2], fs[n - 1]);
    const double a0 = aitken(fs[n - 4], fs[n - 3], fs[n - 2]);
    est = a1;
    err += std::abs(a1 - a0);
  } else if (!logarithmic && n >= 2) {
    err += std::abs(fs[n - 1] - fs[n - 2]);
  }
  const double diff = std::abs(est - limit);
  t.margin(lim_tol - diff, w);
  if (diff <= lim_tol) return;
  if (diff - err > lim_tol) {
    t.violation(lim_tol - diff, w,
                ep.label + ": limit estimate " + std::to_string(est) + " vs expected " + std::to_string(limit));
  } else {
    t.unresolved(w, ep.label + ": limit not resolved within tolerance");
  }
}

}  // namespace

CheckReport run_check(const CheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = spec.id;
  rep.paper_anchor = spec.paper_anchor;
  rep.kind = spec.kind;
  rep.gating = spec.gating;
  Tally t;
  try {
    spec.validate();
    const bool has_shapes = !spec.shapes.empty() || static_cast<bool>(spec.shapes_for);
    const bool needs_args = spec.kind != Kind::limit && (spec.kind != Kind::range_endpoints || has_shapes);
    const auto xs = needs_args ? arg_points(spec.arg_grid) : std::vector<Args>{};
    for (Point p : points(spec.param_grid)) {
      if (spec.expand) spec.expand(p);
      if (spec.admissible && !spec.admissible(p)) continue;
      if (spec.kind == Kind::derivative_match) {
        run_derivatives(spec, p, xs, t);
      } else if (needs_args) {
        run_shapes(spec, p, xs, t);
      }
      for (const auto& ep : spec.endpoints) {
        if (ep.applies && !ep.applies(p)) continue;
        run_endpoint(spec, ep, p, t);
      }
    }
  } catch (const std::exception& e) {
    t.unresolved(Point{}, std::string("check aborted: ") + e.what());
  }

  if (t.violated) {
    rep.verdict = Verdict::fail;
    rep.worst_margin = t.worst_violation;
    rep.witness = t.violation_point;
  } else {
    const bool strict_short =
        t.strict_total > 0 && static_cast<double>(t.strict_ok) < spec.strict_fraction * static_cast<double>(t.strict_total);
    if (t.samples == 0) t.note("no admissible samples");
    rep.verdict = (t.unresolved_hard || strict_short || t.samples == 0) ? Verdict::inconclusive : Verdict::pass;
    if (strict_short) {
      t.note("strict deltas resolved at " + std::to_string(t.strict_ok) + " of " + std::to_string(t.strict_total) +
             " pairs");
    }
    rep.worst_margin = t.worst;
    rep.witness = t.worst_point;
  }
  rep.samples = t.samples;
  rep.observed_min = t.obs_min <= t.obs_max ? t.obs_min : nan;
  rep.observed_max = t.obs_min <= t.obs_max ? t.obs_max : nan;
  for (const auto& n : t.notes) {
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += n;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& specs, unsigned threads) {
  std::vector<CheckReport> out(specs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) out[i] = run_check(specs[i]);
  };
  std::vector<std::future<void>> pool;
  for (unsigned k = 0; k < threads; ++k) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return out;
}

}  // namespace genellip::verify
