#pragma once

// Declarative numerical checks and the grid runner that evaluates them.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "genellip/verify/est.hpp"
#include "genellip/verify/grid.hpp"

namespace genellip::verify {

enum class Kind { monotone, convex_concave, range_endpoints, inequality, identity, derivative_match, limit };
enum class Shape {
  increasing,
  decreasing,
  convex,
  concave,
  nonnegative,
  positive,
  zero,
  somewhere_increasing,
  somewhere_decreasing,
};
enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Kind k);
std::string_view to_string(Shape s);
std::string_view to_string(Verdict v);

using Args = std::vector<Arg>;
using Curve = std::function<Est(const Point&, const Args&)>;

/// Limit of the curve as the argument approaches a boundary. The curve is
/// sampled at locate(p, delta) for each delta in turn; a finite limit is
/// extrapolated from the tail of the sequence, an infinite one (limit = +-inf)
/// judged by checking that the increments do not decay.
struct Endpoint {
  std::string label;
  std::function<Args(const Point&, double delta)> locate;
  std::function<double(const Point&)> limit;
  std::vector<double> deltas;
  bool extrapolate = true;
  std::function<bool(const Point&)> applies;
};

/// Tolerance meaning by kind:
///   monotone, convex_concave  relative noise floor added to the error estimates
///   inequality                absolute slack below zero
///   identity                  bound on |curve|
///   derivative_match          bound on the relative mismatch
///   range_endpoints           as monotone for the shapes
/// Endpoint limits use endpoint_tolerance, relative to max(1,|limit|).
struct CheckSpec {
  std::string id;
  std::string paper_anchor;
  Kind kind = Kind::monotone;
  GridSpec param_grid;
  GridSpec arg_grid;
  double tolerance = 1e-13;
  bool gating = true;

  std::vector<Shape> shapes;
  std::function<std::vector<Shape>(const Point&)> shapes_for;
  std::function<bool(const Point&)> admissible;
  std::function<void(Point&)> expand;
  Curve curve;
  Curve reference;
  std::function<double(const Point&, const Arg&)> step;
  std::vector<Endpoint> endpoints;
  double endpoint_tolerance = 1e-3;
  double strict_fraction = 0.99;

  void validate() const;
};

struct CheckReport {
  std::string id;
  std::string paper_anchor;
  Kind kind = Kind::monotone;
  bool gating = true;
  Verdict verdict = Verdict::inconclusive;
  double worst_margin = 0.0;
  Point witness;
  std::size_t samples = 0;
  double seconds = 0.0;
  double observed_min = 0.0;
  double observed_max = 0.0;
  std::string note;
};

CheckReport run_check(const CheckSpec& spec);

/// Runs the specs on up to `threads` workers (0 = hardware concurrency) and
/// returns the reports in input order.
std::vector<CheckReport> run_checks(const std::vector<CheckSpec>& specs, unsigned threads = 0);

}  // namespace genellip::verify
