#pragma once

// Sampling lattices for parameters and arguments.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genellip::verify {

enum class Scale { linear, log, logit, list };

std::string_view to_string(Scale s);

/// One axis. For Scale::list the samples are `values` and lo/hi/count mirror them.
struct Dim {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int count = 3;
  Scale scale = Scale::linear;
  std::vector<double> values;

  static Dim range(std::string name, double lo, double hi, int count, Scale scale);
  static Dim list(std::string name, std::vector<double> values);
  void validate() const;
};

/// Parses "lo:hi:count:scale" (scale one of linear, log, logit).
Dim parse_dim(std::string name, std::string_view text);

/// A sample x together with 1-x. On a logit axis both halves are computed
/// without cancellation, so x close to 1 keeps its distance to 1 exactly.
struct Arg {
  double x = 0.0;
  double comp = 1.0;
};

inline Arg arg(double x) { return {x, 1.0 - x}; }

std::vector<Arg> samples(const Dim& d);

struct GridSpec {
  std::vector<Dim> dims;

  std::size_t size() const;
  void validate() const;
};

/// Named coordinates of one lattice point.
class Point {
 public:
  Point() = default;
  void set(std::string name, double v);
  double operator[](std::string_view name) const;
  bool has(std::string_view name) const;
  const std::vector<std::pair<std::string, double>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, double>> items_;
};

std::vector<Point> points(const GridSpec& g);

/// Cartesian product of the argument axes, one Arg per axis.
std::vector<std::vector<Arg>> arg_points(const GridSpec& g);

}  // namespace genellip::verify
