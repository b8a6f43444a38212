#pragma once

#include <cmath>
#include <limits>
#include <string_view>

namespace genellip {

enum class Method {
  series,
  recurrence_shift,
  asymptotic,
  reflection,
  transform_near_one,
  closed_form,
};

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::recurrence_shift: return "recurrence_shift";
    case Method::asymptotic: return "asymptotic";
    case Method::reflection: return "reflection";
    case Method::transform_near_one: return "transform_near_one";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

/// Value of a special-function evaluation with an absolute error estimate.
///
/// An endpoint where the function diverges (e.g. K(1)) is reported with
/// value == +infinity; `infinite()` is the marker callers test.
struct EvalResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  Method method = Method::series;

  bool infinite() const { return std::isinf(value); }
  double rel_err_est() const {
    return value == 0.0 ? abs_err_est : abs_err_est / std::abs(value);
  }

  static EvalResult infinity(Method m = Method::closed_form) {
    return {std::numeric_limits<double>::infinity(), 0.0, m};
  }
};

}  // namespace genellip
