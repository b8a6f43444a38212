#pragma once

#include <functional>

namespace genellip::verify {

struct FiniteDiff {
  double first = 0.0;
  double second = 0.0;
  double first_err = 0.0;
  double second_err = 0.0;
};

/// Central first and second differences at steps h, h/2, h/4, combined by
/// two Richardson levels. Samples stay inside [x-h, x+h] (within the
/// documented [x-2h, x+2h] envelope). `f_rel_err` is the relative accuracy
/// of f itself and feeds the rounding part of the error estimate.
FiniteDiff finite_diff(const std::function<double(double)>& f, double x, double h, double f_rel_err = 0.0);

}  // namespace genellip::verify
