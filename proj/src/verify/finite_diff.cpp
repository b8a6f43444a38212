#include "genellip/verify/finite_diff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "genellip/errors.hpp"

namespace genellip::verify {

FiniteDiff finite_diff(const std::function<double(double)>& f, double x, double h, double f_rel_err) {
  if (!std::isfinite(x) || !std::isfinite(h) || !(h > 0.0)) {
    throw domain_error("finite_diff: need finite x and h > 0");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double f0 = f(x);
  std::array<double, 3> d1{}, d2{};
  double fmax = std::abs(f0);
  for (int k = 0; k < 3; ++k) {
    const double hk = h / static_cast<double>(1 << k);
    const double fp = f(x + hk);
    const double fm = f(x - hk);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw domain_error("finite_diff: non-finite sample near x=" + std::to_string(x));
    }
    fmax = std::max({fmax, std::abs(fp), std::abs(fm)});
    d1[k] = (fp - fm) / (2.0 * hk);
    d2[k] = (fp - 2.0 * f0 + fm) / (hk * hk);
  }
  // Both differences have even error expansions in h.
  const double a1 = (4.0 * d1[1] - d1[0]) / 3.0;
  const double b1 = (4.0 * d1[2] - d1[1]) / 3.0;
  const double r1 = (16.0 * b1 - a1) / 15.0;
  const double a2 = (4.0 * d2[1] - d2[0]) / 3.0;
  const double b2 = (4.0 * d2[2] - d2[1]) / 3.0;
  const double r2 = (16.0 * b2 - a2) / 15.0;

  const double noise = (eps + f_rel_err) * fmax;
  const double h4 = h / 4.0;
  FiniteDiff out;
  out.first = r1;
  out.second = r2;
  out.first_err = std::abs(r1 - b1) + 4.0 * noise / h4;
  out.second_err = std::abs(r2 - b2) + 16.0 * noise / (h4 * h4);
  return out;
}

}  // namespace genellip::verify
