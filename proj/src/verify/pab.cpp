#include "genellip/verify/pab.hpp"

#include <cmath>
#include <string>

#include "genellip/scalar_special.hpp"

namespace genellip::verify {

PABNotation pab(double a, double c, double t) {
  if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(t) || !(a > 0.0) || !(a < c) || !(t >= 0.0)) {
    throw domain_error("pab needs 0 < a < c and t >= 0");
  }
  PABNotation n{a, c, t, 0.0, 1.0, 1.0, 0.0};
  n.P = digamma(c - a + t).value - digamma(c + t).value;
  if (t == 0.0) return n;
  const double log_a = gamma_ln(c - a + t).value + gamma_ln(c).value - gamma_ln(c + t).value -
                       gamma_ln(c - a).value;
  n.A = std::exp(log_a);
  n.A_tilde = appell_ext(a, t).value * n.A;
  const double p0 = digamma(c - a).value - digamma(c).value;
  n.B_t = n.P - p0;
  return n;
}

}  // namespace genellip::verify
