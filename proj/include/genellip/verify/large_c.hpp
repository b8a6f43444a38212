#pragma once

// The b = c-a family for c far beyond the evaluator's parameter cap, used
// only for limits as c -> infinity. F(a,c-a;c;z) is summed either as its
// Maclaurin series or, when 1-z is small, as the zero-balanced logarithmic
// series in powers of 1-z, whichever needs fewer terms.

#include "genellip/verify/est.hpp"
#include "genellip/verify/grid.hpp"

namespace genellip::verify::large_c {

/// log(B(a,c-a)/2), 0 < a < c.
double log_half_beta(double a, double c);

/// F(a,c-a;c;z).
Est f(double a, double c, const Arg& z);

/// mu_{a,c}(r).
Est mu(double a, double c, const Arg& r);

/// r with mu_{a,c}(r) = x. Roots beyond the logit range +-700 saturate to 0 or 1.
Est mu_inv(double a, double c, double x);

/// K_{a,c}(r) - B/2 and B/2 - E_{a,c}(r), for 0 < a < 1 and r bounded away from 1.
Est k_minus_half_beta(double a, double c, const Arg& r);
Est half_beta_minus_e(double a, double c, const Arg& r);

}  // namespace genellip::verify::large_c
