#pragma once

// For 0 < a < c and t >= 0:
//   P(a,c,t) = Psi(c-a+t) - Psi(c+t)
//   A        = (c-a,t)/(c,t) = Gamma(c-a+t) Gamma(c) / (Gamma(c+t) Gamma(c-a))
//   A~       = (a,t) A
//   B_t      = P(a,c,t) - P(a,c,0)

namespace genellip::verify {

struct PABNotation {
  double a, c, t;
  double P;
  double A;
  double A_tilde;
  double B_t;
};

PABNotation pab(double a, double c, double t);

}  // namespace genellip::verify
