#pragma once

// Generalized complete elliptic integrals
//   K_{a,b,c}(r) = (B(a,b)/2) F(a,b;c;r^2),
//   E_{a,b,c}(r) = (B(a,b)/2) F(a-1,b;c;r^2),
// their complements K'(r) = K(r'), E'(r) = E(r'), and closed-form derivatives.

#include "genellip/eval_result.hpp"
#include "genellip/hypergeom.hpp"

namespace genellip {

/// 0 < a < min(c,1), 0 < b < c <= a+b.
class EllipticParams {
 public:
  EllipticParams(double a, double b, double c);
  /// The b = c - a family with 0 < a < c <= 1.
  static EllipticParams from_ac(double a, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  /// B(a,b)
  double beta() const { return beta_; }

 private:
  struct Unchecked {};
  EllipticParams(double a, double b, double c, Unchecked);
  double a_, b_, c_, beta_;
};

/// Modulus r in [0,1] with its complement r' = sqrt(1-r^2) kept separately.
class Modulus {
 public:
  Modulus(double r);  // NOLINT(google-explicit-constructor)
  /// Caller-supplied pair, for r close to 1 where 1-r^2 would cancel.
  Modulus(double r, double r_comp);
  /// r = sqrt(e^x/(1+e^x)), r' = sqrt(1/(1+e^x)); both computed without cancellation.
  static Modulus from_logit(double x);

  double r() const { return r_; }
  double r_comp() const { return r_comp_; }
  Modulus complement() const { return Modulus(r_comp_, r_); }
  /// z = r^2 paired with 1-z = r'^2.
  Argument squared() const;

 private:
  double r_, r_comp_;
};

EvalResult ell_k(const EllipticParams& p, const Modulus& m);
EvalResult ell_e(const EllipticParams& p, const Modulus& m);
EvalResult ell_k_comp(const EllipticParams& p, const Modulus& m);
EvalResult ell_e_comp(const EllipticParams& p, const Modulus& m);

/// E(1) = B(a,b) B(c,c+1-a-b) / (2 B(c+1-a,c-b)).
double ell_e_at_one(const EllipticParams& p);

struct EllipticDerivatives {
  double dK_dr;
  double dE_dr;
  double dKmE_dr;    // d(K - E)/dr
  double dEmr2K_dr;  // d(E - r'^2 K)/dr
};

/// Requires 0 < r < 1.
EllipticDerivatives ell_derivatives(const EllipticParams& p, const Modulus& m);

/// arth(r) = atanh(r), evaluated as log((1+r)/r') to stay accurate near r = 1.
double arth(const Modulus& m);

}  // namespace genellip
