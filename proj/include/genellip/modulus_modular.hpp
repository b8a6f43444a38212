#pragma once

// Generalized modulus mu(r) = (B(a,b)/2) F(a,b;c;r'^2) / F(a,b;c;r^2),
// its inverse, and the modular function phi_K(r) = mu^{-1}(mu(r)/K).

#include "genellip/elliptic.hpp"
#include "genellip/eval_result.hpp"

namespace genellip {

/// a, b, c > 0 with a+b >= c.
class ModulusParams {
 public:
  ModulusParams(double a, double b, double c);
  /// b = c - a with 0 < a < c (c may exceed 1 for the dependence-on-c results).
  static ModulusParams from_ac(double a, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double beta() const { return beta_; }
  /// True for b = c - a with 0 < a < c <= 1.
  bool ac_family() const;

 private:
  double a_, b_, c_, beta_;
};

/// K > 0; the modular degree is p = 1/K.
class DegreeK {
 public:
  DegreeK(double K);  // NOLINT(google-explicit-constructor)
  double K() const { return K_; }
  double p() const { return 1.0 / K_; }

 private:
  double K_;
};

inline constexpr double min_degree_K = 1e-3;
inline constexpr double max_degree_K = 1e3;

EvalResult mu(const ModulusParams& p, double r);
EvalResult mu(const ModulusParams& p, const Modulus& m);
double log_mu(const ModulusParams& p, const Modulus& m);

/// Solution r of mu(r) = y.
double mu_inv(const ModulusParams& p, double y);

struct Solution {
  double value = 0.0;   // s
  double value_comp = 0.0;  // s' = sqrt(1 - s^2)
  bool saturated = false;
  int iterations = 0;
  Modulus modulus() const { return Modulus(value, value_comp); }
};

/// Root of log mu(s) = log_y in the logit coordinate x = log(s^2/s'^2).
Solution mu_inv_log(const ModulusParams& p, double log_y);

/// s = mu^{-1}(mu(r)/K). K outside [1e-3, 1e3], or a root beyond the
/// representable range, returns s in {0, 1} with saturated = true.
Solution phi_k(const ModulusParams& p, DegreeK K, double r);
Solution phi_k(const ModulusParams& p, DegreeK K, const Modulus& m);

/// s with mu(s) = degree_p * mu(r).
Solution modular_solve(const ModulusParams& p, double degree_p, double r);

EvalResult mu_deriv(const ModulusParams& p, double r);
EvalResult phi_deriv(const ModulusParams& p, DegreeK K, double r);

/// The a+b+1 = 2c forms:
///   dmu/dr = -D / (r^{2c-1} r'^{2c} K(r)^2),  D = (Ga Gb Gc)^2 / (4 G(a+b)^3),
///   ds/dr  = (1/K) (s/r)^{2c-1} (s'/r')^{2c} (K(s)/K(r))^2.
EvalResult mu_deriv_power_case(const ModulusParams& p, double r);
EvalResult phi_deriv_power_case(const ModulusParams& p, DegreeK K, double r);

/// Iteration budget for the inverse; GENELLIP_MAX_ITERS overrides the default 200.
int solver_max_iterations();

/// p(x) = 2 log(x/x') on (0,1) and its inverse q(x) = sqrt(e^x/(1+e^x)).
double logit_p(double x);
double logit_p(const Modulus& m);
Modulus logit_q(double x);

}  // namespace genellip
