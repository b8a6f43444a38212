#pragma once

// Gaussian hypergeometric function 2F1(a,b;c;z) for real parameters and
// real z in [0,1).
//
// Below z_switch the Maclaurin series is summed directly. Above it the
// evaluation moves to the (1-z) side:
//   a+b == c  logarithmic (zero-balanced) expansion,
//   a+b >  c  Euler transform to the a+b < c regime,
//   a+b <  c  Gauss connection formula in powers of (1-z), with the
//             logarithmic limit form when c-a-b is an integer.
// Every argument carries 1-z explicitly, e.g. 1-z = r'^2 with tiny r'.

#include "genellip/errors.hpp"
#include "genellip/eval_result.hpp"

namespace genellip {

inline constexpr double z_switch = 0.75;
inline constexpr double max_hyp_parameter = 50.0;
inline constexpr double zero_balanced_tol = 1e-12;

/// Parameter triple with 0 < a,b,c <= 50.
class HypParams {
 public:
  HypParams(double a, double b, double c);
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  bool zero_balanced() const;

 private:
  double a_, b_, c_;
};

/// z in [0,1) together with 1-z.
class Argument {
 public:
  Argument(double z);  // NOLINT(google-explicit-constructor)
  /// Both halves supplied by the caller, e.g. z = r^2 and 1-z = r'^2.
  Argument(double z, double z_comp);
  static Argument from_complement(double z_comp);

  double z() const { return z_; }
  double z_comp() const { return z_comp_; }
  /// The reflected argument 1-z.
  Argument reflected() const { return Argument(z_comp_, z_); }

 private:
  double z_, z_comp_;
};

enum class Shift { a_plus, a_minus, b_plus, c_plus };

EvalResult hyp2f1(const HypParams& p, const Argument& z);

/// Logarithmic expansion around z = 1 for a+b = c. Requires z >= z_switch.
EvalResult hyp2f1_zero_balanced_near_one(const HypParams& p, const Argument& z);

/// (1-z)^{c-a-b} F(c-a, c-b; c; z). Requires c-a > 0 and c-b > 0.
EvalResult euler_transform(const HypParams& p, const Argument& z);

/// F(a+1,b;c;z), F(a-1,b;c;z), F(a,b+1;c;z) or F(a,b;c+1;z).
EvalResult contiguous_shift(const HypParams& p, Shift which, const Argument& z);

/// dF/dz = (ab/c) F(a+1,b+1;c+1;z).
EvalResult hyp2f1_dz(const HypParams& p, const Argument& z);

namespace detail {

/// Unchecked evaluator for real a, b (no poles among a+n, b+n needed for
/// the series; a may lie in (-1,0] as in F(a-1,b;c;z)) and c > 0.
EvalResult hyp2f1_real(double a, double b, double c, double z, double z_comp);

/// log F for F > 0; the power (1-z)^{c-a-b} of the Euler transform stays in
/// the log so the result is finite even when F itself overflows.
double log_hyp2f1_real(double a, double b, double c, double z, double z_comp);

/// Plain Maclaurin sum, no regime switching.
EvalResult maclaurin_series(double a, double b, double c, double z);

}  // namespace detail

}  // namespace genellip
