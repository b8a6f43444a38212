#pragma once

// Legendre M-function
//   M(a,b,c,z) = z(1-z)(v1 dv/dz - v dv1/dz),  v = F(a,b;c;z), v1 = v(1-z),
// evaluated through the contiguous form
//   M = (c-a)(u v1 + u1 v) + (2(a-c)+b) v v1,  u = F(a-1,b;c;z), u1 = u(1-z).

#include <optional>

#include "genellip/elliptic.hpp"
#include "genellip/eval_result.hpp"
#include "genellip/hypergeom.hpp"

namespace genellip {

struct MPoint {
  MPoint(double a, double b, double c, double z);
  MPoint(double a, double b, double c, const Argument& z);

  double a, b, c;
  double z, z_comp;
};

EvalResult m_value(const MPoint& pt);

/// M(r^2) from (B/2)^2 M = (a+b-c) K K' + (c-a)(K E' + K' E - K K').
EvalResult m_value_elliptic(const EllipticParams& p, const Modulus& m);

/// dM/dz in closed form.
EvalResult m_deriv(const MPoint& pt);

/// Exact M when a = c, b = c or a+b+1 = 2c (relations tested to 1e-12).
std::optional<EvalResult> m_closed_form(const MPoint& pt);

/// (z(1-z))^{a+b-c} M(z); bounded on (0,1) when a+b > c.
EvalResult m_bounded_factor(const MPoint& pt);

/// Limit of m_bounded_factor at z = 0 for a+b > c: (a+b-c) B(c,a+b-c) / B(a,b).
double m_bounded_factor_at_zero(double a, double b, double c);

}  // namespace genellip
