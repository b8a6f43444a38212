#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genellip/legendre_m.hpp"
#include "genellip/scalar_special.hpp"
#include "oracle/mp_oracle.hpp"

using namespace genellip;
using oracle::mpf;

namespace {
constexpr double pi = std::numbers::pi;
double relerr(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }
}  // namespace

TEST_CASE("classical constant") {
  for (double z : {1e-12, 1e-6, 0.01, 0.3, 0.5, 0.77, 0.99, 1 - 1e-9}) {
    CHECK(std::abs(m_value(MPoint(0.5, 0.5, 1.0, z)).value - 1 / pi) <= 1e-13);
  }
}

TEST_CASE("M(a,1-a,1) = sin(pi a)/pi") {
  for (double a = 0.05; a < 1.0; a += 0.05) {
    for (double z : {1e-8, 0.1, 0.5, 0.93}) {
      CHECK(std::abs(m_value(MPoint(a, 1 - a, 1.0, z)).value - std::sin(pi * a) / pi) <= 1e-12);
    }
  }
}

TEST_CASE("Wronskian oracle") {
  const double ref = oracle::d(oracle::m_wronskian(mpf("0.3"), mpf("0.4"), mpf("0.6"), mpf("0.37")));
  CHECK(relerr(m_value(MPoint(0.3, 0.4, 0.6, 0.37)).value, ref) < 1e-12);
  for (double a : {0.2, 0.7, 1.5}) {
    for (double b : {0.3, 0.9}) {
      for (double c : {0.4, a + b, a + b + 0.6}) {
        for (double z : {0.05, 0.3, 0.6, 0.9}) {
          const double w = oracle::d(oracle::m_wronskian(mpf(a), mpf(b), mpf(c), mpf(z)));
          INFO("a=" << a << " b=" << b << " c=" << c << " z=" << z);
          CHECK(relerr(m_value(MPoint(a, b, c, z)).value, w) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("c > a+b keeps relative accuracy near the endpoints") {
  for (double z : {0.002, 0.03, 0.2}) {
    const double w = oracle::d(oracle::m_wronskian(mpf("0.1"), mpf("0.2"), mpf("1.9"), mpf(z)));
    CHECK(relerr(m_value(MPoint(0.1, 0.2, 1.9, z)).value, w) <= 1e-12);
    CHECK(relerr(m_value(MPoint(0.1, 0.2, 1.9, Argument(z).reflected())).value, w) <= 1e-12);
  }
}

TEST_CASE("elliptic route") {
  CHECK(relerr(m_value_elliptic(EllipticParams(0.5, 0.5, 1.0), 0.5).value, 1 / pi) < 1e-13);
  const EllipticParams p(0.4, 0.6, 0.8);
  CHECK(relerr(m_value_elliptic(p, 1 / std::sqrt(2.0)).value, m_value(MPoint(0.4, 0.6, 0.8, 0.5)).value) < 1e-12);
  CHECK(relerr(m_value_elliptic(EllipticParams(0.4, 0.4, 0.7), 0.3).value,
               m_value(MPoint(0.4, 0.4, 0.7, 0.09)).value) <= 1e-9);
}

TEST_CASE("derivative") {
  CHECK(std::abs(m_deriv(MPoint(0.5, 0.5, 1.0, 0.3)).value) < 1e-13);
  for (const auto& t : {std::array{0.3, 0.5, 0.7}, std::array{0.6, 0.8, 0.9}, std::array{0.2, 0.9, 1.5}}) {
    CHECK(std::abs(m_deriv(MPoint(t[0], t[1], t[2], 0.5)).value) < 1e-12 * m_value(MPoint(t[0], t[1], t[2], 0.5)).value);
    CHECK(relerr(m_deriv(MPoint(t[0], t[1], t[2], 0.2)).value, -m_deriv(MPoint(t[0], t[1], t[2], 0.8)).value) < 1e-11);
  }
  const double h = 1e-5;
  for (double z : {0.1, 0.25, 0.6, 0.9}) {
    const double fd = (m_value(MPoint(0.3, 0.5, 0.7, z + h)).value - m_value(MPoint(0.3, 0.5, 0.7, z - h)).value) / (2 * h);
    CHECK(relerr(m_deriv(MPoint(0.3, 0.5, 0.7, z)).value, fd) <= 1e-7);
  }
}

TEST_CASE("closed forms") {
  const auto c1 = m_closed_form(MPoint(0.6, 0.4, 0.6, 0.3));
  REQUIRE(c1.has_value());
  CHECK(relerr(c1->value, 0.4 * std::pow(0.21, -0.4)) < 1e-14);
  CHECK(relerr(m_value(MPoint(0.6, 0.4, 0.6, 0.3)).value, c1->value) < 1e-12);

  const auto c2 = m_closed_form(MPoint(0.3, 0.5, 0.9, 0.5));
  REQUIRE(c2.has_value());
  const double d = std::pow(genellip::gamma(0.9).value, 2) / (genellip::gamma(0.3).value * genellip::gamma(0.5).value);
  CHECK(relerr(c2->value, d * std::pow(0.25, 0.1)) < 1e-13);
  CHECK(relerr(m_value(MPoint(0.3, 0.5, 0.9, 0.5)).value, c2->value) < 1e-12);

  const auto c3 = m_closed_form(MPoint(0.5, 0.5, 1.0, 0.7));
  REQUIRE(c3.has_value());
  CHECK(relerr(c3->value, 1 / pi) < 1e-14);

  const auto c4 = m_closed_form(MPoint(0.4, 0.9, 0.8, 0.7));  // b = c is false, a+b+1 = 2.3 != 1.6
  CHECK_FALSE(c4.has_value());
  const auto c5 = m_closed_form(MPoint(0.4, 0.8, 0.8, 0.7));
  REQUIRE(c5.has_value());
  CHECK(relerr(c5->value, m_value(MPoint(0.4, 0.8, 0.8, 0.7)).value) < 1e-12);
}

TEST_CASE("symmetry M(x) = M(1-x)") {
  for (double a : {0.1, 0.4, 0.9, 2.0}) {
    for (double b : {0.2, 0.7, 1.6}) {
      for (double c : {0.3, 0.8, a + b, 1.9}) {
        for (double x : {1e-9, 1e-4, 0.01, 0.049, 0.051, 0.2, 0.45}) {
          const double m = m_value(MPoint(a, b, c, x)).value;
          const double n = m_value(MPoint(a, b, c, Argument(x).reflected())).value;
          INFO("a=" << a << " b=" << b << " c=" << c << " x=" << x);
          CHECK(std::abs(m - n) <= 1e-11 * m);
        }
      }
    }
  }
}

TEST_CASE("endpoint behaviour") {
  // a+b = c: M(0+) = 1/B(a,b).
  for (const auto& t : {std::array{0.3, 0.5}, std::array{0.7, 0.2}}) {
    const double lim = 1 / beta(t[0], t[1]).value;
    CHECK(relerr(m_value(MPoint(t[0], t[1], t[0] + t[1], 1e-12)).value, lim) < 1e-9);
  }
  // a+b > c: unbounded near 0.
  double prev = 0.0;
  for (int k = 2; k <= 14; ++k) {
    const double v = m_value(MPoint(0.6, 0.7, 0.9, std::pow(10.0, -k))).value;
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 1e4);
  // the bounded factor tends to (a+b-c) B(c,a+b-c)/B(a,b).
  const double f0 = m_bounded_factor_at_zero(0.6, 0.7, 0.9);
  CHECK(relerr(m_bounded_factor(MPoint(0.6, 0.7, 0.9, 1e-12)).value, f0) < 1e-6);
  CHECK_THROWS_AS(m_bounded_factor_at_zero(0.3, 0.3, 0.9), regime_error);
}

TEST_CASE("lower bound ab/c for a+b >= c") {
  for (double a : {0.1, 0.5, 0.9}) {
    for (double b : {0.2, 0.6, 1.0}) {
      for (double c : {0.25, 0.6, 0.95}) {
        if (a + b < c) continue;
        for (double z = 0.01; z < 1.0; z += 0.07) CHECK(m_value(MPoint(a, b, c, z)).value > a * b / c);
      }
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(MPoint(0.5, 0.5, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(MPoint(0.5, 0.5, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(MPoint(0.0, 0.5, 1.0, 0.5), parameter_error);
  CHECK_THROWS_AS(m_value_elliptic(EllipticParams(0.5, 0.5, 1.0), 1.0), domain_error);
}
