#pragma once

#include <stdexcept>
#include <string>

namespace genellip {

/// Argument outside the mathematical domain of a function (NaN, infinity, wrong interval).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gamma-type pole: argument is a non-positive integer.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Parameter triple violates the invariants of the requested family.
class parameter_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A regime-specific routine was called outside its regime (e.g. a+b != c).
class regime_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Iterative method (series, root finder) failed to reach its tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace genellip
