#include "genellip/verify/registry.hpp"

#include <set>
#include <string>

#include "genellip/errors.hpp"
#include "registry_support.hpp"

namespace genellip::verify {

namespace {

std::vector<CheckSpec> build() {
  std::vector<CheckSpec> out;
  reg::add_m_checks(out);
  reg::add_ek_checks(out);
  reg::add_modular_checks(out);
  reg::add_depc_checks(out);
  reg::add_conjectures(out);
  std::set<std::string> seen;
  for (const auto& s : out) {
    if (!seen.insert(s.id).second) throw domain_error("duplicate check id " + s.id);
    s.validate();
  }
  return out;
}

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> all = build();
  return all;
}

const CheckSpec* find_check(std::string_view id) {
  for (const auto& s : registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

CheckSpec with_overrides(CheckSpec spec, const std::optional<Dim>& grid, const std::optional<double>& tol) {
  if (grid) {
    if (spec.arg_grid.dims.empty()) throw domain_error(spec.id + ": no argument axis to override");
    Dim d = *grid;
    d.name = spec.arg_grid.dims.front().name;
    d.validate();
    spec.arg_grid.dims.front() = d;
  }
  if (tol) {
    if (!(*tol > 0.0)) throw domain_error("tolerance must be positive");
    spec.tolerance = *tol;
  }
  return spec;
}

}  // namespace genellip::verify
