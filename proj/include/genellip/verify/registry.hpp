#pragma once

// The catalog of numerical checks over the library's functions.

#include <optional>
#include <string_view>
#include <vector>

#include "genellip/verify/check.hpp"

namespace genellip::verify {

/// Built once, ids unique. Conjecture entries have gating = false.
const std::vector<CheckSpec>& registry();

const CheckSpec* find_check(std::string_view id);

/// Replaces the range of the first argument axis (name kept) and/or the tolerance.
CheckSpec with_overrides(CheckSpec spec, const std::optional<Dim>& grid, const std::optional<double>& tol);

}  // namespace genellip::verify
