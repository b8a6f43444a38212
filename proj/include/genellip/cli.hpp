#pragma once

#include <ostream>

namespace genellip::cli {

/// Exit codes: 0 ok, 1 gating check not passed, 2 domain/parameter/usage
/// error, 3 convergence failure, 4 unknown check id.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genellip::cli
