#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "genellip/verify/check.hpp"

namespace genellip::verify {

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view text);

nlohmann::json to_json(const CheckReport& r);

/// {run_id, timestamp, checks: [...]}; run_id hashes `invocation`.
nlohmann::json report_json(const std::vector<CheckReport>& reports, std::string_view invocation,
                           const std::string& timestamp);

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace genellip::verify
