#include "genellip/verify/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace genellip::verify {

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0.0 ? "inf" : "-inf";
}

}  // namespace

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [k, v] : r.witness.items()) witness[k] = number(v);
  return {
      {"id", r.id},
      {"paper_anchor", r.paper_anchor},
      {"kind", std::string(to_string(r.kind))},
      {"gating", r.gating},
      {"verdict", std::string(to_string(r.verdict))},
      {"worst_margin", number(r.worst_margin)},
      {"witness", witness},
      {"samples", r.samples},
      {"seconds", r.seconds},
      {"observed_min", number(r.observed_min)},
      {"observed_max", number(r.observed_max)},
      {"note", r.note},
  };
}

nlohmann::json report_json(const std::vector<CheckReport>& reports, std::string_view invocation,
                           const std::string& timestamp) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : reports) checks.push_back(to_json(r));
  return {{"run_id", fnv1a_hex(invocation)}, {"timestamp", timestamp}, {"checks", checks}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace genellip::verify
