#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genellip/cli.hpp"
#include "oracle/mp_oracle.hpp"

using oracle::mpf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "genellip");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = genellip::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double leading_value(const std::string& text) { return std::stod(text); }

struct Row {
  double x, v, e;
};

std::vector<Row> csv_rows(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Row r{};
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &r.x, &r.v, &r.e) == 3);
    rows.push_back(r);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("genellip_test_" + name)).string();
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("eval") {
  auto m = run({"eval", "M", "--a", "0.5", "--b", "0.5", "--c", "1", "--z", "0.3"});
  CHECK(m.code == 0);
  CHECK(std::abs(leading_value(m.out) - std::numbers::inv_pi) < 1e-11);

  auto u = run({"eval", "mu", "--a", "0.5", "--c", "1", "--r", "0.70710678"});
  CHECK(u.code == 0);
  CHECK(std::abs(leading_value(u.out) - std::numbers::pi / 2) < 1e-8);
  const double mu_ref = oracle::d(oracle::classical_mu(mpf("0.70710678")));
  CHECK(std::abs(leading_value(u.out) - mu_ref) < 1e-11);

  auto k = run({"eval", "K", "--a", "0.5", "--b", "0.5", "--c", "1", "--r", "0.70710678", "--format", "csv"});
  CHECK(k.code == 0);
  const auto rows = csv_rows(k.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].v - oracle::d(oracle::ellip_k(mpf("0.70710678")))) < 1e-14);
  CHECK(std::abs(rows[0].v - 1.8540746773) < 2e-9);

  auto j = run({"eval", "gamma", "--z", "0.5", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(std::abs(doc["value"].get<double>() - std::sqrt(std::numbers::pi)) < 1e-14);

  auto b = run({"eval", "beta", "--a", "0.5", "--b", "0.5"});
  CHECK(b.code == 0);
  CHECK(std::abs(leading_value(b.out) - std::numbers::pi) < 1e-11);

  auto r = run({"eval", "R", "--a", "0.5", "--b", "0.5"});
  CHECK(r.code == 0);
  CHECK(std::abs(leading_value(r.out) - 4 * std::numbers::ln2) < 1e-11);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "K", "--a", "0.5", "--b", "0.5", "--c", "1", "--r", "1.5"}).code == 2);
  CHECK(run({"eval", "nosuch", "--a", "0.5"}).code == 2);
  CHECK(run({"eval", "K", "--a", "0.5", "--c", "1"}).code == 2);
  CHECK(run({"eval", "hyp2f1", "--a", "0.5", "--b", "0.5", "--c", "1", "--z", "1.2"}).code == 2);
  CHECK(run({"verify", "no-such-check"}).code == 4);
  CHECK(run({"verify", "legendre-relation"}).code == 0);
  CHECK(run({"verify", "legendre-relation", "--tol", "1e-30"}).code == 1);

#ifndef _WIN32
  ::setenv("GENELLIP_MAX_ITERS", "1", 1);
  const auto starved = run({"invert", "--a", "0.3", "--c", "0.8", "--y", "2"});
  ::unsetenv("GENELLIP_MAX_ITERS");
  CHECK(starved.code == 3);
  CHECK(run({"invert", "--a", "0.3", "--c", "0.8", "--y", "2"}).code == 0);
#endif
}

TEST_CASE("invert, phi and solve") {
  const auto inv = run({"invert", "--a", "0.5", "--c", "1", "--y", "1.5707963267948966"});
  CHECK(inv.code == 0);
  CHECK(std::abs(leading_value(inv.out) - std::sqrt(0.5)) < 1e-12);

  const auto ph = run({"phi", "--a", "0.3", "--c", "0.8", "--K", "2", "--r", "0.5"});
  const auto so = run({"solve", "--a", "0.3", "--c", "0.8", "--p", "0.5", "--r", "0.5"});
  CHECK(ph.code == 0);
  CHECK(so.code == 0);
  CHECK(ph.out == so.out);
  const double s = leading_value(ph.out);
  CHECK(s > std::sqrt(0.5));
  CHECK(s < 1.0);
}

TEST_CASE("tabulate") {
  const auto mu = run({"tabulate", "mu", "--a", "0.3", "--c", "0.8", "--grid", "0.05:0.95:9:linear"});
  CHECK(mu.code == 0);
  CHECK(mu.out.rfind("# mu,", 0) == 0);
  const auto mrows = csv_rows(mu.out);
  CHECK(mrows.size() == 9);
  for (std::size_t i = 1; i < mrows.size(); ++i) CHECK(mrows[i].v < mrows[i - 1].v);

  const auto m = run({"tabulate", "M", "--a", "0.3", "--b", "0.5", "--c", "0.9", "--grid", "0.01:0.99:21:logit"});
  CHECK(m.code == 0);
  const auto rows = csv_rows(m.out);
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& mirror = rows[rows.size() - 1 - i];
    CHECK(std::abs(rows[i].x + mirror.x - 1.0) < 1e-15);
    CHECK(std::abs(rows[i].v - mirror.v) <= 1e-11 * rows[i].v);
  }

  const auto ph = run({"tabulate", "phi", "--a", "0.3", "--c", "0.8", "--K", "2", "--grid", "0.001:0.999:33:logit"});
  CHECK(ph.code == 0);
  const auto prow = csv_rows(ph.out);
  REQUIRE(prow.size() == 33);
  for (std::size_t i = 1; i < prow.size(); ++i) CHECK(prow[i].v > prow[i - 1].v);

  CHECK(run({"tabulate", "mu", "--a", "0.3", "--c", "0.8", "--grid", "0.9:0.1:9:linear"}).code == 2);
  CHECK(run({"tabulate", "mu", "--a", "0.3", "--c", "0.8", "--grid", "nonsense"}).code == 2);

  const auto again = run({"tabulate", "phi", "--a", "0.3", "--c", "0.8", "--K", "2", "--grid", "0.001:0.999:33:logit"});
  CHECK(again.out == ph.out);
}

TEST_CASE("verify reports") {
  const auto path = temp_path("single.json");
  const auto one = run({"verify", "mutheorem-1", "--out", path});
  CHECK(one.code == 0);
  const auto doc = read_json(path);
  REQUIRE(doc["checks"].size() == 1);
  const auto& c = doc["checks"][0];
  CHECK(c["id"] == "mutheorem-1");
  CHECK(c["verdict"] == "pass");
  for (const char* key : {"paper_anchor", "worst_margin", "witness", "samples", "seconds"}) CHECK(c.contains(key));
  CHECK(doc.contains("run_id"));
  CHECK(doc.contains("timestamp"));

  const auto conj_path = temp_path("conj.json");
  const auto conj = run({"verify", "conjectures", "--non-gating", "--out", conj_path});
  CHECK(conj.code == 0);
  const auto cdoc = read_json(conj_path);
  CHECK(cdoc["checks"].size() >= 2);
  for (const auto& e : cdoc["checks"]) CHECK(e["gating"] == false);

  const auto p1 = temp_path("det1.json"), p2 = temp_path("det2.json");
  CHECK(run({"verify", "ktheo-1", "mudepc", "--out", p1}).code == 0);
  CHECK(run({"verify", "ktheo-1", "mudepc", "--out", p2}).code == 0);
  auto d1 = read_json(p1), d2 = read_json(p2);
  CHECK(d1["run_id"] == d2["run_id"]);
  for (auto* d : {&d1, &d2}) {
    d->erase("timestamp");
    for (auto& e : (*d)["checks"]) e.erase("seconds");
  }
  CHECK(d1.dump() == d2.dump());

  const auto list = run({"list-checks"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') >= 40);

  for (const auto& p : {path, conj_path, p1, p2}) std::filesystem::remove(p);
}
