#include "genellip/verify/grid.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "genellip/errors.hpp"

namespace genellip::verify {

std::string_view to_string(Scale s) {
  switch (s) {
    case Scale::linear: return "linear";
    case Scale::log: return "log";
    case Scale::logit: return "logit";
    case Scale::list: return "list";
  }
  return "linear";
}

Dim Dim::range(std::string name, double lo, double hi, int count, Scale scale) {
  Dim d;
  d.name = std::move(name);
  d.lo = lo;
  d.hi = hi;
  d.count = count;
  d.scale = scale;
  d.validate();
  return d;
}

Dim Dim::list(std::string name, std::vector<double> values) {
  Dim d;
  d.name = std::move(name);
  d.scale = Scale::list;
  d.values = std::move(values);
  d.count = static_cast<int>(d.values.size());
  if (!d.values.empty()) {
    d.lo = d.values.front();
    d.hi = d.values.back();
  }
  d.validate();
  return d;
}

void Dim::validate() const {
  if (scale == Scale::list) {
    if (values.empty()) throw domain_error("grid axis '" + name + "' has no values");
    for (double v : values) {
      if (!std::isfinite(v)) throw domain_error("grid axis '" + name + "' has a non-finite value");
    }
    return;
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw domain_error("grid axis '" + name + "' needs lo < hi");
  }
  if (count < 3) throw domain_error("grid axis '" + name + "' needs at least 3 points");
  if (scale == Scale::log && !(lo > 0.0)) throw domain_error("log axis '" + name + "' needs lo > 0");
  if (scale == Scale::logit && !(lo > 0.0 && hi < 1.0)) {
    throw domain_error("logit axis '" + name + "' must lie inside (0,1)");
  }
}

namespace {

double parse_number(std::string_view s, const std::string& name) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw domain_error("bad number '" + std::string(s) + "' in grid for '" + name + "'");
  }
  return v;
}

}  // namespace

Dim parse_dim(std::string name, std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) throw domain_error("grid must be lo:hi:count:scale, got '" + std::string(text) + "'");
  const double lo = parse_number(parts[0], name);
  const double hi = parse_number(parts[1], name);
  const double cnt = parse_number(parts[2], name);
  if (cnt != std::floor(cnt) || cnt > 1e6) throw domain_error("grid count must be an integer");
  Scale scale;
  if (parts[3] == "linear") {
    scale = Scale::linear;
  } else if (parts[3] == "log") {
    scale = Scale::log;
  } else if (parts[3] == "logit") {
    scale = Scale::logit;
  } else {
    throw domain_error("grid scale must be linear, log or logit, got '" + std::string(parts[3]) + "'");
  }
  return Dim::range(std::move(name), lo, hi, static_cast<int>(cnt), scale);
}

std::vector<Arg> samples(const Dim& d) {
  d.validate();
  std::vector<Arg> out;
  if (d.scale == Scale::list) {
    for (double v : d.values) out.push_back(arg(v));
    return out;
  }
  const int n = d.count;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    switch (d.scale) {
      case Scale::linear: {
        const double x = i == n - 1 ? d.hi : d.lo + t * (d.hi - d.lo);
        out.push_back(arg(x));
        break;
      }
      case Scale::log: {
        const double x = i == n - 1 ? d.hi : std::exp(std::log(d.lo) + t * (std::log(d.hi) - std::log(d.lo)));
        out.push_back(arg(i == 0 ? d.lo : x));
        break;
      }
      case Scale::logit: {
        const double ulo = std::log(d.lo) - std::log1p(-d.lo);
        const double uhi = std::log(d.hi) - std::log1p(-d.hi);
        const double u = ulo + t * (uhi - ulo);
        out.push_back({1.0 / (1.0 + std::exp(-u)), 1.0 / (1.0 + std::exp(u))});
        break;
      }
      case Scale::list: break;
    }
  }
  return out;
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const auto& d : dims) n *= static_cast<std::size_t>(d.scale == Scale::list ? d.values.size() : d.count);
  return dims.empty() ? 0 : n;
}

void GridSpec::validate() const {
  if (dims.empty()) throw domain_error("grid has no axes");
  for (const auto& d : dims) d.validate();
}

void Point::set(std::string name, double v) {
  for (auto& [k, val] : items_) {
    if (k == name) {
      val = v;
      return;
    }
  }
  items_.emplace_back(std::move(name), v);
}

double Point::operator[](std::string_view name) const {
  for (const auto& [k, v] : items_) {
    if (k == name) return v;
  }
  throw std::out_of_range("no coordinate named '" + std::string(name) + "'");
}

bool Point::has(std::string_view name) const {
  for (const auto& [k, v] : items_) {
    if (k == name) return true;
  }
  return false;
}

std::vector<std::vector<Arg>> arg_points(const GridSpec& g) {
  std::vector<std::vector<Arg>> out{{}};
  for (const auto& d : g.dims) {
    const auto s = samples(d);
    std::vector<std::vector<Arg>> next;
    next.reserve(out.size() * s.size());
    for (const auto& prefix : out) {
      for (const auto& a : s) {
        auto p = prefix;
        p.push_back(a);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Point> points(const GridSpec& g) {
  std::vector<Point> out;
  for (const auto& args : arg_points(g)) {
    Point p;
    for (std::size_t i = 0; i < args.size(); ++i) p.set(g.dims[i].name, args[i].x);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace genellip::verify
