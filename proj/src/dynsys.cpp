#include "xprod/dynsys.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "xprod/errors.hpp"

namespace xprod {

DynSystem::DynSystem(std::vector<Point> sigma) : sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw StructuralError("system must have at least one point");
  constexpr Point kUnset = static_cast<Point>(-1);
  sigma_inv_.assign(n, kUnset);
  for (Point x = 0; x < n; ++x) {
    Point y = sigma_[x];
    if (y >= n) {
      throw StructuralError("sigma(" + std::to_string(x) + ") = " + std::to_string(y) + " is out of range [0, " +
                            std::to_string(n) + ")");
    }
    if (sigma_inv_[y] != kUnset) {
      throw StructuralError("sigma is not a bijection: image " + std::to_string(y) + " is hit by both " +
                            std::to_string(sigma_inv_[y]) + " and " + std::to_string(x));
    }
    sigma_inv_[y] = x;
  }
  orbit_of_.assign(n, kUnset);
  pos_in_orbit_.assign(n, 0);
  for (Point start = 0; start < n; ++start) {
    if (orbit_of_[start] != kUnset) continue;
    std::vector<Point> cyc;
    for (Point x = start; orbit_of_[x] == kUnset; x = sigma_[x]) {
      orbit_of_[x] = orbits_.size();
      pos_in_orbit_[x] = cyc.size();
      cyc.push_back(x);
    }
    orbits_.push_back(std::move(cyc));
  }
}

DynSystem DynSystem::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed system JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("sigma")) {
    throw ParseError("system JSON must be an object with \"points\" and \"sigma\"");
  }
  if (!j["points"].is_number_unsigned()) throw ParseError("\"points\" must be a non-negative integer");
  if (!j["sigma"].is_array()) throw ParseError("\"sigma\" must be an array");
  const auto n = j["points"].get<std::size_t>();
  std::vector<Point> sigma;
  for (const auto& v : j["sigma"]) {
    if (!v.is_number_unsigned()) throw ParseError("\"sigma\" entries must be non-negative integers");
    sigma.push_back(v.get<Point>());
  }
  if (sigma.size() != n) {
    throw StructuralError("\"points\" is " + std::to_string(n) + " but \"sigma\" has " + std::to_string(sigma.size()) +
                          " entries");
  }
  return DynSystem(std::move(sigma));
}

std::string DynSystem::to_json() const {
  nlohmann::json j;
  j["points"] = size();
  j["sigma"] = sigma_;
  return j.dump();
}

DynSystem DynSystem::identity(std::size_t n) {
  std::vector<Point> s(n);
  std::iota(s.begin(), s.end(), Point{0});
  return DynSystem(std::move(s));
}

DynSystem DynSystem::cycle(std::size_t n) {
  std::vector<Point> s(n);
  for (Point x = 0; x < n; ++x) s[x] = (x + 1) % n;
  return DynSystem(std::move(s));
}

Point DynSystem::power(Point x, Degree k) const {
  const auto& cyc = orbits_[orbit_of_[x]];
  const auto len = static_cast<Degree>(cyc.size());
  Degree p = (static_cast<Degree>(pos_in_orbit_[x]) + k % len) % len;
  if (p < 0) p += len;
  return cyc[static_cast<std::size_t>(p)];
}

PointSet DynSystem::all_points() const {
  PointSet s(size());
  std::iota(s.begin(), s.end(), Point{0});
  return s;
}

PointSet per_n(const DynSystem& sys, Degree n) {
  if (n == 0) throw DomainError("Per^n is defined for nonzero n only");
  PointSet out;
  for (Point x = 0; x < sys.size(); ++x) {
    if (n % static_cast<Degree>(sys.orbit_length(x)) == 0) out.push_back(x);
  }
  return out;
}

PointSet sep_n(const DynSystem& sys, Degree n) {
  if (n == 0) throw DomainError("Sep^n is defined for nonzero n only");
  return set_difference(sys.all_points(), per_n(sys, n));
}

PointSet per_infinity(const DynSystem&) { return {}; }

std::vector<PointSet> orbits(const DynSystem& sys) {
  std::vector<PointSet> out;
  for (const auto& cyc : sys.orbits()) out.push_back(normalize_set(cyc));
  return out;
}

DynamicsPredicates dynamics_predicates(const DynSystem& sys) {
  const bool one = sys.orbits().size() == 1;
  return {one, one};
}

Degree least_period(const DynSystem& sys) {
  std::size_t best = sys.size();
  for (const auto& cyc : sys.orbits()) best = std::min(best, cyc.size());
  return static_cast<Degree>(best);
}

Degree order(const DynSystem& sys) {
  Degree l = 1;
  for (const auto& cyc : sys.orbits()) l = std::lcm(l, static_cast<Degree>(cyc.size()));
  return l;
}

bool is_invariant(const DynSystem& sys, const PointSet& s) { return set_image(sys, s, 1) == s; }

PointSet set_image(const DynSystem& sys, const PointSet& s, Degree k) {
  std::vector<Point> img;
  img.reserve(s.size());
  for (Point x : s) img.push_back(sys.power(x, k));
  return normalize_set(std::move(img));
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const PointSet& s, Point x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

PointSet normalize_set(std::vector<Point> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

} // namespace xprod
