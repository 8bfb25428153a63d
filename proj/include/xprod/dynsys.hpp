#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xprod {

using Point = std::size_t;
using Degree = std::int64_t;
// Sorted, duplicate-free list of points.
using PointSet = std::vector<Point>;

/*
 * A finite set X = {0, ..., size-1} with a bijection sigma.
 *
 * X carries the discrete topology. Every topological notion is evaluated
 * under that convention, in one place:
 *   - interior(S) = S and closure(S) = S for every S;
 *   - S is dense iff S == X;
 *   - every point is isolated (so no point is ever "non-isolated");
 *   - "open set" means "any subset".
 */
class DynSystem {
public:
  // Throws StructuralError if sigma is not a bijection of {0..n-1}; the message
  // names the first duplicated or out-of-range image.
  explicit DynSystem(std::vector<Point> sigma);

  // {"points": N, "sigma": [...]}
  static DynSystem from_json(const std::string& text);
  std::string to_json() const;

  static DynSystem identity(std::size_t n);
  static DynSystem cycle(std::size_t n);

  std::size_t size() const noexcept { return sigma_.size(); }
  const std::vector<Point>& sigma() const noexcept { return sigma_; }
  const std::vector<Point>& sigma_inv() const noexcept { return sigma_inv_; }

  Point apply(Point x) const { return sigma_[x]; }
  Point apply_inv(Point x) const { return sigma_inv_[x]; }
  // sigma^k(x) for any integer k, in O(1) via the cycle decomposition.
  Point power(Point x, Degree k) const;

  std::size_t orbit_length(Point x) const { return orbits_[orbit_of_[x]].size(); }
  std::size_t orbit_index(Point x) const { return orbit_of_[x]; }
  // Cycles of sigma, each starting at its smallest point and listed in sigma order,
  // ordered by smallest point.
  const std::vector<std::vector<Point>>& orbits() const noexcept { return orbits_; }

  PointSet all_points() const;

  friend bool operator==(const DynSystem& a, const DynSystem& b) { return a.sigma_ == b.sigma_; }

private:
  std::vector<Point> sigma_;
  std::vector<Point> sigma_inv_;
  std::vector<std::vector<Point>> orbits_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> pos_in_orbit_;
};

// {x : sigma^n(x) = x}; n != 0 (DomainError otherwise).
PointSet per_n(const DynSystem& sys, Degree n);
// {x : sigma^n(x) != x}; n != 0.
PointSet sep_n(const DynSystem& sys, Degree n);
// Points moved by every nonzero power. Every orbit of a finite system is
// finite, so x is fixed by sigma^(orbit length): the result is always empty.
PointSet per_infinity(const DynSystem& sys);
std::vector<PointSet> orbits(const DynSystem& sys);

struct DynamicsPredicates {
  bool minimal = false;
  bool topologically_transitive = false;
};

// For a finite discrete system, every orbit is closed; an orbit is dense iff it
// is all of X. Both predicates therefore reduce to "exactly one orbit".
DynamicsPredicates dynamics_predicates(const DynSystem& sys);

// Least positive n with Per^n(X) != {} (the smallest orbit length).
Degree least_period(const DynSystem& sys);
// Least common multiple of all orbit lengths (sigma^lcm == id).
Degree order(const DynSystem& sys);

// Set helpers on sorted point lists.
bool is_invariant(const DynSystem& sys, const PointSet& s);
PointSet set_image(const DynSystem& sys, const PointSet& s, Degree k);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
bool set_contains(const PointSet& s, Point x);
bool is_subset(const PointSet& a, const PointSet& b);
PointSet normalize_set(std::vector<Point> s);

} // namespace xprod
