#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "xprod/dynsys.hpp"
#include "xprod/func.hpp"
#include "xprod/linalg.hpp"

namespace xprod {

// Closed degree interval [lo, hi].
struct DegreeWindow {
  Degree lo = 0;
  Degree hi = 0;

  DegreeWindow() = default;
  DegreeWindow(Degree lo_, Degree hi_); // throws PreconditionError unless lo <= hi

  std::size_t length() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
  bool contains(Degree d) const noexcept { return lo <= d && d <= hi; }
  bool contains(const DegreeWindow& w) const noexcept { return lo <= w.lo && w.hi <= hi; }

  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

// A subspace of C^X kept as a canonical (reduced echelon) basis.
class CoeffSubspace {
public:
  explicit CoeffSubspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static CoeffSubspace zero(std::size_t n) { return CoeffSubspace(n); }
  static CoeffSubspace full(std::size_t n);
  static CoeffSubspace span(std::size_t n, const std::vector<Func>& generators);
  // {f : supp(f) is a subset of s}, basis = point masses e_x for x in s.
  static CoeffSubspace of_support(std::size_t n, const PointSet& s);

  std::size_t ambient_size() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Func>& basis() const noexcept { return basis_; }

  bool contains(const Func& f) const;
  // Linear functionals (rows) whose common kernel is exactly this subspace.
  linalg::Matrix constraints() const;

  friend bool operator==(const CoeffSubspace& a, const CoeffSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  std::vector<Func> basis_;         // RREF rows
  std::vector<std::size_t> pivots_; // pivot column of each row
};

// {f : supp(f) is a subset of S}
CoeffSubspace subspace_of_support(const DynSystem& sys, const PointSet& s);

/*
 * A degree-graded family of coefficient subspaces, i.e. the subspace
 * { sum f_n d^n : f_n in slice(n) for every n } of the crossed product.
 * A rule gives the slice at every degree; explicit overrides win over the rule.
 * `window` is the degree range on which the family is materialized for reports
 * and window-restricted checks.
 */
class GradedSubspace {
public:
  using Rule = std::function<CoeffSubspace(Degree)>;

  GradedSubspace(std::size_t ambient, std::string description, Rule rule, DegreeWindow window);

  // Degree 0 carries all of A, every other degree is zero.
  static GradedSubspace coefficient_algebra(std::size_t ambient, DegreeWindow window);
  // A single degree carries `slice`, every other degree is zero.
  static GradedSubspace single_degree(std::size_t ambient, Degree d, CoeffSubspace slice, DegreeWindow window);

  void set_override(Degree d, CoeffSubspace slice);

  CoeffSubspace slice(Degree d) const;
  std::size_t ambient_size() const noexcept { return ambient_; }
  const std::string& description() const noexcept { return description_; }
  const DegreeWindow& window() const noexcept { return window_; }
  const std::map<Degree, CoeffSubspace>& overrides() const noexcept { return overrides_; }

  // dim(slice(d)) for every d in the window.
  std::map<Degree, std::size_t> slice_dims() const;
  // Slice-wise inclusion over the window.
  bool is_subspace_of(const GradedSubspace& other) const;

private:
  std::size_t ambient_;
  std::string description_;
  Rule rule_;
  std::map<Degree, CoeffSubspace> overrides_;
  DegreeWindow window_;
};

} // namespace xprod
