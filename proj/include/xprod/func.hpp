#pragma once

#include <cstddef>
#include <vector>

#include "xprod/dynsys.hpp"
#include "xprod/scalar.hpp"

namespace xprod {

// An element of the coefficient algebra A = C^X: one scalar per point.
class Func {
public:
  Func() = default;
  explicit Func(std::size_t n) : values_(n) {}
  explicit Func(std::vector<Scalar> values) : values_(std::move(values)) {}

  static Func zero(std::size_t n) { return Func(n); }
  static Func constant(std::size_t n, const Scalar& c) { return Func(std::vector<Scalar>(n, c)); }
  static Func one(std::size_t n) { return constant(n, Scalar(1)); }
  // e_x: 1 at x, 0 elsewhere.
  static Func point_mass(std::size_t n, Point x);
  // Indicator of a point set.
  static Func indicator(std::size_t n, const PointSet& s);

  std::size_t size() const noexcept { return values_.size(); }
  const Scalar& operator[](Point x) const { return values_[x]; }
  Scalar& operator[](Point x) { return values_[x]; }
  const std::vector<Scalar>& values() const noexcept { return values_; }

  bool is_zero() const noexcept;

  Func operator-() const;
  Func& operator+=(const Func& rhs);
  Func& operator-=(const Func& rhs);
  Func& operator*=(const Func& rhs); // pointwise product
  Func& operator*=(const Scalar& c);

  friend Func operator+(Func a, const Func& b) { return a += b; }
  friend Func operator-(Func a, const Func& b) { return a -= b; }
  friend Func operator*(Func a, const Func& b) { return a *= b; }
  friend Func operator*(Func a, const Scalar& c) { return a *= c; }
  friend Func operator*(const Scalar& c, Func a) { return a *= c; }

  friend bool operator==(const Func&, const Func&) = default;

private:
  std::vector<Scalar> values_;
};

// f o sigma^(-k). k = 1 is the induced automorphism sigma~(f) = f o sigma^-1;
// it maps e_x to e_{sigma(x)}.
Func sigma_action(const DynSystem& sys, const Func& f, Degree k);

// {x : f(x) != 0}
PointSet support(const Func& f);

// For the full algebra C^X on a finite discrete space: true iff S = X.
// The empty set is never a domain of uniqueness (the notion needs a non-empty set);
// for a proper non-empty S the point mass at any x outside S vanishes on S but not on X.
bool is_domain_of_uniqueness(const DynSystem& sys, const PointSet& s);

} // namespace xprod
