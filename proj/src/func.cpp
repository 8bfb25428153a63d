#include "xprod/func.hpp"

#include <algorithm>
#include <string>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

void check_sizes(const Func& a, const Func& b) {
  if (a.size() != b.size()) {
    throw StructuralError("function length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

} // namespace

Func Func::point_mass(std::size_t n, Point x) {
  if (x >= n) throw SemanticError("point e" + std::to_string(x) + " does not exist on " + std::to_string(n) + " points");
  Func f(n);
  f.values_[x] = Scalar(1);
  return f;
}

Func Func::indicator(std::size_t n, const PointSet& s) {
  Func f(n);
  for (Point x : s) f.values_.at(x) = Scalar(1);
  return f;
}

bool Func::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Func Func::operator-() const {
  Func out(*this);
  for (auto& v : out.values_) v = -v;
  return out;
}

Func& Func::operator+=(const Func& rhs) {
  check_sizes(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!rhs.values_[i].is_zero()) values_[i] += rhs.values_[i];
  }
  return *this;
}

Func& Func::operator-=(const Func& rhs) {
  check_sizes(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!rhs.values_[i].is_zero()) values_[i] -= rhs.values_[i];
  }
  return *this;
}

Func& Func::operator*=(const Func& rhs) {
  check_sizes(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    if (rhs.values_[i].is_zero()) {
      values_[i] = Scalar();
    } else {
      values_[i] *= rhs.values_[i];
    }
  }
  return *this;
}

Func& Func::operator*=(const Scalar& c) {
  for (auto& v : values_) {
    if (!v.is_zero()) v *= c;
  }
  return *this;
}

Func sigma_action(const DynSystem& sys, const Func& f, Degree k) {
  if (f.size() != sys.size()) throw StructuralError("function does not live on this system");
  if (k == 0) return f;
  Func out(f.size());
  for (Point y = 0; y < f.size(); ++y) out[y] = f[sys.power(y, -k)];
  return out;
}

PointSet support(const Func& f) {
  PointSet s;
  for (Point x = 0; x < f.size(); ++x) {
    if (!f[x].is_zero()) s.push_back(x);
  }
  return s;
}

bool is_domain_of_uniqueness(const DynSystem& sys, const PointSet& s) {
  if (s.empty()) return false;
  return s.size() == sys.size();
}

} // namespace xprod
