#include "xprod/subspace.hpp"

#include "xprod/errors.hpp"

namespace xprod {

DegreeWindow::DegreeWindow(Degree lo_, Degree hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw PreconditionError("empty degree window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

CoeffSubspace CoeffSubspace::full(std::size_t n) {
  CoeffSubspace s(n);
  for (Point x = 0; x < n; ++x) {
    s.basis_.push_back(Func::point_mass(n, x));
    s.pivots_.push_back(x);
  }
  return s;
}

CoeffSubspace CoeffSubspace::span(std::size_t n, const std::vector<Func>& generators) {
  linalg::Matrix rows;
  for (const auto& g : generators) {
    if (g.size() != n) throw StructuralError("generator length does not match ambient size");
    rows.push_back(g.values());
  }
  CoeffSubspace s(n);
  s.pivots_ = linalg::rref(rows);
  for (auto& r : rows) s.basis_.emplace_back(std::move(r));
  return s;
}

CoeffSubspace CoeffSubspace::of_support(std::size_t n, const PointSet& pts) {
  CoeffSubspace s(n);
  for (Point x : pts) {
    s.basis_.push_back(Func::point_mass(n, x));
    s.pivots_.push_back(x);
  }
  return s;
}

bool CoeffSubspace::contains(const Func& f) const {
  if (f.size() != ambient_) throw StructuralError("function length does not match ambient size");
  linalg::Matrix basis;
  for (const auto& b : basis_) basis.push_back(b.values());
  return linalg::coordinates_in_rref(basis, pivots_, f.values()).has_value();
}

linalg::Matrix CoeffSubspace::constraints() const {
  linalg::Matrix basis;
  for (const auto& b : basis_) basis.push_back(b.values());
  return linalg::nullspace(basis, ambient_);
}

CoeffSubspace subspace_of_support(const DynSystem& sys, const PointSet& s) {
  for (Point x : s) {
    if (x >= sys.size()) throw StructuralError("point " + std::to_string(x) + " is not in the system");
  }
  return CoeffSubspace::of_support(sys.size(), normalize_set(s));
}

GradedSubspace::GradedSubspace(std::size_t ambient, std::string description, Rule rule, DegreeWindow window)
    : ambient_(ambient), description_(std::move(description)), rule_(std::move(rule)), window_(window) {}

GradedSubspace GradedSubspace::coefficient_algebra(std::size_t ambient, DegreeWindow window) {
  return GradedSubspace(
      ambient, "A: degree 0 unconstrained, zero elsewhere",
      [ambient](Degree d) { return d == 0 ? CoeffSubspace::full(ambient) : CoeffSubspace::zero(ambient); }, window);
}

GradedSubspace GradedSubspace::single_degree(std::size_t ambient, Degree d, CoeffSubspace slice,
                                             DegreeWindow window) {
  return GradedSubspace(
      ambient, "single degree " + std::to_string(d),
      [ambient, d, slice](Degree k) { return k == d ? slice : CoeffSubspace::zero(ambient); }, window);
}

void GradedSubspace::set_override(Degree d, CoeffSubspace slice) {
  if (slice.ambient_size() != ambient_) throw StructuralError("override slice has the wrong ambient size");
  overrides_.insert_or_assign(d, std::move(slice));
}

CoeffSubspace GradedSubspace::slice(Degree d) const {
  if (auto it = overrides_.find(d); it != overrides_.end()) return it->second;
  return rule_(d);
}

std::map<Degree, std::size_t> GradedSubspace::slice_dims() const {
  std::map<Degree, std::size_t> out;
  for (Degree d = window_.lo; d <= window_.hi; ++d) out[d] = slice(d).dim();
  return out;
}

bool GradedSubspace::is_subspace_of(const GradedSubspace& other) const {
  for (Degree d = window_.lo; d <= window_.hi; ++d) {
    CoeffSubspace mine = slice(d);
    CoeffSubspace theirs = other.slice(d);
    for (const auto& b : mine.basis()) {
      if (!theirs.contains(b)) return false;
    }
  }
  return true;
}

} // namespace xprod
