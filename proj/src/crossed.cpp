#include "xprod/crossed.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

void check_system(const DynSystem& sys, const CrossedElement& f) {
  if (f.points() != sys.size()) {
    throw StructuralError("element over " + std::to_string(f.points()) + " points used with a system of " +
                          std::to_string(sys.size()) + " points");
  }
}

std::string set_to_string(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

} // namespace

CrossedElement CrossedElement::monomial(Func f, Degree d) {
  CrossedElement e(f.size());
  e.add_term(d, f);
  return e;
}

CrossedElement CrossedElement::point_monomial(std::size_t points, Point x, Degree k, const Scalar& c) {
  Func f = Func::point_mass(points, x);
  f *= c;
  return monomial(std::move(f), k);
}

namespace {

bool before(const std::pair<Degree, Func>& t, Degree d) { return t.first < d; }

} // namespace

CrossedElement::Terms::iterator CrossedElement::slot(Degree d) {
  return std::lower_bound(terms_.begin(), terms_.end(), d, before);
}

Func CrossedElement::coeff(Degree d) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d, before);
  return it == terms_.end() || it->first != d ? Func(points_) : it->second;
}

Degree CrossedElement::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero element");
  return terms_.front().first;
}

Degree CrossedElement::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero element");
  return terms_.back().first;
}

bool CrossedElement::supported_in(const DegreeWindow& w) const {
  return terms_.empty() || (w.contains(min_degree()) && w.contains(max_degree()));
}

template <class F>
void CrossedElement::merge_term(Degree d, F&& f) {
  if (f.size() != points_) {
    throw StructuralError("coefficient has " + std::to_string(f.size()) + " values, element has " +
                          std::to_string(points_) + " points");
  }
  if (f.is_zero()) return;
  if (terms_.empty() || terms_.back().first < d) {
    terms_.emplace_back(d, std::forward<F>(f));
    return;
  }
  auto it = slot(d);
  if (it->first != d) {
    terms_.emplace(it, d, std::forward<F>(f));
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

void CrossedElement::add_term(Degree d, const Func& f) { merge_term(d, f); }
void CrossedElement::add_term(Degree d, Func&& f) { merge_term(d, std::move(f)); }

CrossedElement CrossedElement::operator-() const {
  CrossedElement out(*this);
  for (auto& [d, f] : out.terms_) f = -f;
  return out;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& rhs) {
  if (rhs.points_ != points_) throw StructuralError("adding elements over different point sets");
  for (const auto& [d, f] : rhs.terms_) add_term(d, f);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& rhs) {
  if (rhs.points_ != points_) throw StructuralError("subtracting elements over different point sets");
  for (const auto& [d, f] : rhs.terms_) add_term(d, -f);
  return *this;
}

CrossedElement& CrossedElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, f] : terms_) f *= c;
  return *this;
}

CrossedElement conv(const DynSystem& sys, const CrossedElement& f, const CrossedElement& g) {
  check_system(sys, f);
  check_system(sys, g);
  const std::size_t n = sys.size();
  CrossedElement out(n);
  if (f.is_zero() || g.is_zero()) return out;
  // dense accumulation over the degree range of the product
  const Degree lo = f.min_degree() + g.min_degree();
  std::vector<Func> acc(static_cast<std::size_t>(f.max_degree() + g.max_degree() - lo + 1));
  std::vector<Point> src(n);
  for (const auto& [k, fk] : f.terms()) {
    for (Point x = 0; x < n; ++x) src[x] = sys.power(x, -k);
    for (const auto& [m, gm] : g.terms()) {
      Func& dst = acc[static_cast<std::size_t>(k + m - lo)];
      if (dst.size() == 0) dst = Func(n);
      for (Point x = 0; x < n; ++x) {
        if (!fk[x].is_zero()) dst[x].add_product(fk[x], gm[src[x]]);
      }
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i].size() != 0) out.add_term(lo + static_cast<Degree>(i), std::move(acc[i]));
  }
  return out;
}

CrossedElement commutator(const DynSystem& sys, const CrossedElement& f, const CrossedElement& g) {
  return conv(sys, f, g) - conv(sys, g, f);
}

CrossedElement mul_point_mass_left(const DynSystem& sys, Point x, Degree i, const CrossedElement& g) {
  check_system(sys, g);
  CrossedElement out(sys.size());
  const Point src = sys.power(x, -i);
  for (const auto& [m, gm] : g.terms()) {
    if (gm[src].is_zero()) continue;
    Func c(sys.size());
    c[x] = gm[src];
    out.add_term(i + m, c);
  }
  return out;
}

CrossedElement mul_point_mass_right(const DynSystem& sys, const CrossedElement& g, Point y, Degree j) {
  check_system(sys, g);
  CrossedElement out(sys.size());
  for (const auto& [m, gm] : g.terms()) {
    const Point at = sys.power(y, m);
    if (gm[at].is_zero()) continue;
    Func c(sys.size());
    c[at] = gm[at];
    out.add_term(m + j, c);
  }
  return out;
}

bool in_commutant(const DynSystem& sys, const CrossedElement& f) {
  check_system(sys, f);
  for (const auto& [n, fn] : f.terms()) {
    if (n == 0) continue;
    if (!is_subset(support(fn), per_n(sys, n))) return false;
  }
  return true;
}

bool in_graded(const GradedSubspace& b, const CrossedElement& f) {
  for (const auto& [n, fn] : f.terms()) {
    if (!b.slice(n).contains(fn)) return false;
  }
  return true;
}

GradedSubspace commutant_window(const DynSystem& sys, DegreeWindow window) {
  const std::size_t n = sys.size();
  return GradedSubspace(
      n, "A': degree n spanned by point masses on Per^n, degree 0 unconstrained",
      [sys](Degree d) {
        return d == 0 ? CoeffSubspace::full(sys.size()) : subspace_of_support(sys, per_n(sys, d));
      },
      window);
}

MaximalAbelianVerdict is_maximal_abelian(const DynSystem& sys) {
  MaximalAbelianVerdict v;
  const Degree ord = order(sys);
  for (Degree n = 1; n <= ord; ++n) {
    PointSet per = per_n(sys, n);
    if (per.empty()) continue;
    v.maximal_abelian = false;
    v.witness_n = n;
    v.witness_points = per;
    v.explanation = "Per^" + std::to_string(n) + " = " + set_to_string(per) + " is non-empty, so Sep^" +
                    std::to_string(n) + " != X is not a domain of uniqueness; e_" + std::to_string(per.front()) +
                    " d^" + std::to_string(n) + " lies in A' but not in A";
    return v;
  }
  // Unreachable on a non-empty finite system: sigma^order == id.
  v.maximal_abelian = true;
  v.explanation = "Sep^n = X for every n != 0";
  return v;
}

} // namespace xprod
