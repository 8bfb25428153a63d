#pragma once

#include <cstddef>
#include <utility>
#include <vector>
#include <optional>
#include <string>

#include "xprod/dynsys.hpp"
#include "xprod/func.hpp"
#include "xprod/subspace.hpp"

namespace xprod {

/*
 * A finitely supported element sum_n f_n d^n of the crossed product C^X x| Z.
 * Terms are kept sorted by degree and zero coefficients are pruned eagerly, so
 * num_terms() is the honest count of nonzero coefficients.
 */
class CrossedElement {
public:
  using Terms = std::vector<std::pair<Degree, Func>>; // strictly increasing degrees

  explicit CrossedElement(std::size_t points = 0) : points_(points) {}

  static CrossedElement zero(std::size_t points) { return CrossedElement(points); }
  static CrossedElement one(std::size_t points) { return monomial(Func::one(points), 0); }
  static CrossedElement monomial(Func f, Degree d);
  // c * e_x d^k
  static CrossedElement point_monomial(std::size_t points, Point x, Degree k, const Scalar& c = Scalar(1));

  std::size_t points() const noexcept { return points_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  // Zero function when the degree is absent.
  Func coeff(Degree d) const;
  Degree min_degree() const; // requires nonzero
  Degree max_degree() const; // requires nonzero
  bool supported_in(const DegreeWindow& w) const;

  // Adds f d^d, pruning if the result is zero.
  void add_term(Degree d, const Func& f);
  void add_term(Degree d, Func&& f);

  CrossedElement operator-() const;
  CrossedElement& operator+=(const CrossedElement& rhs);
  CrossedElement& operator-=(const CrossedElement& rhs);
  CrossedElement& operator*=(const Scalar& c);

  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  friend CrossedElement operator*(const Scalar& c, CrossedElement a) { return a *= c; }
  friend CrossedElement operator*(CrossedElement a, const Scalar& c) { return a *= c; }

  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;

private:
  Terms::iterator slot(Degree d);
  template <class F>
  void merge_term(Degree d, F&& f);

  std::size_t points_;
  Terms terms_;
};

// Twisted convolution: (F*G)(n) = sum_k F(k) . sigma~^k(G(n-k)).
CrossedElement conv(const DynSystem& sys, const CrossedElement& f, const CrossedElement& g);
// F*G - G*F
CrossedElement commutator(const DynSystem& sys, const CrossedElement& f, const CrossedElement& g);

// c e_x d^i * G without a general convolution: the result is supported on x only.
CrossedElement mul_point_mass_left(const DynSystem& sys, Point x, Degree i, const CrossedElement& g);
// G * e_y d^j: the degree-m term lands on the single point sigma^m(y).
CrossedElement mul_point_mass_right(const DynSystem& sys, const CrossedElement& g, Point y, Degree j);

// Commutant test via the support description: every coefficient f_n (n != 0)
// vanishes off Per^n(X). Degree 0 is unconstrained.
bool in_commutant(const DynSystem& sys, const CrossedElement& f);

// Every coefficient of F lies in B's slice at its degree.
bool in_graded(const GradedSubspace& b, const CrossedElement& f);

// The commutant A' materialized on `window`: degree n -> span{e_x : x in Per^n}, degree 0 -> C^X.
GradedSubspace commutant_window(const DynSystem& sys, DegreeWindow window);

struct MaximalAbelianVerdict {
  bool maximal_abelian = false;
  std::optional<Degree> witness_n; // some n > 0 with Per^n != {} when not maximal abelian
  PointSet witness_points;         // Per^witness_n
  std::string explanation;
};

// A is maximal abelian iff Sep^n(X) is a domain of uniqueness for all n != 0, i.e.
// (finite discrete case) Sep^n = X for every n. It suffices to scan n = 1..order(sigma):
// Per^n depends only on which orbit lengths divide n. On a non-empty finite system
// the answer is always "no", witnessed by the least period.
MaximalAbelianVerdict is_maximal_abelian(const DynSystem& sys);

} // namespace xprod
