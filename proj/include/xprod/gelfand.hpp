#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/linalg.hpp"

namespace xprod {

/*
 * Finite-dimensional commutative algebra with an automorphism, given on a basis
 * b_0..b_(d-1):
 *   b_i b_j = sum_k mul[i][j][k] b_k
 *   sigma(b_i) = sum_k sigma[i][k] b_k   (row i holds the image of b_i)
 * The constructor checks commutativity, associativity on basis triples, and that
 * sigma is invertible and multiplicative on basis pairs (StructuralError otherwise).
 */
class AbstractAlgebra {
public:
  using Tensor = std::vector<std::vector<linalg::Vec>>;

  AbstractAlgebra(Tensor mul, linalg::Matrix sigma);
  // {"dim": n, "mul": [[[c...]...]...], "sigma": [[...]]}; entries are scalar strings or integers.
  static AbstractAlgebra from_json(const std::string& text);

  std::size_t dim() const noexcept { return sigma_.size(); }
  const Tensor& mul() const noexcept { return mul_; }
  const linalg::Matrix& sigma() const noexcept { return sigma_; }

  linalg::Vec product(const linalg::Vec& a, const linalg::Vec& b) const;
  // coordinates of sigma^k(a)
  linalg::Vec apply_sigma(const linalg::Vec& a, Degree k) const;
  // matrix of b -> a b in coordinates (column j = a b_j)
  linalg::Matrix mult_operator(const linalg::Vec& a) const;
  std::optional<linalg::Vec> unit() const;
  linalg::Vec basis_vector(std::size_t i) const;

private:
  Tensor mul_;
  linalg::Matrix sigma_;
  linalg::Matrix sigma_inv_;
};

// Finitely supported sum a_n d^n with a_n given in basis coordinates.
using AbstractElement = std::map<Degree, linalg::Vec>;

// (F*G)(n) = sum_k F(k) sigma^k(G(n-k)) inside the abstract algebra.
AbstractElement abstract_conv(const AbstractAlgebra& alg, const AbstractElement& f, const AbstractElement& g);

struct GelfandData {
  AbstractAlgebra algebra;
  linalg::Matrix characters;    // row i: mu_i(b_0..b_(d-1))
  DynSystem induced_system;     // mu -> mu o sigma^-1
  linalg::Matrix transform;     // T[i][k] = mu_i(b_k), so a^ = T a
  linalg::Matrix inverse_transform;
  std::optional<linalg::Vec> separating_element; // nullopt when the fallback refinement was needed
};

/*
 * Characters by simultaneous diagonalization. First a separating element is
 * searched among c1 b_k + c2 b_l with c1, c2 in [-3, 3]; eigenvalues are exact
 * roots in Q(i) of the characteristic polynomial. When no candidate separates,
 * common eigenspaces of the basis operators are refined one basis element at a
 * time. Characters are sorted in decreasing lexicographic order of their values.
 * DomainError "not semisimple" when the trace form degenerates (nilpotents) and
 * "not split over the scalar field" when eigenvalues leave Q(i).
 */
GelfandData gelfand_transform(const AbstractAlgebra& alg);

CrossedElement transport_element(const GelfandData& gd, const AbstractElement& f);
AbstractElement transport_back(const GelfandData& gd, const CrossedElement& f);

// Coefficients c_0..c_n of det(x I - M), lowest degree first.
linalg::Vec characteristic_polynomial(const linalg::Matrix& m);
// Distinct roots in Q(i), or nullopt when the divisor search exceeds its budget.
// A polynomial with fewer roots than its degree simply yields a shorter list.
std::optional<std::vector<Scalar>> gaussian_rational_roots(const linalg::Vec& coeffs);

struct TriquivReport {
  bool per_infinity_dense = false;
  bool maximal_abelian = false;
  bool every_ideal_meets_A = false;
  bool agree = false;
  MaximalAbelianVerdict maximal_abelian_detail;
  Degree witness_n = 0;
  Point witness_point = 0;
  CrossedElement witness_generator; // e_p + e_p d^n
  DegreeWindow window;
  std::size_t ideal_window_dim = 0;
  std::size_t meets_A_dim = 0; // dim of the window part inside A
  bool paired_form_holds = false;
};

// The three equivalent properties evaluated on a finite system.
TriquivReport triquiv_report(const DynSystem& sys);
TriquivReport triquiv_report(const GelfandData& gd);

} // namespace xprod
