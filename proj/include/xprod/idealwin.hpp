#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/linalg.hpp"
#include "xprod/subspace.hpp"

namespace xprod {

// Which multiplier product of a generator g a spanning vector came from.
struct ProductLabel {
  enum class Kind { bare, left, right, two_sided };

  std::size_t generator = 0;
  Kind kind = Kind::bare;
  Point x = 0;  // left multiplier e_x d^i (left, two_sided)
  Degree i = 0;
  Point y = 0;  // right multiplier e_y d^j (right, two_sided)
  Degree j = 0;

  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
};

// Basis element = sum of coefficient * product(label).
using ProductCertificate = std::vector<std::pair<Scalar, ProductLabel>>;

/*
 * A finite-dimensional subspace of the crossed product restricted to a degree
 * window, stored as a canonical reduced-echelon basis over the coordinates
 * (degree - lo) * |X| + point. Used as a sound under-approximation of the
 * part of a two-sided ideal that lives inside the window: anything in the span
 * is certainly in the ideal; absence only means "not found in this window".
 */
class SubspaceWindow {
public:
  SubspaceWindow(DynSystem sys, DegreeWindow window);
  // Canonicalizes the span of `elements` (each must be supported in the window).
  static SubspaceWindow span(const DynSystem& sys, DegreeWindow window, const std::vector<CrossedElement>& elements);
  // Every element supported in the window.
  static SubspaceWindow full(const DynSystem& sys, DegreeWindow window);
  // Canonicalizes the span of raw coordinate rows.
  static SubspaceWindow from_rows(const DynSystem& sys, DegreeWindow window, linalg::Matrix rows);
  // A graded family (e.g. A, A', B, Ker(S)) restricted to the window.
  static SubspaceWindow of_graded(const DynSystem& sys, DegreeWindow window, const GradedSubspace& b);

  const DynSystem& system() const noexcept { return sys_; }
  const DegreeWindow& window() const noexcept { return window_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return window_.length() * sys_.size(); }
  std::vector<CrossedElement> basis() const;
  const linalg::Matrix& rows() const noexcept { return rows_; }

  bool contains(const CrossedElement& f) const; // requires support in window
  bool is_subspace_of(const SubspaceWindow& other) const;
  // dim of the part of the span living purely in degree d.
  std::size_t slice_dim(Degree d) const;
  std::map<Degree, std::size_t> slice_dims() const;

  // Set only for windows built by generate_ideal_window.
  const std::vector<CrossedElement>& generators() const noexcept { return generators_; }
  const std::vector<ProductCertificate>& certificates() const noexcept { return certificates_; }

  linalg::Vec to_coords(const CrossedElement& f) const;
  CrossedElement from_coords(const linalg::Vec& v) const;

  friend bool operator==(const SubspaceWindow& a, const SubspaceWindow& b) {
    return a.window_ == b.window_ && a.sys_ == b.sys_ && a.rows_ == b.rows_;
  }

private:
  friend SubspaceWindow generate_ideal_window(const DynSystem&, const std::vector<CrossedElement>&, DegreeWindow,
                                              DegreeWindow);
  void set_rows(linalg::Matrix rows); // canonicalizes

  DynSystem sys_;
  DegreeWindow window_;
  linalg::Matrix rows_;
  std::vector<std::size_t> pivots_;
  std::vector<CrossedElement> generators_;
  std::vector<ProductCertificate> certificates_;
};

// Span of g, e_x d^i * g, g * e_y d^j and e_x d^i * g * e_y d^j over all generators,
// points x, y and i, j in mult_window, keeping the products supported inside target.
// Each basis element keeps a certificate expressing it through those products.
SubspaceWindow generate_ideal_window(const DynSystem& sys, const std::vector<CrossedElement>& generators,
                                     DegreeWindow mult_window, DegreeWindow target);

// Rebuilds one multiplier product with plain twisted convolution.
CrossedElement realize_product(const DynSystem& sys, const std::vector<CrossedElement>& generators,
                               const ProductLabel& label);
// Recomputes every certificate by convolution and compares with the basis.
bool verify_certificates(const SubspaceWindow& ideal);

enum class Membership { yes, not_in_window };
// PreconditionError if F is not supported in the window.
Membership membership(const SubspaceWindow& ideal, const CrossedElement& f);

// {F in span(I) : every coefficient of F lies in B's slice at its degree}
SubspaceWindow intersect_with_graded(const SubspaceWindow& ideal, const GradedSubspace& b);

// Decomposes F = sum_i (b_i d^i + b_i d^(n+i)) when possible (n >= 1). The
// telescoping system b_m = F_m - b_(m-n) has a unique finitely supported
// candidate; F is in paired form iff it terminates.
std::optional<std::map<Degree, Func>> paired_form_decompose(const CrossedElement& f, Degree n);
bool paired_form_check(const CrossedElement& f, Degree n);

} // namespace xprod
