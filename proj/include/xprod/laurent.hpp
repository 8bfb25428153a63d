#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/scalar.hpp"

namespace xprod {

// Element of C[t, 1/t]. Zero coefficients are never stored.
class LaurentPoly {
public:
  using Coeffs = std::map<std::int64_t, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(const Scalar& c) { add_term(0, c); } // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const Scalar& c, std::int64_t k);
  static LaurentPoly t() { return monomial(Scalar(1), 1); }
  // t - alpha
  static LaurentPoly linear(const Scalar& alpha);

  const Coeffs& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  Scalar coeff(std::int64_t k) const;
  std::int64_t min_exp() const; // requires nonzero
  std::int64_t max_exp() const;

  void add_term(std::int64_t k, const Scalar& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;

private:
  Coeffs c_;
};

enum class LaurentOp { add, mul };
LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op);

// sum c_k alpha^k; DomainError at alpha = 0.
Scalar eval(const LaurentPoly& p, const Scalar& alpha);

// The ideal (t - a_1)...(t - a_n) C[t, 1/t]; roots nonzero, n >= 1.
struct RootIdeal {
  std::vector<Scalar> roots;

  explicit RootIdeal(std::vector<Scalar> r); // DomainError on empty list or zero root
  LaurentPoly generator() const;
};

// Divisibility by prod (t - a_i), multiplicities included. 0 is a member.
bool root_ideal_member(const RootIdeal& ideal, const LaurentPoly& p);

struct TrichotomyWitness {
  LaurentPoly value;              // prod (f - f(a_i))
  std::vector<Scalar> shifts;     // f(a_i)
  std::vector<Scalar> poly_in_f;  // value = sum_k poly_in_f[k] f^k
};

// DomainError when f is constant.
TrichotomyWitness trichotomy_witness(const LaurentPoly& f, const RootIdeal& ideal);
// Recomputes sum_k q_k f^k.
LaurentPoly evaluate_in(const std::vector<Scalar>& q, const LaurentPoly& f);

// One-point system: f_n d^n <-> f_n t^n.
LaurentPoly to_laurent(const CrossedElement& f);
CrossedElement from_laurent(const LaurentPoly& p);

} // namespace xprod
