#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "xprod/rational.hpp"

namespace xprod {

// Gaussian rational re + im*i. All coefficients of the workbench live here.
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t re) : re_(re) {} // NOLINT
  Scalar(Rational re) : re_(std::move(re)) {} // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(0, 1); }

  // Standalone literal: "3", "-1/2", "2i", "-i", "1/2+3/4i", "1/2 - 3/4*i", "1/2+3/4 i".
  static Scalar parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  Scalar conj() const { return {re_, -im_}; }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const; // throws DomainError on zero
  Scalar pow(std::int64_t k) const;

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& add_product(const Scalar& a, const Scalar& b); // *this += a * b
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  // Lexicographic on (re, im); a total order for canonical sorting, not a field order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  // Canonical literal, e.g. "3", "-1/2", "2i", "1/2+3/4i". Always re-parseable by parse().
  std::string to_string() const;
  // True when to_string() has a single part (so it needs no parentheses inside an expression).
  bool is_simple() const noexcept { return re_.is_zero() || im_.is_zero(); }
  std::size_t hash() const noexcept;

private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Unit-modulus Gaussian rational: re^2 + im^2 == 1 exactly.
class UnitScalar {
public:
  explicit UnitScalar(Scalar value); // throws DomainError if not unit modulus
  static UnitScalar one() { return UnitScalar(Scalar(1)); }

  const Scalar& value() const noexcept { return value_; }
  // ξ^k for any integer k; ξ^-1 == conj(ξ).
  Scalar pow(std::int64_t k) const;

  friend bool operator==(const UnitScalar&, const UnitScalar&) = default;

private:
  Scalar value_;
};

} // namespace xprod
