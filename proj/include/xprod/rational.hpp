#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace xprod {

/*
 * Exact rational number in lowest terms with positive denominator.
 *
 * Values whose numerator and denominator both fit in int64 (excluding
 * INT64_MIN) are stored inline and combined with 128-bit intermediates; anything
 * larger is promoted to a GMP rational and demoted again as soon as it fits.
 * The representation is canonical, so equality is structural.
 */
class Rational {
public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept; // NOLINT: integers convert implicitly
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) copy_big(other);
  }
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) copy_big(other);
    else big_.reset();
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Parses "n" or "n/d" with optional leading sign; d must be positive.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  // Exact square root when the value is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  Rational operator-() const;
  Rational abs() const;
  Rational inverse() const; // throws DomainError on zero

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);
  Rational& add_mul(const Rational& a, const Rational& b); // *this += a * b
  Rational& sub_mul(const Rational& a, const Rational& b); // *this -= a * b

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  std::size_t hash() const noexcept;

private:
  void assign_wide(__int128 num, __int128 den); // den > 0, not necessarily reduced
  void copy_big(const Rational& other);
  bool fused(const Rational& a, const Rational& b, bool negate);
  void assign_big(mpq_class q);                 // canonicalizes and demotes

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_; // engaged iff the value does not fit inline
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace xprod
