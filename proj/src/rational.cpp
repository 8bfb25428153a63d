#include "xprod/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <utility>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  while (b != 0) {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

u128 gcd128(u128 a, u128 b) {
  // Most operands fit a machine word; stay there when possible.
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 m = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

} // namespace

Rational::Rational(std::int64_t n) noexcept : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    big_ = std::make_unique<mpq_class>(to_mpz(n), 1);
    num_ = 0;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    assign_wide(-static_cast<i128>(num), -static_cast<i128>(den));
  } else {
    assign_wide(num, den);
  }
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  assign_big(mpq_class(num, den));
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

void Rational::copy_big(const Rational& other) { big_ = std::make_unique<mpq_class>(*other.big_); }

void Rational::assign_wide(i128 num, i128 den) {
  if (num == 0) {
    big_.reset();
    num_ = 0;
    den_ = 1;
    return;
  }
  if (uabs(num) <= static_cast<u128>(kMax) && den <= kMax) {
    // 64-bit division is far cheaper than the 128-bit library call
    auto n = static_cast<std::int64_t>(num);
    auto d = static_cast<std::int64_t>(den);
    const auto g =
        d == 1 ? 1 : static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(std::llabs(n)), static_cast<std::uint64_t>(d)));
    big_.reset();
    num_ = g > 1 ? n / g : n;
    den_ = g > 1 ? d / g : d;
    return;
  }
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (uabs(num) <= static_cast<u128>(kMax) && static_cast<u128>(den) <= static_cast<u128>(kMax)) {
    big_.reset();
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  auto q = std::make_unique<mpq_class>();
  q->get_num() = to_mpz(num);
  q->get_den() = to_mpz(den);
  big_ = std::move(q);
  num_ = 0;
  den_ = 1;
}

void Rational::assign_big(mpq_class q) {
  q.canonicalize();
  if (fits(q.get_num()) && fits(q.get_den())) {
    big_.reset();
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::string s(text);
  auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, std::size_t base, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) throw ParseError("missing digits in rational literal", base + i);
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw ParseError("unexpected character in rational literal", base + i);
    }
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_digits(num, 0, true);
  check_digits(den, slash == std::string::npos ? 0 : slash + 1, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational literal", slash + 1);
  return Rational(n, d);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  q.get_num() = static_cast<long>(num_);
  q.get_den() = static_cast<long>(den_);
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = numerator(), d = denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  if (big_) {
    r.assign_big(1 / *big_);
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_wide(static_cast<i128>(num_) + rhs.num_, 1);
    } else {
      assign_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_wide(static_cast<i128>(num_) - rhs.num_, 1);
    } else {
      assign_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    // Cross-cancel first so the products stay small.
    std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(std::llabs(num_)), static_cast<std::uint64_t>(rhs.den_));
    std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(std::llabs(rhs.num_)), static_cast<std::uint64_t>(den_));
    i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (rhs.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (rhs.den_ / static_cast<std::int64_t>(g1));
    assign_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

// Inline-only fast path for *this +- a * b; false when a wider type is needed.
bool Rational::fused(const Rational& a, const Rational& b, bool negate) {
  if (big_ || a.big_ || b.big_) return false;
  const std::uint64_t g1 =
      b.den_ == 1 ? 1 : gcd64(static_cast<std::uint64_t>(std::llabs(a.num_)), static_cast<std::uint64_t>(b.den_));
  const std::uint64_t g2 =
      a.den_ == 1 ? 1 : gcd64(static_cast<std::uint64_t>(std::llabs(b.num_)), static_cast<std::uint64_t>(a.den_));
  i128 pn = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) * (b.num_ / static_cast<std::int64_t>(g2));
  const i128 pd = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) * (b.den_ / static_cast<std::int64_t>(g1));
  if (negate) pn = -pn;
  if (uabs(pn) > static_cast<u128>(kMax) || pd > kMax) return false;
  if (pd == den_) {
    assign_wide(static_cast<i128>(num_) + pn, pd);
  } else {
    assign_wide(static_cast<i128>(num_) * pd + pn * den_, static_cast<i128>(den_) * pd);
  }
  return true;
}

Rational& Rational::add_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  if (!fused(a, b, false)) *this += a * b;
  return *this;
}

Rational& Rational::sub_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  if (!fused(a, b, true)) *this -= a * b;
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false; // canonical: a big value never equals an inline one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const noexcept {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace xprod
