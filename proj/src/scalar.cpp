#include "xprod/scalar.hpp"

#include <cctype>
#include <ostream>

#include "xprod/errors.hpp"

namespace xprod {

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  if (!rhs.im_.is_zero()) im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  if (!rhs.im_.is_zero()) im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  re_.add_mul(a.re_, b.re_);
  if (a.im_.is_zero() && b.im_.is_zero()) return *this;
  re_.sub_mul(a.im_, b.im_);
  im_.add_mul(a.re_, b.im_);
  im_.add_mul(a.im_, b.re_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  if (im_.is_zero()) return Scalar(re_.inverse());
  Rational n = norm_sq();
  return {re_ / n, -im_ / n};
}

Scalar Scalar::pow(std::int64_t k) const {
  Scalar base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Scalar acc(1);
  while (e != 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

std::size_t Scalar::hash() const noexcept { return re_.hash() * 31 + im_.hash(); }

std::string Scalar::to_string() const {
  auto imag = [](const Rational& r) {
    if (r.is_one()) return std::string("i");
    if (r == Rational(-1)) return std::string("-i");
    return r.to_string() + "i";
  };
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag(im_);
  std::string im = imag(im_);
  return re_.to_string() + (im[0] == '-' ? "" : "+") + im;
}

namespace {

// One signed summand of a scalar literal: a real rational or an imaginary one.
struct Part {
  Rational value;
  bool imaginary = false;
};

class ScalarLexer {
public:
  explicit ScalarLexer(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }

  Part part(bool first) {
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between scalar parts", pos_);
    }
    Part p;
    if (peek() == 'i') {
      ++pos_;
      p.value = 1;
      p.imaginary = true;
    } else {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      if (start == pos_) throw ParseError("expected a number", pos_);
      p.value = Rational::parse(s_.substr(start, pos_ - start));
      if (peek() == '*' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'i') ++pos_;
      if (peek() == 'i') {
        ++pos_;
        p.imaginary = true;
      }
    }
    if (neg) p.value = -p.value;
    return p;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view body = compact;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (body.empty()) throw ParseError("empty scalar literal", 0);
  ScalarLexer lex(body);
  Part a = lex.part(true);
  Scalar out = a.imaginary ? Scalar(0, a.value) : Scalar(a.value);
  if (!lex.done()) {
    Part b = lex.part(false);
    if (b.imaginary == a.imaginary) throw ParseError("scalar literal needs one real and one imaginary part", lex.pos());
    out += b.imaginary ? Scalar(0, b.value) : Scalar(b.value);
  }
  if (!lex.done()) throw ParseError("trailing characters in scalar literal", lex.pos());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

UnitScalar::UnitScalar(Scalar value) : value_(std::move(value)) {
  if (!value_.norm_sq().is_one()) throw DomainError("not a unit-modulus scalar: " + value_.to_string());
}

Scalar UnitScalar::pow(std::int64_t k) const {
  return k < 0 ? value_.conj().pow(-k) : value_.pow(k);
}

} // namespace xprod
