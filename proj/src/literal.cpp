#include "xprod/literal.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

constexpr Degree kMaxLiteralDegree = 1'000'000;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Whitespace-free view of the source that still reports original byte offsets.
class Cursor {
public:
  explicit Cursor(std::string_view src) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (std::isspace(static_cast<unsigned char>(src[k]))) continue;
      text_.push_back(src[k]);
      offsets_.push_back(k);
    }
    offsets_.push_back(src.size());
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  bool starts_with(std::string_view s) const { return std::string_view(text_).substr(pos_).starts_with(s); }
  void advance(std::size_t k = 1) { pos_ += k; }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  const std::string& text() const { return text_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, offsets_[std::min(pos_, offsets_.size() - 1)]);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string digits() {
    std::string out;
    while (is_digit(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Rational rational() {
    const std::size_t start = pos_;
    std::string num = digits();
    if (num.empty()) fail("expected a number");
    if (peek() == '/') {
      advance();
      std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      if (den.find_first_not_of('0') == std::string::npos) {
        reset(start);
        fail("zero denominator");
      }
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }

  std::int64_t signed_int() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      advance();
    }
    const std::size_t start = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected an integer");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc()) {
      reset(start);
      fail("integer out of range");
    }
    return neg ? -v : v;
  }

  // Scalar starting here; sets plain_one when the text was exactly "1".
  // Without `greedy`, "a+bi" stops after a.
  Scalar scalar(bool* plain_one = nullptr, bool greedy = true) {
    if (plain_one) *plain_one = false;
    if (peek() == '(') {
      const std::size_t start = pos_;
      const auto close = text_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced '('");
      std::string inner = text_.substr(pos_ + 1, close - pos_ - 1);
      try {
        Scalar s = Scalar::parse(inner);
        pos_ = close + 1;
        return s;
      } catch (const std::exception&) {
        reset(start);
        fail("invalid scalar \"" + inner + "\"");
      }
    }
    if (peek() == 'i') {
      advance();
      return Scalar::i();
    }
    const std::size_t start = pos_;
    Rational re = rational();
    if (imaginary_unit()) return Scalar(Rational(0), re);
    if (plain_one && text_.substr(start, pos_ - start) == "1") *plain_one = true;
    // greedy a+bi
    if (greedy && (peek() == '+' || peek() == '-')) {
      const std::size_t save = pos_;
      const bool neg = peek() == '-';
      advance();
      Rational im(1);
      bool ok = false;
      if (peek() == 'i') {
        advance();
        ok = true;
      } else if (is_digit(peek())) {
        im = rational();
        ok = imaginary_unit();
      }
      if (ok && !is_alnum(peek())) {
        if (plain_one) *plain_one = false;
        return Scalar(re, neg ? -im : im);
      }
      reset(save);
    }
    return Scalar(re);
  }

  // "i" or "*i" right after a number
  bool imaginary_unit() {
    if (peek() == 'i') {
      advance();
      return true;
    }
    if (peek() == '*' && peek(1) == 'i' && !is_alnum(peek(2))) {
      advance(2);
      return true;
    }
    return false;
  }

  bool at_scalar() const { return is_digit(peek()) || peek() == '(' || peek() == 'i'; }

private:
  std::string text_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

struct Term {
  Func coeff;
  Degree degree = 0;
};

Term parse_term(Cursor& cur, std::size_t points, bool allow_degree) {
  Scalar c(1);
  bool atom_pending = true;
  if (cur.at_scalar()) {
    bool plain_one = false;
    c = cur.scalar(&plain_one);
    if (cur.peek() == '*' && cur.peek(1) == 'e') {
      cur.advance();
    } else if (cur.peek() == '*' && cur.peek(1) == '1' && !is_digit(cur.peek(2)) && cur.peek(2) != '/' &&
               cur.peek(2) != 'i') {
      cur.advance();
    } else if (plain_one) {
      atom_pending = false; // the "1" was the atom itself
    } else {
      cur.fail("expected '*' and an atom (e<index> or 1) after a scalar");
    }
  }
  Func f(points);
  if (!atom_pending) {
    f = Func::one(points);
  } else if (cur.peek() == 'e') {
    cur.advance();
    const std::size_t at = cur.pos();
    std::string d = cur.digits();
    if (d.empty()) cur.fail("expected a point index after 'e'");
    std::size_t idx = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), idx);
    if (ec != std::errc() || idx >= points) {
      cur.reset(at);
      throw SemanticError("point index e" + d + " is outside X = {0.." + std::to_string(points) + "-1}");
    }
    f = Func::point_mass(points, idx);
  } else if (cur.peek() == '1') {
    cur.advance();
    f = Func::one(points);
  } else {
    cur.fail("expected e<index> or 1");
  }
  f *= c;
  Term t{std::move(f), 0};
  if (cur.starts_with("*d^")) {
    if (!allow_degree) cur.fail("degrees are not allowed in a function literal");
    cur.advance(3);
    const std::size_t at = cur.pos();
    t.degree = cur.signed_int();
    if (t.degree > kMaxLiteralDegree || t.degree < -kMaxLiteralDegree) {
      cur.reset(at);
      cur.fail("degree beyond +-1000000");
    }
  }
  return t;
}

CrossedElement parse_sum(std::string_view src, std::size_t points, bool allow_degree) {
  Cursor cur(src);
  CrossedElement out(points);
  if (cur.text() == "0") return out;
  if (cur.done()) cur.fail("empty expression");
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      neg = cur.peek() == '-';
      cur.advance();
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    Term t = parse_term(cur, points, allow_degree);
    if (neg) t.coeff = -t.coeff;
    out.add_term(t.degree, t.coeff);
    first = false;
  }
  return out;
}

// Sign and coefficient text of one printed term; body is "" for +-1.
std::pair<bool, std::string> split_coeff(const Scalar& c) {
  if (!c.is_simple()) return {false, "(" + c.to_string() + ")*"};
  const bool neg = c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0);
  const Scalar a = neg ? -c : c;
  if (a.is_one()) return {neg, ""};
  return {neg, a.to_string() + "*"};
}

void append_term(std::string& out, const Scalar& c, const std::string& atom) {
  auto [neg, body] = split_coeff(c);
  if (out.empty()) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  out += body + atom;
}

} // namespace

CrossedElement parse_element(std::string_view src, std::size_t points) { return parse_sum(src, points, true); }

Func parse_func(std::string_view src, std::size_t points) { return parse_sum(src, points, false).coeff(0); }

std::string format_element(const CrossedElement& f) {
  std::string out;
  for (const auto& [d, fd] : f.terms()) {
    for (Point x = 0; x < fd.size(); ++x) {
      if (!fd[x].is_zero()) append_term(out, fd[x], "e" + std::to_string(x) + "*d^" + std::to_string(d));
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_func(const Func& f) {
  std::string out;
  for (Point x = 0; x < f.size(); ++x) {
    if (!f[x].is_zero()) append_term(out, f[x], "e" + std::to_string(x));
  }
  return out.empty() ? "0" : out;
}

LaurentPoly parse_poly(std::string_view src) {
  Cursor cur(src);
  LaurentPoly p;
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      neg = cur.peek() == '-';
      cur.advance();
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    Scalar c(1);
    std::int64_t k = 0;
    bool has_t = true;
    if (cur.at_scalar()) {
      // "1 + i*t" is 1 + i t; a bare a+bi constant sums to the same value anyway
      c = cur.scalar(nullptr, false);
      if (cur.peek() == '*' && cur.peek(1) == 't') cur.advance();
      else has_t = false;
    }
    if (has_t) {
      if (cur.peek() != 't') cur.fail("expected 't' or a scalar");
      cur.advance();
      k = 1;
      if (cur.peek() == '^') {
        cur.advance();
        k = cur.signed_int();
      }
    }
    p.add_term(k, neg ? -c : c);
    first = false;
  }
  return p;
}

std::string format_poly(const LaurentPoly& p) {
  std::string out;
  for (const auto& [k, c] : p.coeffs()) {
    if (k == 0) {
      const bool neg = c.is_simple() && (c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0));
      const Scalar a = neg ? -c : c;
      const std::string body = a.is_simple() ? a.to_string() : "(" + a.to_string() + ")";
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      out += body;
    } else {
      append_term(out, c, "t^" + std::to_string(k));
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Scalar> parse_scalar_list(std::string_view src) {
  std::vector<Scalar> out;
  std::size_t depth = 0, start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view item = src.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty entry in scalar list", start);
    try {
      out.push_back(Scalar::parse(item));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid scalar: ") + e.what(), start);
    }
  };
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src[k] == '(') ++depth;
    else if (src[k] == ')' && depth > 0) --depth;
    else if (src[k] == ',' && depth == 0) {
      flush(k);
      start = k + 1;
    }
  }
  flush(src.size());
  return out;
}

PointSet parse_point_list(std::string_view src) {
  std::string s;
  for (char c : src) {
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<Point> pts;
  if (s.empty()) return pts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) {
      throw ParseError("invalid point index \"" + item + "\"", start);
    }
    pts.push_back(v);
    start = end + 1;
  }
  return normalize_set(std::move(pts));
}

} // namespace xprod
