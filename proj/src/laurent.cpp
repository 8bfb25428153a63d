#include "xprod/laurent.hpp"

#include "xprod/errors.hpp"

namespace xprod {

LaurentPoly LaurentPoly::monomial(const Scalar& c, std::int64_t k) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

LaurentPoly LaurentPoly::linear(const Scalar& alpha) { return t() - LaurentPoly(alpha); }

Scalar LaurentPoly::coeff(std::int64_t k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Scalar() : it->second;
}

std::int64_t LaurentPoly::min_exp() const {
  if (c_.empty()) throw DomainError("exponent of the zero polynomial");
  return c_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (c_.empty()) throw DomainError("exponent of the zero polynomial");
  return c_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [k, c] : out.c_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.c_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.c_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [a, ca] : c_) {
    for (const auto& [b, cb] : rhs.c_) out.add_term(a + b, ca * cb);
  }
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out(Scalar(1)), base(*this);
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op) {
  return op == LaurentOp::add ? p + q : p * q;
}

Scalar eval(const LaurentPoly& p, const Scalar& alpha) {
  if (alpha.is_zero()) throw DomainError("Laurent polynomials cannot be evaluated at 0");
  Scalar s;
  for (const auto& [k, c] : p.coeffs()) s += c * alpha.pow(k);
  return s;
}

RootIdeal::RootIdeal(std::vector<Scalar> r) : roots(std::move(r)) {
  if (roots.empty()) throw DomainError("a root ideal needs at least one root");
  for (const auto& a : roots) {
    if (a.is_zero()) throw DomainError("0 cannot be a root: t is a unit in C[t, 1/t]");
  }
}

LaurentPoly RootIdeal::generator() const {
  LaurentPoly g(Scalar(1));
  for (const auto& a : roots) g *= LaurentPoly::linear(a);
  return g;
}

bool root_ideal_member(const RootIdeal& ideal, const LaurentPoly& p) {
  if (p.is_zero()) return true;
  // t^(-min) p is an ordinary polynomial with nonzero constant term; divide out
  // each (t - a) by synthetic division, highest degree first.
  const std::int64_t lo = p.min_exp();
  std::vector<Scalar> c(static_cast<std::size_t>(p.max_exp() - lo + 1));
  for (const auto& [k, v] : p.coeffs()) c[static_cast<std::size_t>(k - lo)] = v;
  for (const auto& a : ideal.roots) {
    if (c.size() < 2) return false;
    std::vector<Scalar> q(c.size() - 1);
    Scalar carry;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * a;
      q[i - 1] = carry;
    }
    if (!(c[0] + carry * a).is_zero()) return false;
    c = std::move(q);
  }
  return true;
}

LaurentPoly evaluate_in(const std::vector<Scalar>& q, const LaurentPoly& f) {
  LaurentPoly acc;
  for (std::size_t k = q.size(); k-- > 0;) acc = acc * f + LaurentPoly(q[k]);
  return acc;
}

TrichotomyWitness trichotomy_witness(const LaurentPoly& f, const RootIdeal& ideal) {
  if (f.is_constant()) throw DomainError("f must be non-constant");
  TrichotomyWitness w;
  w.value = LaurentPoly(Scalar(1));
  w.poly_in_f = {Scalar(1)};
  for (const auto& a : ideal.roots) {
    const Scalar c = eval(f, a);
    w.shifts.push_back(c);
    w.value *= f - LaurentPoly(c);
    // multiply the coefficient list by (x - c)
    std::vector<Scalar> next(w.poly_in_f.size() + 1);
    for (std::size_t k = 0; k < w.poly_in_f.size(); ++k) {
      next[k + 1] += w.poly_in_f[k];
      next[k] -= c * w.poly_in_f[k];
    }
    w.poly_in_f = std::move(next);
  }
  return w;
}

LaurentPoly to_laurent(const CrossedElement& f) {
  if (f.points() != 1) throw StructuralError("the Laurent picture needs a one-point system");
  LaurentPoly p;
  for (const auto& [d, fd] : f.terms()) p.add_term(d, fd[0]);
  return p;
}

CrossedElement from_laurent(const LaurentPoly& p) {
  CrossedElement out(1);
  for (const auto& [k, c] : p.coeffs()) out.add_term(k, Func::constant(1, c));
  return out;
}

} // namespace xprod
