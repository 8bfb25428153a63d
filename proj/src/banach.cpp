#include "xprod/banach.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "xprod/errors.hpp"

namespace xprod {

L1Norm l1_norm(const DynSystem& sys, const CrossedElement& f) {
  if (f.points() != sys.size()) throw StructuralError("element does not live on this system");
  L1Norm out;
  out.exact = Rational(0);
  for (const auto& [n, fn] : f.terms()) {
    Rational best(0);
    for (const auto& v : fn.values()) {
      Rational m = v.norm_sq();
      if (m > best) best = std::move(m);
    }
    out.display += std::sqrt(best.to_double());
    if (out.exact) {
      auto r = best.exact_sqrt();
      if (r) *out.exact += *r;
      else out.exact.reset();
    }
  }
  return out;
}

namespace {

// floor and ceil of sqrt(q) * 2^bits, q >= 0
std::pair<mpz_class, mpz_class> sqrt_bracket(const Rational& q, unsigned long bits) {
  const mpz_class den = q.denominator();
  mpz_class radicand = q.numerator() * den;
  radicand <<= 2 * bits;
  mpz_class lo;
  mpz_sqrt(lo.get_mpz_t(), radicand.get_mpz_t());
  const mpz_class hi = lo * lo == radicand ? lo : lo + 1;
  // sqrt(a/b) = sqrt(a b) / b
  return {lo, hi};
}

} // namespace

bool l1_norm_at_most(const DynSystem& sys, const CrossedElement& f, const Rational& bound) {
  if (f.points() != sys.size()) throw StructuralError("element does not live on this system");
  std::vector<Rational> maxima;
  bool all_rational = true;
  Rational exact_sum(0);
  for (const auto& [n, fn] : f.terms()) {
    Rational best(0);
    for (const auto& v : fn.values()) {
      Rational m = v.norm_sq();
      if (m > best) best = std::move(m);
    }
    if (auto r = best.exact_sqrt()) exact_sum += *r;
    else all_rational = false;
    maxima.push_back(std::move(best));
  }
  if (all_rational) return exact_sum <= bound;
  // An irrational sum of square roots never equals a rational, so refinement terminates.
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lo(0), hi(0);
    const mpz_class scale = mpz_class(1) << bits;
    for (const Rational& m : maxima) {
      const auto [l, h] = sqrt_bracket(m, bits);
      const mpz_class den = m.denominator() * scale;
      lo += Rational(l, den);
      hi += Rational(h, den);
    }
    if (hi <= bound) return true;
    if (lo > bound) return false;
  }
}

Character::Character(const DynSystem& sys, Point x, UnitScalar xi) : x_(x), xi_(std::move(xi)) {
  if (x >= sys.size()) throw DomainError("point " + std::to_string(x) + " is not in X");
  if (sys.apply(x) != x) {
    throw DomainError("characters need a fixed point; sigma(" + std::to_string(x) + ") = " +
                      std::to_string(sys.apply(x)));
  }
}

Scalar char_eval(const DynSystem& sys, const Character& ch, const CrossedElement& f) {
  if (f.points() != sys.size()) throw StructuralError("element does not live on this system");
  Scalar s;
  for (const auto& [n, fn] : f.terms()) {
    if (!fn[ch.x()].is_zero()) s += fn[ch.x()] * ch.xi().pow(n);
  }
  return s;
}

bool char_bounded(const DynSystem& sys, const Character& ch, const CrossedElement& f) {
  const Scalar v = char_eval(sys, ch, f);
  const L1Norm n = l1_norm(sys, f);
  if (n.exact) return v.norm_sq() <= *n.exact * *n.exact;
  return std::sqrt(v.norm_sq().to_double()) <= n.display + 1e-9;
}

std::vector<Character> enumerate_characters(const DynSystem& sys, const std::vector<UnitScalar>& xi_samples) {
  std::vector<Character> out;
  for (Point x : per_n(sys, 1)) {
    for (const auto& xi : xi_samples) out.emplace_back(sys, x, xi);
  }
  return out;
}

GradedSubspace ker_window(const DynSystem& sys, const PointSet& s, DegreeWindow window) {
  const PointSet rest = set_difference(sys.all_points(), normalize_set(s));
  const std::size_t n = sys.size();
  return GradedSubspace(
      n, "Ker(S): every coefficient vanishes on S", [n, rest](Degree) { return CoeffSubspace::of_support(n, rest); },
      window);
}

std::vector<CrossedElement> commutator_generators(const DynSystem& sys, DegreeWindow window) {
  const std::size_t n = sys.size();
  std::vector<CrossedElement> comms;
  for (Degree a = window.lo; a <= window.hi; ++a) {
    for (Degree b = window.lo; b <= window.hi; ++b) {
      if (!window.contains(a + b)) continue;
      for (Point x = 0; x < n; ++x) {
        const CrossedElement ex = CrossedElement::point_monomial(n, x, a);
        for (Point y = 0; y < n; ++y) {
          CrossedElement c = commutator(sys, ex, CrossedElement::point_monomial(n, y, b));
          if (!c.is_zero()) comms.push_back(std::move(c));
        }
      }
    }
  }
  return SubspaceWindow::span(sys, window, comms).basis();
}

SubspaceWindow commutator_ideal_window(const DynSystem& sys, DegreeWindow window) {
  auto gens = commutator_generators(sys, window);
  // A commutative crossed product has no commutators; the ideal is zero.
  if (gens.empty()) return SubspaceWindow(sys, window);
  return generate_ideal_window(sys, gens, window, window);
}

CommutatorIdealReport commutator_ideal_report(const DynSystem& sys, DegreeWindow window) {
  SubspaceWindow ideal = commutator_ideal_window(sys, window);
  SubspaceWindow ker = SubspaceWindow::of_graded(sys, window, ker_window(sys, per_n(sys, 1), window));
  CommutatorIdealReport r{ideal, ker, ideal.slice_dims(), ker.slice_dims(), false};
  r.equal = r.ideal == r.ker;
  return r;
}

SubspaceWindow character_kernel_window(const DynSystem& sys, const Character& ch, DegreeWindow window) {
  SubspaceWindow w(sys, window);
  linalg::Vec functional(w.ambient_dim());
  for (Degree d = window.lo; d <= window.hi; ++d) {
    functional[static_cast<std::size_t>(d - window.lo) * sys.size() + ch.x()] = ch.xi().pow(d);
  }
  return SubspaceWindow::from_rows(sys, window, linalg::nullspace({functional}, w.ambient_dim()));
}

ModularReport maximal_modular_report(const DynSystem& sys, const Character& ch, DegreeWindow window) {
  return maximal_modular_report(sys, ch, commutator_ideal_window(sys, window));
}

ModularReport maximal_modular_report(const DynSystem& sys, const Character& ch, const SubspaceWindow& commutators) {
  const DegreeWindow window = commutators.window();
  const std::size_t n = sys.size();
  SubspaceWindow ker = character_kernel_window(sys, ch, window);
  ModularReport r;
  r.ambient_dim = ker.ambient_dim();
  r.kernel_dim = ker.dim();
  r.codim = r.ambient_dim - r.kernel_dim;
  r.contains_commutator_ideal = commutators.is_subspace_of(ker);

  r.closed_under_monomials = true;
  for (const auto& e : ker.basis()) {
    for (Degree j = window.lo; j <= window.hi && r.closed_under_monomials; ++j) {
      for (Point y = 0; y < n; ++y) {
        for (const auto& p : {mul_point_mass_left(sys, y, j, e), mul_point_mass_right(sys, e, y, j)}) {
          if (p.supported_in(window) && !ker.contains(p)) {
            r.closed_under_monomials = false;
            break;
          }
        }
      }
    }
    if (!r.closed_under_monomials) break;
  }

  r.unit_outside_kernel = !window.contains(0) || !ker.contains(CrossedElement::one(n));
  r.approximate_unit = true;
  for (Degree k = -6; k <= 6; ++k) {
    if (char_eval(sys, ch, CrossedElement::monomial(Func::one(n), k)) != ch.xi().pow(k)) r.approximate_unit = false;
  }
  r.classification = "maximal modular ideals containing the commutator ideal are exactly the kernels I(x, xi)";
  return r;
}

std::optional<CrossedElement> kernel_distinguishing_witness(const DynSystem& sys, const Character& a,
                                                            const Character& b) {
  const std::size_t n = sys.size();
  if (a.x() != b.x()) return CrossedElement::point_monomial(n, a.x(), 0); // mu_a = 1, mu_b = 0
  if (a.xi() == b.xi()) return std::nullopt;
  // e_x d - xi_a e_x: killed by mu_a, sent to xi_b - xi_a by mu_b
  return CrossedElement::point_monomial(n, a.x(), 1) - CrossedElement::point_monomial(n, a.x(), 0, a.xi().value());
}

} // namespace xprod
