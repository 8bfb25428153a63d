#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "xprod/banach.hpp"
#include "xprod/errors.hpp"
#include "xprod/random.hpp"

using namespace xprod;

namespace {

DynSystem three_cycle() { return DynSystem({1, 2, 0}); }

CrossedElement pm(std::size_t n, Point x, Degree k, const Scalar& c = Scalar(1)) {
  return CrossedElement::point_monomial(n, x, k, c);
}

UnitScalar unit(const char* s) { return UnitScalar(Scalar::parse(s)); }

// sum over degrees of the max modulus, computed in double from scratch
double naive_l1(const CrossedElement& f) {
  double total = 0;
  for (const auto& [k, fk] : f.terms()) {
    double best = 0;
    for (const auto& c : fk.values()) best = std::max(best, std::hypot(c.re().to_double(), c.im().to_double()));
    total += best;
  }
  return total;
}

// Elements whose coefficient moduli are all rational: unit scalars times rationals.
CrossedElement rational_modulus_element(gen::Rng& rng, std::size_t n) {
  CrossedElement f(n);
  for (Degree k = -2; k <= 2; ++k) {
    if (rng() % 2) continue;
    Func c(n);
    for (Point x = 0; x < n; ++x) c[x] = gen::unit_scalar(rng).value() * Scalar(Rational(rng() % 5, 1 + rng() % 3));
    f.add_term(k, c);
  }
  return f;
}

} // namespace

TEST_CASE("l1 norm examples") {
  CHECK(l1_norm(s21(), CrossedElement::one(3)).display == doctest::Approx(1.0));
  CHECK(l1_norm(s21(), CrossedElement::one(3)).exact == Rational(1));
  const auto two = l1_norm(s21(), pm(3, 0, 0) + pm(3, 1, 1));
  CHECK(two.exact == Rational(2));
  const auto u = l1_norm(s21(), pm(3, 0, 0, Scalar::parse("3/5+4/5i")));
  CHECK(u.exact == Rational(1));
  const auto irrational = l1_norm(s21(), pm(3, 0, 0, Scalar::parse("1+i")));
  CHECK_FALSE(irrational.exact.has_value());
  CHECK(irrational.display == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("exact l1 comparison") {
  const auto r2 = pm(3, 0, 0, Scalar::parse("1+i"));
  CHECK_FALSE(l1_norm_at_most(s21(), r2, Rational(14142, 10000)));
  CHECK(l1_norm_at_most(s21(), r2, Rational(14143, 10000)));
  // sqrt(2) + sqrt(2) against a bound 10^-12 away
  const auto two = r2 + pm(3, 1, 1, Scalar::parse("1-i"));
  CHECK(l1_norm_at_most(s21(), two, Rational(2828427124747, 1000000000000)));
  CHECK_FALSE(l1_norm_at_most(s21(), two, Rational(2828427124746, 1000000000000)));
  CHECK(l1_norm_at_most(s21(), pm(3, 0, 0) + pm(3, 1, 1), Rational(2)));
  CHECK_FALSE(l1_norm_at_most(s21(), pm(3, 0, 0) + pm(3, 1, 1), Rational(199, 100)));
  CHECK(l1_norm_at_most(s21(), CrossedElement(3), Rational(0)));
}

TEST_CASE("character evaluation examples") {
  const DynSystem s = s21();
  const Character ch(s, 2, UnitScalar(Scalar::i()));
  CHECK(char_eval(s, ch, pm(3, 2, 2)) == Scalar(-1));
  CHECK(char_eval(s, ch, CrossedElement::one(3)) == Scalar(1));
  CHECK(char_eval(s, ch, pm(3, 0, 1)) == Scalar(0));
  for (Point x = 0; x < 3; ++x) CHECK_THROWS_AS(Character(three_cycle(), x, UnitScalar::one()), DomainError);
  CHECK_THROWS_AS(Character(s, 0, UnitScalar::one()), DomainError);
}

TEST_CASE("character enumeration examples") {
  const std::vector<UnitScalar> samples{UnitScalar::one(), UnitScalar(Scalar::i()), unit("3/5+4/5i")};
  CHECK(enumerate_characters(three_cycle(), samples).empty());
  const auto s = enumerate_characters(s21(), samples);
  CHECK(s.size() == 3);
  for (const auto& ch : s) CHECK(ch.x() == 2);
  CHECK(enumerate_characters(DynSystem::identity(2), {UnitScalar::one()}).size() == 2);
  CHECK(std::string(kCharacterBijection).find("bijectively") != std::string::npos);
}

TEST_CASE("commutator ideal examples") {
  const DegreeWindow w(-4, 4);
  const auto r = commutator_ideal_report(s21(), w);
  CHECK(r.equal);
  CHECK(r.ideal_slices.at(1) == 2);
  CHECK(r.ideal == r.ker);
  const auto id = commutator_ideal_window(DynSystem::identity(3), w);
  CHECK(id.dim() == 0);
  const auto c3 = commutator_ideal_window(three_cycle(), w);
  CHECK(c3 == SubspaceWindow::full(three_cycle(), w));
}

TEST_CASE("commutator ideal slice equals functions vanishing on fixed points") {
  const DegreeWindow w(-3, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const DynSystem& sys : gen::all_systems(n)) {
      const auto p = perm_of(sys);
      std::size_t fixed = 0;
      for (Point x = 0; x < n; ++x) fixed += oracle::fixed_by_power(p, x, 1);
      const auto I = commutator_ideal_window(sys, w);
      for (Degree d = w.lo; d <= w.hi; ++d) CHECK(I.slice_dim(d) == n - fixed);
      CHECK(I.dim() == w.length() * (n - fixed));
    }
  }
}

TEST_CASE("maximal modular report examples") {
  const DynSystem s = s21();
  const DegreeWindow w(-3, 3);
  const Character one(s, 2, UnitScalar::one());
  const auto r = maximal_modular_report(s, one, w);
  CHECK(r.codim == 1);
  CHECK(r.contains_commutator_ideal);
  CHECK(r.closed_under_monomials);
  CHECK(r.unit_outside_kernel);
  CHECK(r.approximate_unit);
  CHECK(r.ok());
  CHECK(r.kernel_dim + 1 == r.ambient_dim);

  const Character ci(s, 2, UnitScalar(Scalar::i()));
  const auto wit = kernel_distinguishing_witness(s, ci, one);
  REQUIRE(wit.has_value());
  CHECK((char_eval(s, ci, *wit).is_zero()) != (char_eval(s, one, *wit).is_zero()));
  CHECK_FALSE(kernel_distinguishing_witness(s, one, one).has_value());
  const auto ki = character_kernel_window(s, ci, w), k1 = character_kernel_window(s, one, w);
  CHECK(ki != k1);
  CHECK(ki.dim() == k1.dim());
}

TEST_CASE("distinct fixed points give distinct kernels") {
  const DynSystem id = DynSystem::identity(2);
  const Character a(id, 0, UnitScalar::one()), b(id, 1, UnitScalar::one());
  const auto wit = kernel_distinguishing_witness(id, a, b);
  REQUIRE(wit.has_value());
  CHECK(char_eval(id, a, *wit) != Scalar(0));
  CHECK(char_eval(id, b, *wit) == Scalar(0));
}

TEST_CASE("property: characters are multiplicative, bounded and kill commutators") {
  gen::Rng rng(700);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 5;
    DynSystem sys = gen::system(rng, n);
    if (per_n(sys, 1).empty()) sys = DynSystem::identity(n);
    const PointSet fixed = per_n(sys, 1);
    const Character ch(sys, fixed[rng() % fixed.size()], gen::unit_scalar(rng));
    const auto f = gen::sparse_element(rng, n, -3, 3), g = gen::sparse_element(rng, n, -3, 3);
    CHECK(char_eval(sys, ch, conv(sys, f, g)) == char_eval(sys, ch, f) * char_eval(sys, ch, g));
    CHECK(char_eval(sys, ch, commutator(sys, f, g)).is_zero());
    CHECK(char_bounded(sys, ch, f));
    for (Degree k = -6; k <= 6; ++k) {
      CHECK(char_eval(sys, ch, CrossedElement::monomial(Func::one(n), k)) == ch.xi().pow(k));
    }
  }
}

TEST_CASE("property: l1 norm is submultiplicative") {
  gen::Rng rng(701);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const auto f = gen::sparse_element(rng, n, -3, 3), g = gen::sparse_element(rng, n, -3, 3);
    const double nf = l1_norm(sys, f).display, ng = l1_norm(sys, g).display;
    CHECK(nf == doctest::Approx(naive_l1(f)));
    CHECK(l1_norm(sys, conv(sys, f, g)).display <= nf * ng + 1e-9);
  }
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const DynSystem sys = gen::system(rng, n);
    const auto f = rational_modulus_element(rng, n), g = rational_modulus_element(rng, n);
    const auto nf = l1_norm(sys, f), ng = l1_norm(sys, g);
    REQUIRE(nf.exact.has_value());
    REQUIRE(ng.exact.has_value());
    // the product's moduli are usually irrational, hence the bracketed comparison
    CHECK(l1_norm_at_most(sys, conv(sys, f, g), *nf.exact * *ng.exact));
  }
}

TEST_CASE("property: every sampled character yields a maximal modular ideal") {
  gen::Rng rng(702);
  const DegreeWindow w(-2, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const DynSystem& sys : gen::all_systems(n)) {
      const auto comm = commutator_ideal_window(sys, w);
      for (const auto& ch : enumerate_characters(sys, {UnitScalar::one(), gen::unit_scalar(rng)})) {
        CHECK(maximal_modular_report(sys, ch, comm).ok());
      }
    }
  }
}
