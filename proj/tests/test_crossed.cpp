#include <doctest.h>

#include "support.hpp"
#include "xprod/crossed.hpp"
#include "xprod/errors.hpp"
#include "xprod/random.hpp"

using namespace xprod;

namespace {

DynSystem three_cycle() { return DynSystem({1, 2, 0}); }

CrossedElement pm(std::size_t n, Point x, Degree k) { return CrossedElement::point_monomial(n, x, k); }
CrossedElement delta(std::size_t n, Degree k) { return CrossedElement::monomial(Func::one(n), k); }

} // namespace

TEST_CASE("convolution examples") {
  gen::Rng rng(1);
  const DynSystem c3 = three_cycle();
  const CrossedElement f = gen::element(rng, 3, 4, -3, 3);
  CHECK(conv(c3, CrossedElement::one(3), f) == f);
  CHECK(conv(c3, f, CrossedElement::one(3)) == f);
  CHECK(conv(c3, pm(3, 0, 1), pm(3, 0, 1)).is_zero());
  const Func g({Scalar(1), Scalar(2), Scalar(3)});
  const CrossedElement conj = conv(c3, conv(c3, delta(3, 1), CrossedElement::monomial(g, 0)), delta(3, -1));
  CHECK(conj == CrossedElement::monomial(sigma_action(c3, g, 1), 0));
}

TEST_CASE("convolution rejects mismatched sizes") {
  CHECK_THROWS_AS(conv(three_cycle(), CrossedElement::one(2), CrossedElement::one(3)), StructuralError);
}

TEST_CASE("elements prune zero coefficients") {
  CrossedElement f = pm(3, 0, 2);
  f -= pm(3, 0, 2);
  CHECK(f.is_zero());
  CHECK(f.num_terms() == 0);
  f.add_term(1, Func::point_mass(3, 1));
  f.add_term(-1, Func(3));
  CHECK(f.num_terms() == 1);
  CHECK(f.min_degree() == 1);
}

TEST_CASE("commutator examples") {
  gen::Rng rng(2);
  const DynSystem s = s21();
  const CrossedElement f = gen::element(rng, 3, 3, -2, 2);
  CHECK(commutator(s, f, f).is_zero());
  CHECK(commutator(s, pm(3, 0, 0), pm(3, 0, 1)) == pm(3, 0, 1));
  const CrossedElement a = CrossedElement::monomial(gen::nonzero_func(rng, 3), 0);
  const CrossedElement b = CrossedElement::monomial(gen::nonzero_func(rng, 3), 0);
  CHECK(commutator(s, a, b).is_zero());
}

TEST_CASE("commutant membership examples") {
  gen::Rng rng(3);
  const DynSystem s = s21();
  CHECK(in_commutant(s, CrossedElement::monomial(gen::nonzero_func(rng, 3), 0)));
  CHECK(in_commutant(s, pm(3, 2, 1)));
  CHECK_FALSE(in_commutant(s, pm(3, 0, 1)));
  CHECK(in_commutant(s, pm(3, 0, 2)));
}

TEST_CASE("commutant window examples") {
  const GradedSubspace c3 = commutant_window(three_cycle(), DegreeWindow(-2, 2));
  const auto dims = c3.slice_dims();
  CHECK(dims.at(0) == 3);
  for (Degree d : {-2, -1, 1, 2}) CHECK(dims.at(d) == 0);
  const GradedSubspace s = commutant_window(s21(), DegreeWindow(-2, 2));
  CHECK(s.slice(1) == CoeffSubspace::of_support(3, {2}));
  CHECK(s.slice(2) == CoeffSubspace::full(3));
  const GradedSubspace id = commutant_window(DynSystem::identity(2), DegreeWindow(-3, 3));
  for (Degree d = -3; d <= 3; ++d) CHECK(id.slice(d).dim() == 2);
}

TEST_CASE("maximal abelian verdict examples") {
  auto v = is_maximal_abelian(three_cycle());
  CHECK_FALSE(v.maximal_abelian);
  CHECK(v.witness_n == 3);
  v = is_maximal_abelian(DynSystem::identity(1));
  CHECK_FALSE(v.maximal_abelian);
  CHECK(v.witness_n == 1);
  v = is_maximal_abelian(s21());
  CHECK(v.witness_n == 1);
  CHECK(v.witness_points == PointSet{2});
  CHECK_FALSE(v.explanation.empty());
}

TEST_CASE("property: convolution matches the dense oracle") {
  gen::Rng rng(100);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const auto p = perm_of(sys);
    const CrossedElement f = gen::sparse_element(rng, n, -3, 3);
    const CrossedElement g = gen::sparse_element(rng, n, -3, 3);
    CHECK(dense_of(conv(sys, f, g)) == oracle::conv(p, dense_of(f), dense_of(g)));
  }
}

TEST_CASE("property: ring axioms") {
  gen::Rng rng(101);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const CrossedElement f = gen::sparse_element(rng, n, -3, 3);
    const CrossedElement g = gen::sparse_element(rng, n, -3, 3);
    const CrossedElement h = gen::sparse_element(rng, n, -3, 3);
    CHECK(conv(sys, conv(sys, f, g), h) == conv(sys, f, conv(sys, g, h)));
    CHECK(conv(sys, f, g + h) == conv(sys, f, g) + conv(sys, f, h));
    CHECK(conv(sys, f + g, h) == conv(sys, f, h) + conv(sys, g, h));
    CHECK(commutator(sys, f, g) == -commutator(sys, g, f));
  }
}

TEST_CASE("property: degree-zero products are pointwise") {
  gen::Rng rng(102);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const Func a = gen::nonzero_func(rng, n), b = gen::nonzero_func(rng, n);
    const auto fa = CrossedElement::monomial(a, 0), fb = CrossedElement::monomial(b, 0);
    CHECK(conv(sys, fa, fb) == CrossedElement::monomial(a * b, 0));
    CHECK(conv(sys, fa, fb) == conv(sys, fb, fa));
  }
}

TEST_CASE("property: point mass products agree with convolution") {
  gen::Rng rng(103);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const CrossedElement g = gen::sparse_element(rng, n, -3, 3);
    const Point x = rng() % n;
    const Degree i = static_cast<Degree>(rng() % 7) - 3;
    CHECK(mul_point_mass_left(sys, x, i, g) == conv(sys, pm(n, x, i), g));
    CHECK(mul_point_mass_right(sys, g, x, i) == conv(sys, g, pm(n, x, i)));
  }
}

TEST_CASE("property: commutant formula equals the brute-force centralizer") {
  gen::Rng rng(104);
  int inside = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const DynSystem sys = gen::system(rng, n);
    CrossedElement f(n);
    // bias towards commutant members: coefficients mostly on Per^k
    for (Degree k = -4; k <= 4; ++k) {
      if (rng() % 2) continue;
      Func c = gen::nonzero_func(rng, n);
      if (k != 0 && rng() % 3) c = c * Func::indicator(n, per_n(sys, k));
      f.add_term(k, c);
    }
    const bool expected = oracle::commutes_with_A(perm_of(sys), dense_of(f));
    inside += expected;
    CHECK(in_commutant(sys, f) == expected);
  }
  CHECK(inside > 50);
}

TEST_CASE("property: commutant window closed under products") {
  gen::Rng rng(105);
  const DegreeWindow w(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const DynSystem sys = gen::system(rng, n);
    const GradedSubspace c = commutant_window(sys, w);
    for (Degree a = w.lo; a <= w.hi; ++a) {
      for (Degree b = w.lo; b <= w.hi; ++b) {
        if (!w.contains(a + b)) continue;
        const CoeffSubspace sa = c.slice(a), sb = c.slice(b);
        for (const Func& fa : sa.basis()) {
          for (const Func& fb : sb.basis()) {
            const auto prod = conv(sys, CrossedElement::monomial(fa, a), CrossedElement::monomial(fb, b));
            CHECK(in_graded(c, prod));
            // the commutant is abelian
            CHECK(prod == conv(sys, CrossedElement::monomial(fb, b), CrossedElement::monomial(fa, a)));
          }
        }
      }
    }
  }
}

TEST_CASE("property: conjugation by delta shifts coefficients") {
  gen::Rng rng(106);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const DynSystem sys = gen::system(rng, n);
    const CrossedElement f = gen::sparse_element(rng, n, -3, 3);
    const CrossedElement c = conv(sys, conv(sys, delta(n, 1), f), delta(n, -1));
    CrossedElement expected(n);
    for (const auto& [k, fk] : f.terms()) expected.add_term(k, sigma_action(sys, fk, 1));
    CHECK(c == expected);
    CHECK(in_commutant(sys, c) == in_commutant(sys, f));
  }
}

TEST_CASE("no finite system is maximal abelian") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const DynSystem& sys : gen::all_systems(n)) {
      const auto v = is_maximal_abelian(sys);
      CHECK_FALSE(v.maximal_abelian);
      REQUIRE(v.witness_n.has_value());
      CHECK(*v.witness_n == least_period(sys));
      CHECK(v.witness_points == per_n(sys, *v.witness_n));
      CHECK_FALSE(v.witness_points.empty());
    }
  }
}
