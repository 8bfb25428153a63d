#include <doctest.h>

#include "support.hpp"
#include "xprod/errors.hpp"
#include "xprod/idealwin.hpp"
#include "xprod/random.hpp"

using namespace xprod;

namespace {

CrossedElement pm(std::size_t n, Point x, Degree k) { return CrossedElement::point_monomial(n, x, k); }

// rank of the naive span of every multiplier product that stays inside the target
std::size_t oracle_dim(const DynSystem& sys, const std::vector<CrossedElement>& gens, DegreeWindow mw,
                       DegreeWindow target) {
  const auto p = perm_of(sys);
  const std::size_t n = sys.size();
  std::vector<std::vector<Scalar>> rows;
  auto keep = [&](const oracle::Dense& d) {
    if (!d.empty() && oracle::in_window(d, target.lo, target.hi)) rows.push_back(oracle::flatten(d, n, target.lo, target.hi));
  };
  for (const auto& g : gens) {
    const auto dg = dense_of(g);
    keep(dg);
    for (Point x = 0; x < n; ++x) {
      for (Degree i = mw.lo; i <= mw.hi; ++i) {
        const auto left = oracle::conv(p, oracle::point(n, x, i), dg);
        keep(left);
        keep(oracle::conv(p, dg, oracle::point(n, x, i)));
        for (Point y = 0; y < n; ++y) {
          for (Degree j = mw.lo; j <= mw.hi; ++j) keep(oracle::conv(p, left, oracle::point(n, y, j)));
        }
      }
    }
  }
  return oracle::rank(rows);
}

GradedSubspace coefficient_algebra(std::size_t n, DegreeWindow w) { return GradedSubspace::coefficient_algebra(n, w); }

} // namespace

TEST_CASE("unit generates the whole window") {
  const DegreeWindow w(-4, 4);
  const auto I = generate_ideal_window(s21(), {CrossedElement::one(3)}, w, w);
  CHECK(I.dim() == 27);
  CHECK(I == SubspaceWindow::full(s21(), w));
}

TEST_CASE("paired generator on S21 avoids degree zero") {
  const DegreeWindow w(-4, 4);
  const CrossedElement g = pm(3, 2, 0) + pm(3, 2, 1);
  const auto I = generate_ideal_window(s21(), {g}, w, w);
  CHECK(I.dim() > 0);
  CHECK(I.slice_dim(0) == 0);
  CHECK(intersect_with_graded(I, coefficient_algebra(3, w)).dim() == 0);
  CHECK(membership(I, pm(3, 2, 0)) == Membership::not_in_window);
  CHECK(membership(I, g) == Membership::yes);
  CHECK(membership(I, CrossedElement(3)) == Membership::yes);
  for (const auto& b : I.basis()) CHECK(paired_form_check(b, 1));
}

TEST_CASE("point mass generator gives the orbit ideal in degree zero") {
  const DegreeWindow w(-4, 4);
  const auto I = generate_ideal_window(s21(), {pm(3, 0, 0)}, w, w);
  CHECK(I.slice_dim(0) == 2);
  CHECK(membership(I, pm(3, 1, 0)) == Membership::yes);
  CHECK(membership(I, pm(3, 2, 0)) == Membership::not_in_window);
  const auto meet = intersect_with_graded(I, coefficient_algebra(3, w));
  CHECK(meet.dim() == 2);
}

TEST_CASE("window errors") {
  CHECK_THROWS_AS(DegreeWindow(2, 1), PreconditionError);
  const DegreeWindow w(-1, 1);
  CHECK_THROWS_AS(generate_ideal_window(s21(), {}, w, w), DomainError);
  const auto I = generate_ideal_window(s21(), {pm(3, 0, 0)}, w, w);
  CHECK_THROWS_AS(membership(I, pm(3, 0, 5)), PreconditionError);
}

TEST_CASE("intersection with the full window and with A") {
  const DegreeWindow w(-2, 2);
  const auto full = SubspaceWindow::full(s21(), w);
  const auto meet = intersect_with_graded(full, coefficient_algebra(3, w));
  CHECK(meet.dim() == 3);
  CHECK(meet.slice_dim(0) == 3);
}

TEST_CASE("paired form examples") {
  gen::Rng rng(7);
  const Func f = gen::nonzero_func(rng, 3);
  const auto F = CrossedElement::monomial(f, 0) + CrossedElement::monomial(f, 3);
  CHECK(paired_form_check(F, 3));
  const auto dec = paired_form_decompose(F, 3);
  REQUIRE(dec.has_value());
  CHECK(dec->at(0) == f);
  CHECK_FALSE(paired_form_check(CrossedElement::monomial(f, 2), 1));
  CHECK(paired_form_check(CrossedElement::monomial(f, 1) + CrossedElement::monomial(f, 3), 2));
  CHECK_FALSE(paired_form_check(CrossedElement::monomial(f, 1) + CrossedElement::monomial(f, 3), 1));
  CHECK(paired_form_check(CrossedElement(3), 1));
}

TEST_CASE("property: window dimension agrees with the naive span") {
  gen::Rng rng(200);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const DynSystem sys = gen::system(rng, n);
    std::vector<CrossedElement> gens{gen::element(rng, n, 2, -1, 1)};
    if (rng() % 2) gens.push_back(gen::element(rng, n, 2, -1, 1));
    const DegreeWindow mw(-2, 2), target(-3, 3);
    const auto I = generate_ideal_window(sys, gens, mw, target);
    CHECK(I.dim() == oracle_dim(sys, gens, mw, target));
    CHECK(verify_certificates(I));
    for (const auto& b : I.basis()) CHECK(b.supported_in(target));
  }
}

TEST_CASE("property: monotone in the multiplier window") {
  gen::Rng rng(201);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const DynSystem sys = gen::system(rng, n);
    const std::vector<CrossedElement> gens{gen::element(rng, n, 3, -2, 2)};
    const DegreeWindow target(-4, 4);
    const auto small = generate_ideal_window(sys, gens, DegreeWindow(-1, 1), target);
    const auto big = generate_ideal_window(sys, gens, DegreeWindow(-3, 3), target);
    CHECK(small.is_subspace_of(big));
  }
}

TEST_CASE("property: delta conjugation stays in the enlarged window") {
  gen::Rng rng(202);
  const DegreeWindow target(-3, 3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const DynSystem sys = gen::system(rng, n);
    const std::vector<CrossedElement> gens{gen::element(rng, n, 2, -1, 1)};
    const auto I = generate_ideal_window(sys, gens, DegreeWindow(-2, 2), target);
    const auto J = generate_ideal_window(sys, gens, DegreeWindow(-3, 3), target);
    const auto d = CrossedElement::monomial(Func::one(n), 1), dinv = CrossedElement::monomial(Func::one(n), -1);
    for (const auto& b : I.basis()) {
      const auto c = conv(sys, conv(sys, d, b), dinv);
      if (c.supported_in(target)) CHECK(membership(J, c) == Membership::yes);
    }
  }
}

TEST_CASE("property: paired generators give windows missing A") {
  // f + f d^n with supp f inside Per^n, every system on up to 3 points
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const DynSystem& sys : gen::all_systems(n)) {
      for (Degree k = 1; k <= 3; ++k) {
        const PointSet per = per_n(sys, k);
        if (per.empty()) continue;
        const Func f = Func::point_mass(n, per.front());
        const auto g = CrossedElement::monomial(f, 0) + CrossedElement::monomial(f, k);
        const DegreeWindow w(-4, 4);
        const auto I = generate_ideal_window(sys, {g}, DegreeWindow(w.lo - k, w.hi), w);
        CHECK(intersect_with_graded(I, coefficient_algebra(n, w)).dim() == 0);
        for (const auto& b : I.basis()) CHECK(paired_form_check(b, k));
      }
    }
  }
}

TEST_CASE("property: paired decomposition reconstructs the element") {
  gen::Rng rng(203);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Degree k = 1 + static_cast<Degree>(rng() % 3);
    CrossedElement f(n);
    for (Degree i = -2; i <= 2; ++i) {
      if (rng() % 2) continue;
      const Func b = gen::nonzero_func(rng, n);
      f.add_term(i, b);
      f.add_term(i + k, b);
    }
    const auto dec = paired_form_decompose(f, k);
    REQUIRE(dec.has_value());
    CrossedElement back(n);
    for (const auto& [i, b] : *dec) {
      back.add_term(i, b);
      back.add_term(i + k, b);
    }
    CHECK(back == f);
    if (!f.is_zero()) CHECK_FALSE(paired_form_check(f + CrossedElement::point_monomial(n, 0, 9), k));
  }
}
