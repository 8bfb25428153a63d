#include <doctest.h>

#include "support.hpp"
#include "xprod/errors.hpp"
#include "xprod/gelfand.hpp"
#include "xprod/random.hpp"

using namespace xprod;
using linalg::Matrix;
using linalg::Vec;

namespace {

// group algebra of Z/m with sigma(g) = g^s
AbstractAlgebra cyclic_group_algebra(std::size_t m, std::size_t s) {
  AbstractAlgebra::Tensor mul(m, std::vector<Vec>(m, Vec(m)));
  Matrix sigma(m, Vec(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) mul[i][j][(i + j) % m] = Scalar(1);
    sigma[i][(i * s) % m] = Scalar(1);
  }
  return AbstractAlgebra(mul, sigma);
}

// C^d with coordinatewise product, sigma permuting coordinates by p
AbstractAlgebra diagonal_algebra(const std::vector<std::size_t>& p) {
  const std::size_t d = p.size();
  AbstractAlgebra::Tensor mul(d, std::vector<Vec>(d, Vec(d)));
  Matrix sigma(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    mul[i][i][i] = Scalar(1);
    sigma[i][p[i]] = Scalar(1);
  }
  return AbstractAlgebra(mul, sigma);
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// every row is a unital multiplicative functional; rows distinct; as many as dim
void check_characters(const GelfandData& gd) {
  const auto& alg = gd.algebra;
  const std::size_t d = alg.dim();
  REQUIRE(gd.characters.size() == d);
  const auto unit = alg.unit();
  REQUIRE(unit.has_value());
  for (const auto& mu : gd.characters) {
    CHECK(dot(mu, *unit) == Scalar(1));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(dot(mu, alg.mul()[i][j]) == mu[i] * mu[j]);
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) CHECK(gd.characters[a] != gd.characters[b]);
  }
  // mu o sigma^-1 is again a character, and it is the one the induced system names
  const auto inv = linalg::inverse(alg.sigma());
  REQUIRE(inv.has_value());
  for (std::size_t a = 0; a < d; ++a) {
    Vec image(d);
    for (std::size_t k = 0; k < d; ++k) image[k] = dot(gd.characters[a], (*inv)[k]);
    CHECK(image == gd.characters[gd.induced_system.apply(a)]);
  }
}

AbstractElement random_abstract(gen::Rng& rng, std::size_t d) {
  AbstractElement f;
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) {
    Vec v(d);
    for (auto& c : v) c = gen::scalar(rng);
    v[rng() % d] = gen::nonzero_scalar(rng);
    f[static_cast<Degree>(rng() % 7) - 3] = v;
  }
  return f;
}

} // namespace

TEST_CASE("diagonal algebra with cyclic automorphism") {
  const auto gd = gelfand_transform(diagonal_algebra({1, 2, 0}));
  CHECK(gd.characters == linalg::identity(3));
  CHECK(orbits(gd.induced_system).size() == 1);
  CHECK(gd.induced_system.size() == 3);
  check_characters(gd);
}

TEST_CASE("group algebra of Z/2") {
  const auto gd = gelfand_transform(cyclic_group_algebra(2, 1));
  CHECK(gd.characters == Matrix{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}});
  CHECK(gd.induced_system == DynSystem::identity(2));
  check_characters(gd);
  // g d^0 goes to (e0 - e1) d^0
  const auto img = transport_element(gd, AbstractElement{{0, {Scalar(0), Scalar(1)}}});
  CHECK(img == CrossedElement::monomial(Func({Scalar(1), Scalar(-1)}), 0));
  CHECK(transport_element(gd, AbstractElement{{0, {Scalar(1), Scalar(0)}}}) == CrossedElement::one(2));
}

TEST_CASE("group algebra of Z/4 splits over Gaussian rationals") {
  const auto gd = gelfand_transform(cyclic_group_algebra(4, 3));
  check_characters(gd);
  // inversion swaps the two characters with g -> +-i and fixes the real ones
  std::size_t fixed = 0;
  for (Point x = 0; x < 4; ++x) fixed += gd.induced_system.apply(x) == x;
  CHECK(fixed == 2);
}

TEST_CASE("Klein four group algebra and plain diagonal C^4") {
  // basis 1, u, v, uv with u^2 = v^2 = 1; the plain diagonal basis has no separating element in budget
  AbstractAlgebra::Tensor mul(4, std::vector<Vec>(4, Vec(4)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mul[i][j][i ^ j] = Scalar(1);
  }
  const auto gd = gelfand_transform(AbstractAlgebra(mul, linalg::identity(4)));
  check_characters(gd);
  CHECK(gd.induced_system == DynSystem::identity(4));
  const auto plain = gelfand_transform(diagonal_algebra({0, 1, 2, 3}));
  check_characters(plain);
}

TEST_CASE("non-semisimple and non-split inputs are rejected") {
  AbstractAlgebra::Tensor mul(2, std::vector<Vec>(2, Vec(2)));
  mul[0][0][0] = Scalar(1);
  mul[0][1][1] = Scalar(1);
  mul[1][0][1] = Scalar(1);
  const AbstractAlgebra dual(mul, linalg::identity(2));
  try {
    gelfand_transform(dual);
    FAIL("nilpotent accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("not semisimple") != std::string::npos);
  }
  try {
    gelfand_transform(cyclic_group_algebra(3, 1));
    FAIL("cube roots of unity accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("not split") != std::string::npos);
  }
}

TEST_CASE("structural validation") {
  AbstractAlgebra::Tensor mul(2, std::vector<Vec>(2, Vec(2)));
  mul[0][0][0] = Scalar(1);
  mul[0][1][1] = Scalar(1);
  mul[1][0][0] = Scalar(1); // not commutative
  CHECK_THROWS_AS(AbstractAlgebra(mul, linalg::identity(2)), StructuralError);
  // swapping 1 and g in Z/2 is not multiplicative
  auto ok = cyclic_group_algebra(2, 1).mul();
  CHECK_THROWS_AS(AbstractAlgebra(ok, Matrix{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}), StructuralError);
  CHECK_THROWS_AS(AbstractAlgebra(ok, Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}}), StructuralError);
}

TEST_CASE("json input") {
  const auto alg = AbstractAlgebra::from_json(
      R"({"dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], ["1", "0"]]], "sigma": [[1, 0], [0, 1]]})");
  CHECK(alg.dim() == 2);
  CHECK(gelfand_transform(alg).characters == Matrix{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}});
  CHECK_THROWS_AS(AbstractAlgebra::from_json("{\"dim\": 2"), ParseError);
  CHECK_THROWS_AS(AbstractAlgebra::from_json(R"({"dim": 1, "mul": [[["x"]]], "sigma": [[1]]})"), ParseError);
}

TEST_CASE("characteristic polynomial and roots") {
  const Matrix m{{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}};
  CHECK(characteristic_polynomial(m) == Vec{Scalar(1), Scalar(0), Scalar(1)});
  auto roots = gaussian_rational_roots(characteristic_polynomial(m));
  REQUIRE(roots.has_value());
  CHECK(roots->size() == 2);
  // x^2 - 2 has no roots in Q(i)
  roots = gaussian_rational_roots({Scalar(-2), Scalar(0), Scalar(1)});
  REQUIRE(roots.has_value());
  CHECK(roots->empty());
  // (x - 1/2)(x + 3i/2)
  const Scalar a = Scalar(Rational(1, 2)), b = Scalar(Rational(0), Rational(-3, 2));
  roots = gaussian_rational_roots({a * b, -(a + b), Scalar(1)});
  REQUIRE(roots.has_value());
  CHECK(roots->size() == 2);
  CHECK(std::find(roots->begin(), roots->end(), a) != roots->end());
  CHECK(std::find(roots->begin(), roots->end(), b) != roots->end());
}

TEST_CASE("property: transport is an isomorphism") {
  gen::Rng rng(600);
  for (const auto& alg : {diagonal_algebra({1, 2, 0}), cyclic_group_algebra(2, 1), cyclic_group_algebra(4, 3)}) {
    const auto gd = gelfand_transform(alg);
    for (int t = 0; t < 200; ++t) {
      const auto f = random_abstract(rng, alg.dim());
      const auto g = random_abstract(rng, alg.dim());
      const auto tf = transport_element(gd, f), tg = transport_element(gd, g);
      CHECK(transport_element(gd, abstract_conv(alg, f, g)) == conv(gd.induced_system, tf, tg));
      CHECK(transport_back(gd, tf) == f);
    }
  }
}

TEST_CASE("property: random diagonalizable algebras") {
  // C^d conjugated by a random invertible change of basis, sigma a random permutation
  gen::Rng rng(601);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng() % 3;
    Matrix p;
    do {
      p.assign(d, Vec(d));
      for (auto& row : p) {
        for (auto& c : row) c = Scalar(static_cast<std::int64_t>(rng() % 5) - 2);
      }
    } while (!linalg::inverse(p).has_value());
    const Matrix pinv = *linalg::inverse(p);
    // new basis vector c_i = sum_k p[i][k] e_k
    const DynSystem perm = gen::system(rng, d);
    AbstractAlgebra::Tensor mul(d, std::vector<Vec>(d, Vec(d)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Vec prod(d); // in e-coordinates
        for (std::size_t k = 0; k < d; ++k) prod[k] = p[i][k] * p[j][k];
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l) mul[i][j][l] += prod[k] * pinv[k][l];
        }
      }
    }
    Matrix sigma(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i) {
      Vec img(d);
      for (std::size_t k = 0; k < d; ++k) img[perm.apply(k)] += p[i][k];
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) sigma[i][l] += img[k] * pinv[k][l];
      }
    }
    const auto gd = gelfand_transform(AbstractAlgebra(mul, sigma));
    check_characters(gd);
    // induced system is conjugate to the permutation: same cycle type
    auto lengths = [](const DynSystem& s) {
      std::vector<std::size_t> out;
      for (const auto& o : orbits(s)) out.push_back(o.size());
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(lengths(gd.induced_system) == lengths(perm));
  }
}

TEST_CASE("three properties agree") {
  const auto r = triquiv_report(DynSystem({1, 2, 0}));
  CHECK(r.agree);
  CHECK_FALSE(r.per_infinity_dense);
  CHECK_FALSE(r.maximal_abelian);
  CHECK_FALSE(r.every_ideal_meets_A);
  CHECK(r.witness_n == 3);
  CHECK(r.witness_generator == CrossedElement::point_monomial(3, 0, 0) + CrossedElement::point_monomial(3, 0, 3));
  CHECK(r.meets_A_dim == 0);
  CHECK(r.ideal_window_dim > 0);
  CHECK(r.paired_form_holds);
  CHECK_FALSE(r.maximal_abelian_detail.explanation.empty());
  const auto g = triquiv_report(gelfand_transform(cyclic_group_algebra(2, 1)));
  CHECK(g.agree);
  CHECK(g.witness_n == 1);
}
