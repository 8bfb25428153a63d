#include "xprod/random.hpp"

#include <algorithm>
#include <numeric>

namespace xprod::gen {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational small_rational(Rng& rng) { return Rational(uniform(rng, -3, 3), uniform(rng, 1, 3)); }

} // namespace

Scalar scalar(Rng& rng) {
  if (uniform(rng, 0, 2) == 0) return Scalar(small_rational(rng), small_rational(rng));
  return Scalar(small_rational(rng));
}

Scalar nonzero_scalar(Rng& rng) {
  for (;;) {
    Scalar s = scalar(rng);
    if (!s.is_zero()) return s;
  }
}

UnitScalar unit_scalar(Rng& rng) {
  static const std::int64_t triples[][3] = {{3, 4, 5}, {4, 3, 5}, {5, 12, 13}, {12, 5, 13}, {8, 15, 17}, {15, 8, 17}};
  if (uniform(rng, 0, 2) == 0) {
    static const Scalar roots[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
    return UnitScalar(roots[uniform(rng, 0, 3)]);
  }
  const auto& t = triples[uniform(rng, 0, 5)];
  Rational re(t[0], t[2]), im(t[1], t[2]);
  if (uniform(rng, 0, 1)) re = -re;
  if (uniform(rng, 0, 1)) im = -im;
  return UnitScalar(Scalar(re, im));
}

Func nonzero_func(Rng& rng, std::size_t points) {
  Func f(points);
  while (f.is_zero()) {
    for (Point x = 0; x < points; ++x) f[x] = uniform(rng, 0, 1) ? scalar(rng) : Scalar();
  }
  return f;
}

DynSystem system(Rng& rng, std::size_t points) {
  std::vector<Point> p(points);
  std::iota(p.begin(), p.end(), Point{0});
  std::shuffle(p.begin(), p.end(), rng);
  return DynSystem(std::move(p));
}

CrossedElement element(Rng& rng, std::size_t points, std::size_t max_terms, Degree lo, Degree hi) {
  std::vector<Degree> degs;
  for (Degree d = lo; d <= hi; ++d) degs.push_back(d);
  std::shuffle(degs.begin(), degs.end(), rng);
  const auto cap = std::min<std::size_t>(max_terms, degs.size());
  const auto terms = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(cap)));
  CrossedElement f(points);
  for (std::size_t k = 0; k < terms; ++k) f.add_term(degs[k], nonzero_func(rng, points));
  return f;
}

CrossedElement sparse_element(Rng& rng, std::size_t points, Degree lo, Degree hi) {
  CrossedElement f(points);
  for (Degree d = lo; d <= hi; ++d) {
    if (uniform(rng, 0, 1)) f.add_term(d, nonzero_func(rng, points));
  }
  return f;
}

LaurentPoly nonconstant_poly(Rng& rng, std::size_t max_terms, std::int64_t lo, std::int64_t hi) {
  for (;;) {
    LaurentPoly p;
    const auto terms = uniform(rng, 1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t k = 0; k < terms; ++k) p.add_term(uniform(rng, lo, hi), nonzero_scalar(rng));
    if (!p.is_constant()) return p;
  }
}

std::vector<DynSystem> all_systems(std::size_t points) {
  std::vector<Point> p(points);
  std::iota(p.begin(), p.end(), Point{0});
  std::vector<DynSystem> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace xprod::gen
