#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/laurent.hpp"

namespace xprod::gen {

using Rng = std::mt19937_64;

// Small Gaussian rationals: numerators in [-3, 3], denominators in {1, 2, 3},
// imaginary part present about a third of the time.
Scalar scalar(Rng& rng);
Scalar nonzero_scalar(Rng& rng);
// Unit-modulus values from Pythagorean triples and the fourth roots of unity.
UnitScalar unit_scalar(Rng& rng);
// Coefficient with at least one nonzero value.
Func nonzero_func(Rng& rng, std::size_t points);
// Uniform random permutation of n points.
DynSystem system(Rng& rng, std::size_t points);
// Nonzero element with 1..max_terms coefficients at distinct degrees in [lo, hi].
CrossedElement element(Rng& rng, std::size_t points, std::size_t max_terms, Degree lo, Degree hi);
// Possibly zero element (each degree in [lo, hi] present with probability 1/2).
CrossedElement sparse_element(Rng& rng, std::size_t points, Degree lo, Degree hi);
// Non-constant Laurent polynomial with up to max_terms terms, exponents in [lo, hi].
LaurentPoly nonconstant_poly(Rng& rng, std::size_t max_terms, std::int64_t lo, std::int64_t hi);

// Every permutation of {0..n-1}, in lexicographic order.
std::vector<DynSystem> all_systems(std::size_t points);

} // namespace xprod::gen
