#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/subspace.hpp"

namespace xprod {

struct ReductionStep {
  enum class Kind { right_multiply, commutate };

  Kind kind = Kind::right_multiply;
  // right_multiply: F -> F * sigma~^(-shift)(a) d^(-shift)
  // commutate:      F -> a * F - F * a   (a in degree 0)
  Func a;
  Degree shift = 0;

  static ReductionStep right_multiply(Func a, Degree shift) { return {Kind::right_multiply, std::move(a), shift}; }
  static ReductionStep commutate(Func b) { return {Kind::commutate, std::move(b), 0}; }

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionCertificate {
  CrossedElement input;
  std::vector<ReductionStep> steps;
  CrossedElement output;
};

// Applies one step to its predecessor.
CrossedElement apply_step(const DynSystem& sys, const CrossedElement& f, const ReductionStep& step);

/*
 * Turns a nonzero element F into a nonzero element of the commutant A' that lies
 * in every two-sided ideal containing F.
 *
 * While the current element is outside A':
 *   1. right_multiply: pick the degree n with nonzero coefficient of smallest |n|
 *      (ties to the negative one) and a = e_p for the smallest p in that
 *      coefficient's support; F * sigma~^(-n)(a) d^(-n) has f_n . a != 0 in degree 0
 *      and no more nonzero coefficients than F.
 *   2. if still outside A', commutate with the first point mass e_x giving a nonzero
 *      commutator; the degree-0 coefficient cancels, so the count drops strictly.
 * A monomial outside A' is sent into degree 0 (hence into A) by step 1.
 * At most 2 * num_terms(F) steps. DomainError when F = 0.
 */
ReductionCertificate reduce_to_commutant(const DynSystem& sys, const CrossedElement& f);

struct ReplayResult {
  bool ok = true;
  std::optional<std::size_t> failed_step; // nullopt when the failure is about the final output
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

// Re-executes the steps with plain convolution and checks: each step's measure
// (number of nonzero coefficients) does not grow, commutate steps shrink it
// strictly, the final element equals the recorded output, is nonzero and lies in A'.
ReplayResult replay(const DynSystem& sys, const ReductionCertificate& cert);

// Windows for checking that the output lies in the ideal generated by the input:
// multipliers range over the hull of 0 and the negated partial sums of the shifts,
// the target covers input support shifted by those and the output support.
struct ContainmentWindows {
  DegreeWindow multipliers;
  DegreeWindow target;
};
ContainmentWindows containment_windows(const ReductionCertificate& cert);

} // namespace xprod
