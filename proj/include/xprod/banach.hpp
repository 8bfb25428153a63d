#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/idealwin.hpp"

namespace xprod {

struct L1Norm {
  double display = 0;            // sum of float moduli, for printing only
  std::optional<Rational> exact; // set when every max modulus is rational
};

// sum_n max_x |f_n(x)|
L1Norm l1_norm(const DynSystem& sys, const CrossedElement& f);

// Exact decision of ||f||_1 <= bound, also when some moduli are irrational.
// Square roots are bracketed by integer square roots until the answer is forced.
bool l1_norm_at_most(const DynSystem& sys, const CrossedElement& f, const Rational& bound);

// mu(f_n d^n) = f_n(x) xi^n for a fixed point x and |xi| = 1.
class Character {
public:
  // DomainError unless sigma(x) = x.
  Character(const DynSystem& sys, Point x, UnitScalar xi);

  Point x() const noexcept { return x_; }
  const UnitScalar& xi() const noexcept { return xi_; }

private:
  Point x_;
  UnitScalar xi_;
};

Scalar char_eval(const DynSystem& sys, const Character& ch, const CrossedElement& f);
// |mu(F)| <= l1_norm(F); exact when the norm is, float otherwise.
bool char_bounded(const DynSystem& sys, const Character& ch, const CrossedElement& f);

// per_1 x samples. The whole family is per_1 x T; the samples only slice it.
std::vector<Character> enumerate_characters(const DynSystem& sys, const std::vector<UnitScalar>& xi_samples);
inline constexpr const char* kCharacterBijection =
    "characters correspond bijectively to pairs (x, xi) with sigma(x) = x and |xi| = 1";

// Slice at every degree: functions vanishing on s.
GradedSubspace ker_window(const DynSystem& sys, const PointSet& s, DegreeWindow window);

// RREF basis of the span of all e_x d^a * e_y d^b - e_y d^b * e_x d^a with a, b, a + b in the window.
std::vector<CrossedElement> commutator_generators(const DynSystem& sys, DegreeWindow window);
// Two-sided ideal generated by those commutators, materialized on the window.
SubspaceWindow commutator_ideal_window(const DynSystem& sys, DegreeWindow window);

struct CommutatorIdealReport {
  SubspaceWindow ideal;
  SubspaceWindow ker; // Ker(per_1)
  std::map<Degree, std::size_t> ideal_slices;
  std::map<Degree, std::size_t> ker_slices;
  bool equal = false;
};
CommutatorIdealReport commutator_ideal_report(const DynSystem& sys, DegreeWindow window);

// ker(mu) restricted to the window.
SubspaceWindow character_kernel_window(const DynSystem& sys, const Character& ch, DegreeWindow window);

struct ModularReport {
  std::size_t ambient_dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t codim = 0;
  bool contains_commutator_ideal = false;
  bool closed_under_monomials = false;
  bool unit_outside_kernel = false;
  bool approximate_unit = false; // mu(1 d^n) = xi^n for |n| <= 6
  std::string classification;

  bool ok() const {
    return codim == 1 && contains_commutator_ideal && closed_under_monomials && unit_outside_kernel && approximate_unit;
  }
};
ModularReport maximal_modular_report(const DynSystem& sys, const Character& ch, DegreeWindow window);
// Same, reusing an already generated commutator window.
ModularReport maximal_modular_report(const DynSystem& sys, const Character& ch, const SubspaceWindow& commutators);

// Element in exactly one of the two kernels; nullopt iff the characters coincide.
std::optional<CrossedElement> kernel_distinguishing_witness(const DynSystem& sys, const Character& a,
                                                            const Character& b);

} // namespace xprod
