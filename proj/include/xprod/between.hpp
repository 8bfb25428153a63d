#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xprod/crossed.hpp"
#include "xprod/idealwin.hpp"
#include "xprod/subspace.hpp"

namespace xprod {

// Subalgebra B with A < B < A' that misses a nonzero ideal.
struct AvoidingConstruction {
  GradedSubspace B;
  Degree n = 0;
  PointSet U1;
  PointSet U2; // first whole orbit inside Per^n \ U1
  CrossedElement in_B_not_A;       // 1_U1 d^n
  CrossedElement in_Aprime_not_B;  // 1_U2 d^n
};

/*
 * degree 0: all of C^X; degree k != 0: supp f_k inside U1 and Per^k.
 * Needs n >= 1, U1 non-empty and invariant, U1 inside Per^n, and Per^n \ U1
 * containing a whole orbit. DomainError names the failed clause.
 */
AvoidingConstruction build_avoiding_B(const DynSystem& sys, Degree n, const PointSet& u1,
                                      DegreeWindow window = {-6, 6});

// Ideal generated by F2 + F2 d^n, materialized on `target`.
// Needs F2 != 0, supp F2 inside U2, U2 invariant and inside Per^n, U1 and U2 disjoint.
SubspaceWindow avoiding_witness_ideal(const DynSystem& sys, Degree n, const PointSet& u1, const PointSet& u2,
                                      const Func& f2, DegreeWindow target = {-6, 6});

// True when every coefficient of every basis element vanishes off `s`.
bool window_supported_in(const SubspaceWindow& w, const PointSet& s);

struct IntersectingConstruction {
  GradedSubspace B;
  Point x0 = 0;
  Degree period = 0;              // orbit length of x0
  CrossedElement in_Aprime_not_B; // e_x0 d^period
  bool equals_A = false;          // only on a one-point space
  std::string note;
};

// degree 0: all of C^X; degree k != 0: supp f_k inside Per^k and f_k(x0) = 0.
// On a finite space x0 is always isolated, so no intersection property is claimed.
IntersectingConstruction build_intersecting_B(const DynSystem& sys, Point x0, DegreeWindow window = {-6, 6});

// Checks B * B inside B on homogeneous basis pairs whose degrees and product degree
// lie in the window. Returns a description of the first failure.
std::optional<std::string> conv_closure_failure(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window);

struct ProbeEntry {
  std::string family; // "monomial" or "paired"
  CrossedElement generator;
  std::size_t intersection_dim = 0;
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
  bool refuted = false;
  std::optional<std::size_t> first_refuting; // index into entries
  std::string verdict;
};

// Default family: e_x d^k for every point and k in the window, and f + f d^n for
// point masses f on Per^n, 1 <= n <= window.hi. A zero intersection refutes the
// intersection property; all nonzero is only evidence.
std::vector<std::pair<std::string, CrossedElement>> default_probe_family(const DynSystem& sys, DegreeWindow window);

ProbeReport intersection_property_probe(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window);
ProbeReport intersection_property_probe(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window,
                                        const std::vector<std::pair<std::string, CrossedElement>>& family);

} // namespace xprod
