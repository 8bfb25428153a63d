#include "xprod/between.hpp"

#include "xprod/errors.hpp"

namespace xprod {

namespace {

void check_points(const DynSystem& sys, const PointSet& s, const char* name) {
  for (Point x : s) {
    if (x >= sys.size()) throw DomainError(std::string(name) + " contains point " + std::to_string(x) + " outside X");
  }
}

} // namespace

AvoidingConstruction build_avoiding_B(const DynSystem& sys, Degree n, const PointSet& u1_in, DegreeWindow window) {
  if (n < 1) throw DomainError("n must be at least 1");
  const PointSet u1 = normalize_set(u1_in);
  check_points(sys, u1, "U1");
  if (u1.empty()) throw DomainError("U1 must be non-empty");
  if (!is_invariant(sys, u1)) throw DomainError("U1 is not invariant");
  const PointSet per = per_n(sys, n);
  if (!is_subset(u1, per)) throw DomainError("U1 is not contained in Per^" + std::to_string(n));
  const PointSet rest = set_difference(per, u1);
  PointSet u2;
  for (const auto& orb : orbits(sys)) {
    if (is_subset(orb, rest)) {
      u2 = orb;
      break;
    }
  }
  if (u2.empty()) throw DomainError("Per^" + std::to_string(n) + " \\ U1 contains no whole orbit");

  const std::size_t np = sys.size();
  GradedSubspace b(
      np, "B: degree 0 all of A, degree k supported in U1 and Per^k",
      [sys, u1](Degree d) {
        return d == 0 ? CoeffSubspace::full(sys.size())
                      : subspace_of_support(sys, set_intersection(u1, per_n(sys, d)));
      },
      window);
  return {std::move(b),
          n,
          u1,
          u2,
          CrossedElement::monomial(Func::indicator(np, u1), n),
          CrossedElement::monomial(Func::indicator(np, u2), n)};
}

SubspaceWindow avoiding_witness_ideal(const DynSystem& sys, Degree n, const PointSet& u1_in, const PointSet& u2_in,
                                      const Func& f2, DegreeWindow target) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (f2.size() != sys.size()) throw StructuralError("F2 has the wrong number of points");
  if (f2.is_zero()) throw DomainError("F2 must be nonzero");
  const PointSet u1 = normalize_set(u1_in), u2 = normalize_set(u2_in);
  check_points(sys, u1, "U1");
  check_points(sys, u2, "U2");
  if (!is_invariant(sys, u2)) throw DomainError("U2 is not invariant");
  if (!is_subset(u2, per_n(sys, n))) throw DomainError("U2 is not contained in Per^" + std::to_string(n));
  if (!set_intersection(u1, u2).empty()) throw DomainError("U1 and U2 intersect");
  if (!is_subset(support(f2), u2)) throw DomainError("F2 is not supported in U2");

  CrossedElement g = CrossedElement::monomial(f2, 0) + CrossedElement::monomial(f2, n);
  return generate_ideal_window(sys, {g}, DegreeWindow(target.lo - n, target.hi), target);
}

bool window_supported_in(const SubspaceWindow& w, const PointSet& s) {
  for (const auto& e : w.basis()) {
    for (const auto& [d, fd] : e.terms()) {
      if (!is_subset(support(fd), s)) return false;
    }
  }
  return true;
}

IntersectingConstruction build_intersecting_B(const DynSystem& sys, Point x0, DegreeWindow window) {
  if (x0 >= sys.size()) throw DomainError("x0 = " + std::to_string(x0) + " is not a point of X");
  const std::size_t np = sys.size();
  GradedSubspace b(
      np, "B: degree 0 all of A, degree k supported in Per^k and vanishing at x0",
      [sys, x0](Degree d) {
        if (d == 0) return CoeffSubspace::full(sys.size());
        PointSet s = per_n(sys, d);
        std::erase(s, x0);
        return subspace_of_support(sys, s);
      },
      window);
  IntersectingConstruction out{std::move(b), x0, static_cast<Degree>(sys.orbit_length(x0)),
                               CrossedElement(np), np == 1, ""};
  out.in_Aprime_not_B = CrossedElement::point_monomial(np, x0, out.period);
  out.note = out.equals_A ? "degenerate: X = {x0}, so B = A (and A' strictly larger)"
                          : "A < B < A'; x0 is isolated, so the intersection property is not claimed";
  return out;
}

std::optional<std::string> conv_closure_failure(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window) {
  for (Degree p = window.lo; p <= window.hi; ++p) {
    const auto bp = b.slice(p).basis();
    for (Degree q = window.lo; q <= window.hi; ++q) {
      if (!window.contains(p + q)) continue;
      const auto bq = b.slice(q).basis();
      const CoeffSubspace target = b.slice(p + q);
      for (const auto& f : bp) {
        for (const auto& g : bq) {
          Func prod = f * sigma_action(sys, g, p);
          if (!target.contains(prod)) {
            return "product of basis elements in degrees " + std::to_string(p) + " and " + std::to_string(q) +
                   " leaves the slice at degree " + std::to_string(p + q);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, CrossedElement>> default_probe_family(const DynSystem& sys, DegreeWindow window) {
  std::vector<std::pair<std::string, CrossedElement>> fam;
  const std::size_t np = sys.size();
  for (Degree k = window.lo; k <= window.hi; ++k) {
    for (Point x = 0; x < np; ++x) fam.emplace_back("monomial", CrossedElement::point_monomial(np, x, k));
  }
  for (Degree n = 1; n <= window.hi; ++n) {
    for (Point x : per_n(sys, n)) {
      fam.emplace_back("paired", CrossedElement::point_monomial(np, x, 0) + CrossedElement::point_monomial(np, x, n));
    }
  }
  return fam;
}

ProbeReport intersection_property_probe(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window) {
  return intersection_property_probe(sys, b, window, default_probe_family(sys, window));
}

ProbeReport intersection_property_probe(const DynSystem& sys, const GradedSubspace& b, DegreeWindow window,
                                        const std::vector<std::pair<std::string, CrossedElement>>& family) {
  ProbeReport r;
  for (const auto& [label, g] : family) {
    if (g.is_zero() || !g.supported_in(window)) continue;
    SubspaceWindow ideal = generate_ideal_window(sys, {g}, window, window);
    ProbeEntry e{label, g, intersect_with_graded(ideal, b).dim()};
    if (e.intersection_dim == 0 && !r.refuted) {
      r.refuted = true;
      r.first_refuting = r.entries.size();
    }
    r.entries.push_back(std::move(e));
  }
  r.verdict = r.refuted ? "refuted: some probed ideal meets B only in 0 inside the window"
                        : "evidence only: every probed ideal meets B nontrivially inside the window";
  return r;
}

} // namespace xprod
