#include "xprod/reduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "xprod/errors.hpp"

namespace xprod {

namespace {

CrossedElement right_factor(const DynSystem& sys, const Func& a, Degree shift) {
  return CrossedElement::monomial(sigma_action(sys, a, -shift), -shift);
}

// Degree of the nonzero coefficient closest to 0, preferring the negative side.
Degree pick_degree(const CrossedElement& f) {
  Degree best = f.min_degree();
  for (const auto& [d, fd] : f.terms()) {
    const auto ad = std::llabs(d), ab = std::llabs(best);
    if (ad < ab || (ad == ab && d < best)) best = d;
  }
  return best;
}

} // namespace

CrossedElement apply_step(const DynSystem& sys, const CrossedElement& f, const ReductionStep& step) {
  if (step.a.size() != sys.size()) throw StructuralError("step function has the wrong number of points");
  if (step.kind == ReductionStep::Kind::right_multiply) return conv(sys, f, right_factor(sys, step.a, step.shift));
  const CrossedElement b = CrossedElement::monomial(step.a, 0);
  return commutator(sys, b, f);
}

ReductionCertificate reduce_to_commutant(const DynSystem& sys, const CrossedElement& f) {
  if (f.points() != sys.size()) throw StructuralError("element does not live on this system");
  if (f.is_zero()) throw DomainError("cannot reduce the zero element");
  const std::size_t n = sys.size();
  ReductionCertificate cert{f, {}, f};
  CrossedElement cur = f;

  while (!in_commutant(sys, cur)) {
    const Degree d = pick_degree(cur);
    const Point p = support(cur.coeff(d)).front();
    ReductionStep rm = ReductionStep::right_multiply(Func::point_mass(n, p), d);
    cur = apply_step(sys, cur, rm);
    cert.steps.push_back(std::move(rm));
    if (in_commutant(sys, cur)) break;

    bool found = false;
    for (Point x = 0; x < n && !found; ++x) {
      ReductionStep cm = ReductionStep::commutate(Func::point_mass(n, x));
      CrossedElement next = apply_step(sys, cur, cm);
      if (next.is_zero()) continue;
      cur = std::move(next);
      cert.steps.push_back(std::move(cm));
      found = true;
    }
    // Every point mass commuting with cur would put cur in A'.
    if (!found) throw std::logic_error("no point mass separates an element outside the commutant");
  }
  cert.output = std::move(cur);
  return cert;
}

ReplayResult replay(const DynSystem& sys, const ReductionCertificate& cert) {
  auto fail = [](std::optional<std::size_t> at, std::string why) { return ReplayResult{false, at, std::move(why)}; };
  if (cert.input.points() != sys.size() || cert.output.points() != sys.size()) {
    return fail(std::nullopt, "certificate lives on a different number of points");
  }
  if (cert.input.is_zero()) return fail(std::nullopt, "input is zero");
  if (cert.steps.size() > 2 * cert.input.num_terms()) {
    return fail(std::nullopt, "more steps than twice the number of input coefficients");
  }
  CrossedElement cur = cert.input;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& step = cert.steps[k];
    CrossedElement next;
    try {
      next = apply_step(sys, cur, step);
    } catch (const std::exception& e) {
      return fail(k, e.what());
    }
    if (next.is_zero()) return fail(k, "step produced zero");
    if (step.kind == ReductionStep::Kind::right_multiply && next.num_terms() > cur.num_terms()) {
      return fail(k, "right multiplication increased the number of coefficients");
    }
    if (step.kind == ReductionStep::Kind::commutate && next.num_terms() >= cur.num_terms()) {
      return fail(k, "commutator did not decrease the number of coefficients");
    }
    cur = std::move(next);
  }
  if (!(cur == cert.output)) return fail(std::nullopt, "replayed element differs from the recorded output");
  if (cur.is_zero()) return fail(std::nullopt, "output is zero");
  if (!in_commutant(sys, cur)) return fail(std::nullopt, "output is not in the commutant");
  return {};
}

ContainmentWindows containment_windows(const ReductionCertificate& cert) {
  if (cert.input.is_zero()) throw DomainError("certificate has a zero input");
  Degree lo = 0, hi = 0, acc = 0;
  for (const auto& s : cert.steps) {
    if (s.kind != ReductionStep::Kind::right_multiply) continue;
    acc -= s.shift;
    lo = std::min(lo, acc);
    hi = std::max(hi, acc);
  }
  Degree tlo = cert.input.min_degree() + lo, thi = cert.input.max_degree() + hi;
  if (!cert.output.is_zero()) {
    tlo = std::min(tlo, cert.output.min_degree());
    thi = std::max(thi, cert.output.max_degree());
  }
  return {DegreeWindow(lo, hi), DegreeWindow(tlo, thi)};
}

} // namespace xprod
