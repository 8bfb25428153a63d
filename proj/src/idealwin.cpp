#include "xprod/idealwin.hpp"

#include "xprod/errors.hpp"

namespace xprod {

SubspaceWindow::SubspaceWindow(DynSystem sys, DegreeWindow window) : sys_(std::move(sys)), window_(window) {}

linalg::Vec SubspaceWindow::to_coords(const CrossedElement& f) const {
  if (f.points() != sys_.size()) throw StructuralError("element does not live on this system");
  if (!f.supported_in(window_)) throw PreconditionError("element is not supported inside the window");
  const std::size_t n = sys_.size();
  linalg::Vec v(ambient_dim());
  for (const auto& [d, fd] : f.terms()) {
    const auto base = static_cast<std::size_t>(d - window_.lo) * n;
    for (Point x = 0; x < n; ++x) v[base + x] = fd[x];
  }
  return v;
}

CrossedElement SubspaceWindow::from_coords(const linalg::Vec& v) const {
  const std::size_t n = sys_.size();
  CrossedElement out(n);
  for (std::size_t b = 0; b < window_.length(); ++b) {
    Func f(n);
    for (Point x = 0; x < n; ++x) f[x] = v[b * n + x];
    out.add_term(window_.lo + static_cast<Degree>(b), f);
  }
  return out;
}

void SubspaceWindow::set_rows(linalg::Matrix rows) {
  pivots_ = linalg::rref(rows);
  rows_ = std::move(rows);
}

SubspaceWindow SubspaceWindow::span(const DynSystem& sys, DegreeWindow window,
                                    const std::vector<CrossedElement>& elements) {
  SubspaceWindow w(sys, window);
  linalg::Matrix rows;
  for (const auto& e : elements) rows.push_back(w.to_coords(e));
  w.set_rows(std::move(rows));
  return w;
}

SubspaceWindow SubspaceWindow::from_rows(const DynSystem& sys, DegreeWindow window, linalg::Matrix rows) {
  SubspaceWindow w(sys, window);
  for (const auto& r : rows) {
    if (r.size() != w.ambient_dim()) throw StructuralError("coordinate row has the wrong length");
  }
  w.set_rows(std::move(rows));
  return w;
}

SubspaceWindow SubspaceWindow::full(const DynSystem& sys, DegreeWindow window) {
  SubspaceWindow w(sys, window);
  w.set_rows(linalg::identity(w.ambient_dim()));
  return w;
}

SubspaceWindow SubspaceWindow::of_graded(const DynSystem& sys, DegreeWindow window, const GradedSubspace& b) {
  std::vector<CrossedElement> elems;
  for (Degree d = window.lo; d <= window.hi; ++d) {
    const CoeffSubspace slice = b.slice(d);
    for (const auto& f : slice.basis()) elems.push_back(CrossedElement::monomial(f, d));
  }
  return span(sys, window, elems);
}

std::vector<CrossedElement> SubspaceWindow::basis() const {
  std::vector<CrossedElement> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(from_coords(r));
  return out;
}

bool SubspaceWindow::contains(const CrossedElement& f) const {
  return linalg::coordinates_in_rref(rows_, pivots_, to_coords(f)).has_value();
}

bool SubspaceWindow::is_subspace_of(const SubspaceWindow& other) const {
  if (!(other.window_.contains(window_))) return false;
  for (const auto& e : basis()) {
    if (!other.contains(e)) return false;
  }
  return true;
}

namespace {

// Basis of {sum_k lambda_k rows[k] : constraints applied to it vanish}, where
// `constraint_values[c][k]` is constraint c evaluated on rows[k].
linalg::Matrix combine_kernel(const linalg::Matrix& rows, const linalg::Matrix& constraint_values,
                              std::size_t ambient) {
  linalg::Matrix lambdas = linalg::nullspace(constraint_values, rows.size());
  linalg::Matrix out;
  for (const auto& lam : lambdas) {
    linalg::Vec v(ambient);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (lam[k].is_zero()) continue;
      for (std::size_t c = 0; c < ambient; ++c) {
        if (!rows[k][c].is_zero()) v[c] += lam[k] * rows[k][c];
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

std::size_t SubspaceWindow::slice_dim(Degree d) const {
  if (!window_.contains(d)) return 0;
  const std::size_t n = sys_.size();
  const auto block = static_cast<std::size_t>(d - window_.lo);
  linalg::Matrix cons;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (c / n == block) continue;
    linalg::Vec row(rows_.size());
    bool any = false;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      row[k] = rows_[k][c];
      any = any || !row[k].is_zero();
    }
    if (any) cons.push_back(std::move(row));
  }
  return linalg::nullspace(cons, rows_.size()).size();
}

std::map<Degree, std::size_t> SubspaceWindow::slice_dims() const {
  std::map<Degree, std::size_t> out;
  for (Degree d = window_.lo; d <= window_.hi; ++d) out[d] = slice_dim(d);
  return out;
}

SubspaceWindow generate_ideal_window(const DynSystem& sys, const std::vector<CrossedElement>& generators,
                                     DegreeWindow mult_window, DegreeWindow target) {
  if (generators.empty()) throw DomainError("an ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.points() != sys.size()) throw StructuralError("generator does not live on this system");
    if (g.is_zero()) throw PreconditionError("generators must be nonzero");
  }
  SubspaceWindow w(sys, target);
  const std::size_t n = sys.size();
  const std::size_t full_dim = w.ambient_dim();
  linalg::EchelonBuilder builder(full_dim);
  std::vector<ProductLabel> selected;

  auto consider = [&](const CrossedElement& p, const ProductLabel& label) {
    if (p.is_zero() || !p.supported_in(target)) return;
    linalg::SparseVec sv;
    for (const auto& [d, fd] : p.terms()) {
      const auto base = static_cast<std::size_t>(d - target.lo) * n;
      for (Point x = 0; x < n; ++x) {
        if (!fd[x].is_zero()) sv.emplace_back(base + x, fd[x]);
      }
    }
    if (builder.insert(sv, selected.size())) selected.push_back(label);
  };
  auto saturated = [&] { return builder.rank() == full_dim; };

  for (std::size_t gi = 0; gi < generators.size() && !saturated(); ++gi) {
    const auto& g = generators[gi];
    consider(g, {gi, ProductLabel::Kind::bare});
    for (Degree i = mult_window.lo; i <= mult_window.hi && !saturated(); ++i) {
      for (Point x = 0; x < n; ++x) {
        consider(mul_point_mass_left(sys, x, i, g), {gi, ProductLabel::Kind::left, x, i});
      }
    }
    for (Degree j = mult_window.lo; j <= mult_window.hi && !saturated(); ++j) {
      for (Point y = 0; y < n; ++y) {
        consider(mul_point_mass_right(sys, g, y, j), {gi, ProductLabel::Kind::right, 0, 0, y, j});
      }
    }
    for (Degree i = mult_window.lo; i <= mult_window.hi && !saturated(); ++i) {
      for (Point x = 0; x < n && !saturated(); ++x) {
        CrossedElement left = mul_point_mass_left(sys, x, i, g);
        if (left.is_zero()) continue;
        for (Degree j = mult_window.lo; j <= mult_window.hi; ++j) {
          for (Point y = 0; y < n; ++y) {
            consider(mul_point_mass_right(sys, left, y, j), {gi, ProductLabel::Kind::two_sided, x, i, y, j});
          }
        }
      }
    }
  }

  auto rows = builder.finalize();
  w.generators_ = generators;
  for (auto& r : rows) {
    ProductCertificate cert;
    for (auto& [label, c] : r.comb) cert.emplace_back(std::move(c), selected[label]);
    w.certificates_.push_back(std::move(cert));
    w.rows_.push_back(std::move(r.values));
  }
  // finalize() already yields canonical RREF; recompute pivots for lookups.
  for (const auto& row : w.rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) {
        w.pivots_.push_back(c);
        break;
      }
    }
  }
  return w;
}

CrossedElement realize_product(const DynSystem& sys, const std::vector<CrossedElement>& generators,
                               const ProductLabel& label) {
  const std::size_t n = sys.size();
  const CrossedElement& g = generators.at(label.generator);
  using Kind = ProductLabel::Kind;
  CrossedElement out = g;
  if (label.kind == Kind::left || label.kind == Kind::two_sided) {
    out = conv(sys, CrossedElement::point_monomial(n, label.x, label.i), out);
  }
  if (label.kind == Kind::right || label.kind == Kind::two_sided) {
    out = conv(sys, out, CrossedElement::point_monomial(n, label.y, label.j));
  }
  return out;
}

bool verify_certificates(const SubspaceWindow& ideal) {
  const auto basis = ideal.basis();
  if (ideal.certificates().size() != basis.size()) return false;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CrossedElement acc(ideal.system().size());
    for (const auto& [c, label] : ideal.certificates()[k]) {
      acc += c * realize_product(ideal.system(), ideal.generators(), label);
    }
    if (!(acc == basis[k])) return false;
  }
  return true;
}

Membership membership(const SubspaceWindow& ideal, const CrossedElement& f) {
  if (!f.supported_in(ideal.window())) throw PreconditionError("element is not supported inside the ideal window");
  return ideal.contains(f) ? Membership::yes : Membership::not_in_window;
}

SubspaceWindow intersect_with_graded(const SubspaceWindow& ideal, const GradedSubspace& b) {
  if (b.ambient_size() != ideal.system().size()) throw StructuralError("graded subspace lives on another system");
  const std::size_t n = ideal.system().size();
  const auto& rows = ideal.rows();
  linalg::Matrix cons;
  for (Degree d = ideal.window().lo; d <= ideal.window().hi; ++d) {
    const auto base = static_cast<std::size_t>(d - ideal.window().lo) * n;
    for (const auto& c : b.slice(d).constraints()) {
      linalg::Vec row(rows.size());
      bool any = false;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        for (Point x = 0; x < n; ++x) {
          if (!c[x].is_zero() && !rows[k][base + x].is_zero()) row[k] += c[x] * rows[k][base + x];
        }
        any = any || !row[k].is_zero();
      }
      if (any) cons.push_back(std::move(row));
    }
  }
  return SubspaceWindow::from_rows(ideal.system(), ideal.window(), combine_kernel(rows, cons, ideal.ambient_dim()));
}

std::optional<std::map<Degree, Func>> paired_form_decompose(const CrossedElement& f, Degree n) {
  if (n < 1) throw PreconditionError("paired form needs n >= 1");
  std::map<Degree, Func> b;
  if (f.is_zero()) return b;
  const Degree lo = f.min_degree();
  const Degree hi = f.max_degree();
  std::map<Degree, Func> chain;
  for (Degree m = lo; m <= hi; ++m) {
    Func bm = f.coeff(m);
    if (auto it = chain.find(m - n); it != chain.end()) bm -= it->second;
    if (m > hi - n) {
      if (!bm.is_zero()) return std::nullopt;
      continue;
    }
    chain.emplace(m, bm);
  }
  for (auto& [m, bm] : chain) {
    if (!bm.is_zero()) b.emplace(m, std::move(bm));
  }
  return b;
}

bool paired_form_check(const CrossedElement& f, Degree n) { return paired_form_decompose(f, n).has_value(); }

} // namespace xprod
