#include "xprod/gelfand.hpp"

#include <algorithm>
#include <set>

#include <gmpxx.h>
#include <json.hpp>

#include "xprod/errors.hpp"
#include "xprod/idealwin.hpp"

namespace xprod {

using linalg::Matrix;
using linalg::Vec;

AbstractAlgebra::AbstractAlgebra(Tensor mul, Matrix sigma) : mul_(std::move(mul)), sigma_(std::move(sigma)) {
  const std::size_t d = sigma_.size();
  if (d == 0) throw StructuralError("algebra dimension must be positive");
  if (mul_.size() != d) throw StructuralError("mul must have dim rows");
  for (const auto& row : mul_) {
    if (row.size() != d) throw StructuralError("mul[i] must have dim entries");
    for (const auto& v : row) {
      if (v.size() != d) throw StructuralError("mul[i][j] must have dim coefficients");
    }
  }
  for (const auto& row : sigma_) {
    if (row.size() != d) throw StructuralError("sigma must be a dim x dim matrix");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (mul_[i][j] != mul_[j][i]) {
        throw StructuralError("not commutative: b" + std::to_string(i) + " b" + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (product(mul_[i][j], basis_vector(k)) != product(basis_vector(i), mul_[j][k])) {
          throw StructuralError("not associative on (b" + std::to_string(i) + ", b" + std::to_string(j) + ", b" +
                                std::to_string(k) + ")");
        }
      }
    }
  }
  auto inv = linalg::inverse(sigma_);
  if (!inv) throw StructuralError("sigma is not invertible");
  sigma_inv_ = std::move(*inv);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (apply_sigma(mul_[i][j], 1) != product(sigma_[i], sigma_[j])) {
        throw StructuralError("sigma is not multiplicative on (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
      }
    }
  }
}

AbstractAlgebra AbstractAlgebra::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  auto scalar = [](const nlohmann::json& v) -> Scalar {
    if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    throw ParseError("scalar entries must be strings or integers", 0);
  };
  if (!j.is_object() || !j.contains("dim") || !j.contains("mul") || !j.contains("sigma")) {
    throw ParseError("algebra JSON needs \"dim\", \"mul\" and \"sigma\"", 0);
  }
  if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a positive integer", 0);
  const auto d = j["dim"].get<std::size_t>();
  const auto& jm = j["mul"];
  const auto& js = j["sigma"];
  if (!jm.is_array() || jm.size() != d) throw ParseError("\"mul\" must have dim entries", 0);
  if (!js.is_array() || js.size() != d) throw ParseError("\"sigma\" must have dim rows", 0);
  Tensor mul(d, std::vector<Vec>(d, Vec(d)));
  Matrix sigma(d, Vec(d));
  for (std::size_t a = 0; a < d; ++a) {
    if (!jm[a].is_array() || jm[a].size() != d) throw ParseError("mul[i] must have dim entries", 0);
    if (!js[a].is_array() || js[a].size() != d) throw ParseError("sigma rows must have dim entries", 0);
    for (std::size_t b = 0; b < d; ++b) {
      sigma[a][b] = scalar(js[a][b]);
      if (!jm[a][b].is_array() || jm[a][b].size() != d) throw ParseError("mul[i][j] must have dim entries", 0);
      for (std::size_t c = 0; c < d; ++c) mul[a][b][c] = scalar(jm[a][b][c]);
    }
  }
  return AbstractAlgebra(std::move(mul), std::move(sigma));
}

Vec AbstractAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v.at(i) = Scalar(1);
  return v;
}

Vec AbstractAlgebra::product(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!mul_[i][j][k].is_zero()) out[k] += ab * mul_[i][j][k];
      }
    }
  }
  return out;
}

Vec AbstractAlgebra::apply_sigma(const Vec& a, Degree k) const {
  const Matrix& m = k >= 0 ? sigma_ : sigma_inv_;
  Vec cur = a;
  for (Degree s = 0; s < (k >= 0 ? k : -k); ++s) {
    Vec next(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (cur[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) next[j] += cur[i] * m[i][j];
    }
    cur = std::move(next);
  }
  return cur;
}

Matrix AbstractAlgebra::mult_operator(const Vec& a) const {
  const std::size_t d = dim();
  Matrix m(d, Vec(d));
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = product(a, basis_vector(j));
    for (std::size_t k = 0; k < d; ++k) m[k][j] = col[k];
  }
  return m;
}

std::optional<Vec> AbstractAlgebra::unit() const {
  // sum_i u_i mul[i][j][k] = delta_jk, solved as a kernel with one extra column
  const std::size_t d = dim();
  Matrix rows;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      Vec r(d + 1);
      for (std::size_t i = 0; i < d; ++i) r[i] = mul_[i][j][k];
      r[d] = j == k ? Scalar(-1) : Scalar(0);
      rows.push_back(std::move(r));
    }
  }
  for (const auto& v : linalg::nullspace(rows, d + 1)) {
    if (v[d].is_zero()) continue;
    const Scalar s = v[d].inverse();
    Vec u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = v[i] * s;
    return u;
  }
  return std::nullopt;
}

AbstractElement abstract_conv(const AbstractAlgebra& alg, const AbstractElement& f, const AbstractElement& g) {
  AbstractElement out;
  for (const auto& [k, fk] : f) {
    for (const auto& [m, gm] : g) {
      Vec p = alg.product(fk, alg.apply_sigma(gm, k));
      auto [it, inserted] = out.try_emplace(k + m, p);
      if (!inserted) {
        for (std::size_t i = 0; i < p.size(); ++i) it->second[i] += p[i];
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return linalg::is_zero(kv.second); });
  return out;
}

Vec characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier: M_k = A M_(k-1) + c_(n-k+1) I, c_(n-k) = -tr(A M_k) / k
  const std::size_t n = a.size();
  Vec c(n + 1);
  c[n] = Scalar(1);
  Matrix m(n, Vec(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = linalg::multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Matrix prod = linalg::multiply(a, m);
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr / Scalar(static_cast<std::int64_t>(k));
  }
  return c;
}

namespace {

struct GaussInt {
  mpz_class re, im;
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

constexpr unsigned long kDivisorBudget = 2'000'000;

} // namespace

std::optional<std::vector<Scalar>> gaussian_rational_roots(const Vec& coeffs) {
  std::vector<Scalar> roots;
  Vec c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() < 2) return roots;
  if (c[0].is_zero()) {
    roots.push_back(Scalar(0));
    while (c[0].is_zero()) c.erase(c.begin());
  }
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;

  // clear denominators
  mpz_class den = 1;
  for (const auto& s : c) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.re().denominator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.im().denominator().get_mpz_t());
  }
  std::vector<GaussInt> a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    a[k].re = c[k].re().numerator() * (den / c[k].re().denominator());
    a[k].im = c[k].im().numerator() * (den / c[k].im().denominator());
  }
  // y = a_n x turns p into the monic q(y) = y^n + sum_k a_k a_n^(n-1-k) y^k,
  // whose roots in Q(i) are Gaussian integers dividing q(0).
  std::vector<GaussInt> q(n + 1);
  q[n] = {1, 0};
  GaussInt pw{1, 0};
  for (std::size_t k = n; k-- > 0;) {
    q[k] = gmul(a[k], pw);
    pw = gmul(pw, a[n]);
  }
  const mpz_class norm = q[0].re * q[0].re + q[0].im * q[0].im;
  mpz_class root_norm = sqrt(norm);
  if (root_norm > kDivisorBudget) return std::nullopt;
  const unsigned long lim = root_norm.get_ui();
  std::set<std::pair<mpz_class, mpz_class>> tested;

  auto is_root = [&](const GaussInt& y) {
    GaussInt acc = q[n];
    for (std::size_t k = n; k-- > 0;) {
      acc = gmul(acc, y);
      acc.re += q[k].re;
      acc.im += q[k].im;
    }
    return acc.re == 0 && acc.im == 0;
  };
  const Scalar an(Rational(a[n].re, 1), Rational(a[n].im, 1));
  auto try_norm = [&](const mpz_class& d) {
    // all (u, v) with u^2 + v^2 = d
    mpz_class u = 0;
    while (u * u <= d) {
      mpz_class rest = d - u * u;
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class v = sqrt(rest);
        for (int su : {1, -1}) {
          for (int sv : {1, -1}) {
            GaussInt y{u * su, v * sv};
            if (!tested.insert({y.re, y.im}).second) continue;
            if (is_root(y)) roots.push_back(Scalar(Rational(y.re, 1), Rational(y.im, 1)) / an);
          }
        }
      }
      ++u;
    }
  };
  for (unsigned long i = 1; i <= lim; ++i) {
    if (mpz_divisible_ui_p(norm.get_mpz_t(), i) == 0) continue;
    try_norm(mpz_class(i));
    mpz_class other = norm / i;
    if (other != i) try_norm(other);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// Left eigenvectors of `op` (columns act on coordinates) inside the row span `space`
// for eigenvalue lambda: rows v of span(space) with v (op - lambda I) = 0.
Matrix left_eigen_in(const Matrix& space, const Matrix& op, const Scalar& lambda) {
  const std::size_t d = op.size();
  Matrix shifted = op;
  for (std::size_t i = 0; i < d; ++i) shifted[i][i] -= lambda;
  // coefficients t with (t * space) * shifted = 0
  Matrix img = linalg::multiply(space, shifted); // rows: space_r * shifted
  Matrix cons = linalg::transpose(img);
  Matrix out;
  for (const auto& t : linalg::nullspace(cons, space.size())) {
    Vec v(d);
    for (std::size_t r = 0; r < space.size(); ++r) {
      if (t[r].is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) v[c] += t[r] * space[r][c];
    }
    out.push_back(std::move(v));
  }
  return out;
}

[[noreturn]] void not_split() { throw DomainError("not split over the scalar field"); }

Matrix eigen_rows(const AbstractAlgebra& alg, const Vec& a, std::optional<bool>& separating) {
  const std::size_t d = alg.dim();
  Matrix op = alg.mult_operator(a);
  auto roots = gaussian_rational_roots(characteristic_polynomial(op));
  if (!roots || roots->size() != d) {
    separating = false;
    return {};
  }
  Matrix out;
  for (const auto& lam : *roots) {
    Matrix e = left_eigen_in(linalg::identity(d), op, lam);
    out.push_back(e.at(0));
  }
  separating = true;
  return out;
}

Matrix refine_by_basis(const AbstractAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<Matrix> spaces{linalg::identity(d)};
  for (std::size_t k = 0; k < d; ++k) {
    Matrix op = alg.mult_operator(alg.basis_vector(k));
    auto roots = gaussian_rational_roots(characteristic_polynomial(op));
    if (!roots) not_split();
    std::vector<Matrix> next;
    for (const auto& w : spaces) {
      std::size_t covered = 0;
      for (const auto& lam : *roots) {
        Matrix e = left_eigen_in(w, op, lam);
        covered += e.size();
        if (!e.empty()) next.push_back(std::move(e));
      }
      if (covered != w.size()) not_split();
    }
    spaces = std::move(next);
  }
  Matrix out;
  for (auto& w : spaces) {
    if (w.size() != 1) throw DomainError("not semisimple");
    out.push_back(std::move(w[0]));
  }
  return out;
}

} // namespace

GelfandData gelfand_transform(const AbstractAlgebra& alg) {
  const std::size_t d = alg.dim();
  // Nilpotents make the trace form Tr(L_(b_i b_j)) degenerate.
  Matrix trace_form(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix op = alg.mult_operator(alg.mul()[i][j]);
      for (std::size_t k = 0; k < d; ++k) trace_form[i][j] += op[k][k];
    }
  }
  if (linalg::determinant(trace_form).is_zero()) throw DomainError("not semisimple");

  std::vector<Vec> candidates;
  for (std::size_t k = 0; k < d; ++k) candidates.push_back(alg.basis_vector(k));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      for (std::int64_t c1 = -3; c1 <= 3; ++c1) {
        for (std::int64_t c2 = -3; c2 <= 3; ++c2) {
          if (c1 == 0 || c2 == 0) continue;
          Vec v(d);
          v[k] = Scalar(c1);
          v[l] = Scalar(c2);
          candidates.push_back(std::move(v));
        }
      }
    }
  }
  Matrix eig;
  std::optional<Vec> sep;
  for (const auto& a : candidates) {
    std::optional<bool> ok;
    eig = eigen_rows(alg, a, ok);
    if (*ok) {
      sep = a;
      break;
    }
  }
  if (!sep) eig = refine_by_basis(alg);

  // Scale each eigenvector v to a character: s v(b_i^2) = s^2 v_i^2.
  Matrix chars;
  for (auto& v : eig) {
    std::size_t i = 0;
    while (i < d && v[i].is_zero()) ++i;
    if (i == d) throw DomainError("not semisimple");
    Scalar vsq;
    for (std::size_t k = 0; k < d; ++k) vsq += alg.mul()[i][i][k] * v[k];
    if (vsq.is_zero()) throw DomainError("not semisimple");
    const Scalar s = vsq / (v[i] * v[i]);
    for (auto& x : v) x *= s;
    chars.push_back(std::move(v));
  }
  std::sort(chars.begin(), chars.end(), [](const Vec& x, const Vec& y) { return x > y; });
  for (std::size_t c = 0; c + 1 < chars.size(); ++c) {
    if (chars[c] == chars[c + 1]) throw DomainError("not semisimple");
  }
  for (const auto& mu : chars) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Scalar lhs;
        for (std::size_t k = 0; k < d; ++k) lhs += alg.mul()[i][j][k] * mu[k];
        if (lhs != mu[i] * mu[j]) throw std::logic_error("extracted functional is not multiplicative");
      }
    }
  }

  // mu o sigma^-1 evaluated on b_k is mu(sigma^-1 b_k)
  std::vector<Point> perm(d);
  for (std::size_t c = 0; c < d; ++c) {
    Vec img(d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vec pre = alg.apply_sigma(alg.basis_vector(k), -1);
      for (std::size_t l = 0; l < d; ++l) img[k] += pre[l] * chars[c][l];
    }
    auto it = std::find(chars.begin(), chars.end(), img);
    if (it == chars.end()) throw std::logic_error("character set is not closed under the induced action");
    perm[c] = static_cast<Point>(it - chars.begin());
  }
  auto inv = linalg::inverse(chars);
  if (!inv) throw DomainError("not semisimple");
  return GelfandData{alg, chars, DynSystem(std::move(perm)), chars, std::move(*inv), sep};
}

CrossedElement transport_element(const GelfandData& gd, const AbstractElement& f) {
  const std::size_t d = gd.algebra.dim();
  CrossedElement out(d);
  for (const auto& [n, a] : f) {
    if (a.size() != d) throw StructuralError("coefficient vector has the wrong dimension");
    out.add_term(n, Func(linalg::multiply(gd.transform, a)));
  }
  return out;
}

AbstractElement transport_back(const GelfandData& gd, const CrossedElement& f) {
  if (f.points() != gd.algebra.dim()) throw StructuralError("element lives on the wrong number of points");
  AbstractElement out;
  for (const auto& [n, fn] : f.terms()) out.emplace(n, linalg::multiply(gd.inverse_transform, fn.values()));
  return out;
}

TriquivReport triquiv_report(const DynSystem& sys) {
  TriquivReport r;
  // finite discrete X: dense means equal to X, and Per^infinity is empty
  r.per_infinity_dense = !sys.size() || per_infinity(sys) == sys.all_points();
  r.maximal_abelian_detail = is_maximal_abelian(sys);
  r.maximal_abelian = r.maximal_abelian_detail.maximal_abelian;

  r.witness_n = least_period(sys);
  r.witness_point = per_n(sys, r.witness_n).front();
  const std::size_t np = sys.size();
  r.witness_generator = CrossedElement::point_monomial(np, r.witness_point, 0) +
                        CrossedElement::point_monomial(np, r.witness_point, r.witness_n);
  const Degree h = std::max<Degree>(6, r.witness_n + 1);
  r.window = DegreeWindow(-h, h);
  SubspaceWindow ideal =
      generate_ideal_window(sys, {r.witness_generator}, DegreeWindow(-h - r.witness_n, h), r.window);
  r.ideal_window_dim = ideal.dim();
  r.meets_A_dim = intersect_with_graded(ideal, GradedSubspace::coefficient_algebra(np, r.window)).dim();
  const auto basis = ideal.basis();
  r.paired_form_holds = std::all_of(basis.begin(), basis.end(), [&](const CrossedElement& e) {
    return paired_form_check(e, r.witness_n);
  });
  // A nonzero ideal of paired-form elements meets A only in 0.
  r.every_ideal_meets_A = !(r.ideal_window_dim > 0 && r.meets_A_dim == 0 && r.paired_form_holds);
  r.agree = r.per_infinity_dense == r.maximal_abelian && r.maximal_abelian == r.every_ideal_meets_A;
  return r;
}

TriquivReport triquiv_report(const GelfandData& gd) { return triquiv_report(gd.induced_system); }

} // namespace xprod
