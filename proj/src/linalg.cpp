#include "xprod/linalg.hpp"

#include <algorithm>

#include "xprod/errors.hpp"

namespace xprod::linalg {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  }
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [c, s] : v) out.at(c) = s;
  return out;
}

std::vector<std::size_t> rref(Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t k = c; k < ncols; ++k) {
      if (!rows[r][k].is_zero()) rows[r][k] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank(Matrix rows) { return rref(rows).size(); }

Matrix nullspace(const Matrix& rows, std::size_t ncols) {
  Matrix m = rows;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  rref(out);
  return out;
}

std::optional<Vec> coordinates_in_rref(const Matrix& basis, const std::vector<std::size_t>& pivots, const Vec& v) {
  Vec coords(basis.size());
  Vec rest = v;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    coords[r] = v[pivots[r]];
    if (coords[r].is_zero()) continue;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (!basis[r][k].is_zero()) rest[k] -= coords[r] * basis[r][k];
    }
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw StructuralError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  Matrix out(a.size(), Vec(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw StructuralError("matrix dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Vec multiply(const Matrix& a, const Vec& v) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw StructuralError("matrix-vector dimension mismatch");
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!a[i][k].is_zero() && !v[k].is_zero()) out[i] += a[i][k] * v[k];
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m.front().size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!m[c][k].is_zero()) m[i][k] -= f * m[c][k];
      }
    }
  }
  return det;
}

void EchelonBuilder::reduce(Vec& work, std::vector<std::pair<std::size_t, Scalar>>* trace) const {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (work[c].is_zero()) continue;
    auto it = pivot_.find(c);
    if (it == pivot_.end()) continue;
    const Row& row = rows_[it->second];
    Scalar f = work[c];
    for (std::size_t k = c; k < ncols_; ++k) {
      if (!row.values[k].is_zero()) work[k] -= f * row.values[k];
    }
    if (trace) trace->emplace_back(it->second, std::move(f));
  }
}

bool EchelonBuilder::insert(const SparseVec& v, std::size_t label) {
  if (v.empty()) return false;
  for (auto& s : work_) s = Scalar();
  for (const auto& [c, s] : v) work_.at(c) = s;
  std::vector<std::pair<std::size_t, Scalar>> trace;
  reduce(work_, &trace);
  std::size_t lead = ncols_;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (!work_[c].is_zero()) {
      lead = c;
      break;
    }
  }
  if (lead == ncols_) return false;

  Scalar inv = work_[lead].inverse();
  Row row;
  row.values = work_;
  for (auto& s : row.values) {
    if (!s.is_zero()) s *= inv;
  }
  // new row = inv * (v - sum f_r * row_r)
  std::map<std::size_t, Scalar> comb;
  comb[label] = Scalar(1);
  for (const auto& [r, f] : trace) {
    for (const auto& [l, c] : rows_[r].comb) comb[l] -= f * c;
  }
  for (auto& [l, c] : comb) {
    if (c.is_zero()) continue;
    row.comb.emplace_back(l, c * inv);
  }
  pivot_[lead] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBuilder::contains(const SparseVec& v) const {
  Vec work(ncols_);
  for (const auto& [c, s] : v) work.at(c) = s;
  reduce(work, nullptr);
  return is_zero(work);
}

std::vector<EchelonBuilder::Row> EchelonBuilder::finalize() const {
  std::vector<Row> out;
  std::vector<std::size_t> pivots;
  for (const auto& [c, r] : pivot_) {
    out.push_back(rows_[r]);
    pivots.push_back(c);
  }
  // Back-substitute so every pivot column is zero outside its own row.
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j].values[pc].is_zero()) continue;
      Scalar f = out[j].values[pc];
      for (std::size_t k = pc; k < ncols_; ++k) {
        if (!out[i].values[k].is_zero()) out[j].values[k] -= f * out[i].values[k];
      }
      std::map<std::size_t, Scalar> comb(out[j].comb.begin(), out[j].comb.end());
      for (const auto& [l, c] : out[i].comb) comb[l] -= f * c;
      out[j].comb.clear();
      for (auto& [l, c] : comb) {
        if (!c.is_zero()) out[j].comb.emplace_back(l, c);
      }
    }
  }
  return out;
}

} // namespace xprod::linalg
