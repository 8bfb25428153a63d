#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "xprod/scalar.hpp"

namespace xprod::linalg {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>; // row-major; every row has the same length
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>; // sorted by column, no zeros

bool is_zero(const Vec& v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

// Reduced row echelon form in place: pivot = leftmost nonzero column, scaled to 1,
// zero rows dropped, rows ordered by pivot column. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& rows);

std::size_t rank(Matrix rows);

// Basis (in RREF) of {v : row . v = 0 for every row}. `ncols` is needed when rows is empty.
Matrix nullspace(const Matrix& rows, std::size_t ncols);

// Coordinates of v in a basis that is already in RREF with the given pivots, or
// nullopt when v is outside the span.
std::optional<Vec> coordinates_in_rref(const Matrix& basis, const std::vector<std::size_t>& pivots, const Vec& v);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Vec multiply(const Matrix& a, const Vec& v);
Matrix transpose(const Matrix& m);
Matrix identity(std::size_t n);
Scalar determinant(Matrix m);

/*
 * Incremental row reduction over sparse input vectors that remembers, for every
 * basis row, how it was obtained as a combination of the inserted vectors.
 * Inserted vectors are identified by caller-chosen labels; only vectors that
 * were independent at insertion time are retained.
 */
class EchelonBuilder {
public:
  struct Row {
    Vec values;                                       // dense
    std::vector<std::pair<std::size_t, Scalar>> comb; // label -> coefficient
  };

  explicit EchelonBuilder(std::size_t ncols) : ncols_(ncols), work_(ncols) {}

  // Returns true if v was independent of the rows so far (and was added).
  bool insert(const SparseVec& v, std::size_t label);
  bool contains(const SparseVec& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ncols() const noexcept { return ncols_; }

  // Canonical RREF rows (ordered by pivot) together with their label combinations.
  std::vector<Row> finalize() const;

private:
  // Reduces work_ in place; records (row, factor) pairs when `trace` is given.
  void reduce(Vec& work, std::vector<std::pair<std::size_t, Scalar>>* trace) const;

  std::size_t ncols_;
  std::vector<Row> rows_;                     // each row's pivot entry is 1 and leads
  std::map<std::size_t, std::size_t> pivot_;  // pivot column -> row index
  Vec work_;
};

} // namespace xprod::linalg
