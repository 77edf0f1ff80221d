#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weil/matrix.hpp"

namespace weil {

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

/// Row-reduced echelon data of a linear system over the rationals, computed
/// by fraction-free elimination on integer rows. Pivot rule: leftmost
/// nonzero column, lowest row index.
class Echelon {
 public:
  Echelon(const std::vector<SparseRow>& rows, std::size_t cols);
  explicit Echelon(const Matrix& m);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  /// Basis of the right kernel, one vector per free column (ascending). Each
  /// vector has a 1 at its free column and 0 at every other free column.
  std::vector<Vector> kernel() const;
  /// The same basis in sparse form.
  std::vector<SparseRow> sparse_kernel() const;

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  // Fully reduced pivot rows, stored as rationals normalised to a leading 1.
  std::vector<SparseRow> reduced_;
};

/// Kernel basis of m as column matrices (m.cols() x 1).
std::vector<Matrix> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);
/// True when span(inner) is contained in span(outer).
bool span_contains(const std::vector<Vector>& outer,
                   const std::vector<Vector>& inner, std::size_t dim);
bool span_equal(const std::vector<Vector>& a, const std::vector<Vector>& b,
                std::size_t dim);

// Sparse counterparts; rows must satisfy the SparseRow invariants.
std::size_t rank_of(const std::vector<SparseRow>& rows, std::size_t dim);
bool span_contains(const std::vector<SparseRow>& outer,
                   const std::vector<SparseRow>& inner, std::size_t dim);
bool span_equal(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                std::size_t dim);

SparseRow to_sparse(const Vector& v);
Vector apply(const Matrix& m, const Vector& v);

}  // namespace weil
