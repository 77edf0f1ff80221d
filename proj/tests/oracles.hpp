// Independent reference computations for the tests. Nothing here calls the
// library's elimination, rewriting or operator code.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weil/matrix.hpp"

namespace oracle {

using weil::Matrix;
using weil::Scalar;

/// Rank by textbook Gaussian elimination with rational division.
inline std::size_t dense_rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      Scalar t = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= t * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t nullity(const Matrix& m) { return m.cols() - dense_rank(m); }

/// Matrix of a linear map given by its columns (images of basis vectors).
inline Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
  Matrix m = Matrix::zero(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

/// Word in Clifford generators reduced by adjacent transpositions with
/// x_b x_a = -x_a x_b + B_ab and x_a x_a = B_aa / 2.
using CliffordWord = std::vector<std::size_t>;
inline std::map<CliffordWord, Scalar> clifford_reduce(const Matrix& B, const CliffordWord& w) {
  std::map<CliffordWord, Scalar> done;
  std::vector<std::pair<CliffordWord, Scalar>> todo{{w, Scalar(1)}};
  while (!todo.empty()) {
    auto [word, c] = todo.back();
    todo.pop_back();
    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] < word[i + 1]) ++i;
    if (i + 1 >= word.size()) {
      done[word] += c;
      continue;
    }
    const std::size_t a = word[i], b = word[i + 1];
    CliffordWord rest(word.begin(), word.begin() + static_cast<long>(i));
    rest.insert(rest.end(), word.begin() + static_cast<long>(i) + 2, word.end());
    if (a == b) {
      todo.emplace_back(rest, c * B(a, a) / Scalar(2));
    } else {
      CliffordWord swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      todo.emplace_back(swapped, -c);
      if (!B(a, b).is_zero()) todo.emplace_back(rest, c * B(a, b));
    }
  }
  std::map<CliffordWord, Scalar> out;
  for (auto& [k, v] : done)
    if (!v.is_zero()) out.emplace(k, v);
  return out;
}

/// Parity of the permutation sorting `idx` (distinct entries), by counting
/// inversions.
inline int permutation_sign(const std::vector<std::size_t>& idx) {
  int inv = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace oracle
