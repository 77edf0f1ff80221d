#include "weil/nullspace.hpp"

#include <algorithm>
#include <map>

namespace weil {

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Clear denominators, then divide out the content so the leading entry is a
// positive primitive integer.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) {
    const mpz_class& den = v.value().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    mpz_class n = v.value().get_num() * (l / v.value().get_den());
    out.emplace_back(c, std::move(n));
  }
  make_primitive(out);
  return out;
}

const mpz_class* entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target <- p_lead * target - t_col * pivot, with t_col the entry of target in
// the pivot column. The pivot column entry cancels.
IntRow eliminate(const IntRow& target, const IntRow& pivot, std::size_t col) {
  const mpz_class& p = *entry(pivot, col);
  const mpz_class t = *entry(target, col);
  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, p * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -t * pivot[j].second);
      ++j;
    } else {
      mpz_class v = p * target[i].second - t * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

Echelon::Echelon(const std::vector<SparseRow>& rows, std::size_t cols)
    : cols_(cols) {
  std::vector<IntRow> work;
  work.reserve(rows.size());
  // Bucket by leading column; within a bucket rows stay ordered by index.
  std::map<std::size_t, std::map<std::size_t, std::size_t>> buckets;
  for (const auto& r : rows) {
    for (const auto& [c, v] : r)
      if (c >= cols) throw ShapeError("sparse row column out of range");
    work.push_back(to_integer_row(r));
    if (!work.back().empty())
      buckets[work.back().front().first][work.size() - 1] = work.size() - 1;
  }

  std::vector<IntRow> pivot_rows;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    auto& members = node.mapped();
    const std::size_t pivot_index = members.begin()->first;
    IntRow pivot = std::move(work[pivot_index]);
    members.erase(members.begin());
    for (const auto& [idx, unused] : members) {
      IntRow reduced = eliminate(work[idx], pivot, col);
      if (!reduced.empty()) {
        std::size_t lead = reduced.front().first;
        work[idx] = std::move(reduced);
        buckets[lead][idx] = idx;
      }
    }
    pivots_.push_back(col);
    pivot_rows.push_back(std::move(pivot));
  }

  // Back substitution to reduced form.
  for (std::size_t k = pivot_rows.size(); k-- > 0;) {
    const std::size_t col = pivots_[k];
    for (std::size_t i = 0; i < k; ++i)
      if (entry(pivot_rows[i], col))
        pivot_rows[i] = eliminate(pivot_rows[i], pivot_rows[k], col);
  }

  reduced_.reserve(pivot_rows.size());
  for (const auto& row : pivot_rows) {
    const mpz_class& lead = row.front().second;
    SparseRow r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) r.emplace_back(c, Scalar(mpq_class(v, lead)));
    reduced_.push_back(std::move(r));
  }
}

namespace {

std::vector<SparseRow> dense_rows(const Matrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) rows[r].emplace_back(c, m(r, c));
  return rows;
}

}  // namespace

Echelon::Echelon(const Matrix& m) : Echelon(dense_rows(m), m.cols()) {}

std::vector<Vector> Echelon::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free_index(cols_, 0);
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = basis.size();
    Vector v(cols_);
    v[c] = Scalar(1);
    basis.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (const auto& [c, v] : reduced_[k])
      if (c != p) basis[free_index[c]][p] = -v;
  }
  return basis;
}

std::vector<SparseRow> Echelon::sparse_kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free_index(cols_, 0);
  std::vector<SparseRow> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = basis.size();
    basis.push_back({{c, Scalar(1)}});
  }
  // Pivots ascend, so appending keeps every row sorted after the final sort
  // of the leading free entry.
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (const auto& [c, v] : reduced_[k])
      if (c != p) basis[free_index[c]].emplace_back(p, -v);
  }
  for (auto& row : basis)
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return basis;
}

std::vector<Matrix> nullspace(const Matrix& m) {
  std::vector<Matrix> out;
  for (const auto& v : Echelon(m).kernel()) {
    Matrix col(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
    out.push_back(std::move(col));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return Echelon(m).rank(); }

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(i, v[i]);
  return r;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw ShapeError("vector length mismatch");
    rows.push_back(to_sparse(v));
  }
  return Echelon(rows, dim).rank();
}

std::size_t rank_of(const std::vector<SparseRow>& rows, std::size_t dim) {
  return Echelon(rows, dim).rank();
}

bool span_contains(const std::vector<SparseRow>& outer,
                   const std::vector<SparseRow>& inner, std::size_t dim) {
  std::vector<SparseRow> stacked = outer;
  stacked.insert(stacked.end(), inner.begin(), inner.end());
  return rank_of(stacked, dim) == rank_of(outer, dim);
}

bool span_equal(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                std::size_t dim) {
  return rank_of(a, dim) == rank_of(b, dim) && span_contains(a, b, dim);
}

bool span_contains(const std::vector<Vector>& outer,
                   const std::vector<Vector>& inner, std::size_t dim) {
  std::vector<Vector> stacked = outer;
  stacked.insert(stacked.end(), inner.begin(), inner.end());
  return rank_of(stacked, dim) == rank_of(outer, dim);
}

bool span_equal(const std::vector<Vector>& a, const std::vector<Vector>& b,
                std::size_t dim) {
  return rank_of(a, dim) == rank_of(b, dim) && span_contains(a, b, dim);
}

Vector apply(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace weil
