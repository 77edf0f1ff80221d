#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weil/scalar.hpp"

namespace weil {

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws ShapeError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& c);
  /// Matrix unit E_{ij}.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  /// True when the matrix is c*I; stores c.
  bool is_scalar_multiple(Scalar* c = nullptr) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  Matrix transpose() const;
  Scalar trace() const;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// ab - ba. Both must be square of equal size.
Matrix mat_commutator(const Matrix& a, const Matrix& b);

}  // namespace weil
