#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pantsbd/scalar.hpp"

namespace pantsbd {

/// Coordinates of a vector in R^n relative to the monomial basis
/// X^{n-1}, X^{n-2}Y, ..., Y^{n-1}.
using VecN = std::vector<Scalar>;

/// Dense row-major matrix of Scalars sharing one backend.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Backend backend);

  static Matrix identity(std::size_t n, Backend backend);
  /// Matrix whose j-th column is columns[j]. All columns must have equal length.
  static Matrix from_columns(std::span<const VecN> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Backend backend() const noexcept { return backend_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VecN column(std::size_t j) const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend VecN operator*(const Matrix& lhs, const VecN& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Backend backend_ = Backend::exact;
  std::vector<Scalar> data_;
};

/// Determinant of a square matrix. Exact backend: fraction-free Bareiss
/// elimination. Float backend: LU with partial pivoting.
/// The empty (0x0) matrix has determinant 1.
Scalar determinant(Matrix m);

/// Rank by Gaussian elimination. Float backend scales columns to unit
/// length first and treats |pivot| <= tol as zero.
std::size_t rank(Matrix m, double tol = 1e-9);

}  // namespace pantsbd
