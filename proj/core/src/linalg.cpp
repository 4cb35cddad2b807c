#include "pantsbd/linalg.hpp"

#include <cmath>
#include <utility>

namespace pantsbd {

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend backend)
    : rows_(rows), cols_(cols), backend_(backend), data_(rows * cols, Scalar::zero(backend)) {}

Matrix Matrix::identity(std::size_t n, Backend backend) {
  Matrix m(n, n, backend);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(backend);
  return m;
}

Matrix Matrix::from_columns(std::span<const VecN> columns) {
  if (columns.empty()) return Matrix(0, 0, Backend::exact);
  const std::size_t n = columns.front().size();
  if (n == 0) throw DomainError("empty column vector");
  Matrix m(n, columns.size(), columns.front().front().backend());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

VecN Matrix::column(std::size_t j) const {
  VecN v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
  Matrix out(lhs.rows_, rhs.cols_, lhs.backend_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

VecN operator*(const Matrix& lhs, const VecN& rhs) {
  if (lhs.cols_ != rhs.size()) throw DomainError("matrix-vector dimension mismatch");
  VecN out(lhs.rows_, Scalar::zero(lhs.backend_));
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) out[i] += lhs(i, k) * rhs[k];
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

namespace {

Scalar bareiss(Matrix& m) {
  const std::size_t n = m.rows();
  int sign = 1;
  Scalar prev = Scalar::one(Backend::exact);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Scalar::zero(Backend::exact);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: the quotient is an integer polynomial in the entries.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Scalar partial_pivot_lu(Matrix& m) {
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::fabs(m(k, k).to_double());
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(m(i, k).to_double());
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) return Scalar::floating(0.0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    const double pkk = m(k, k).to_double();
    det *= pkk;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k).to_double() / pkk;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = Scalar::floating(m(i, j).to_double() - f * m(k, j).to_double());
      }
    }
  }
  return Scalar::floating(det);
}

}  // namespace

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar::one(m.backend());
  return m.backend() == Backend::exact ? bareiss(m) : partial_pivot_lu(m);
}

std::size_t rank(Matrix m, double tol) {
  const bool exact = m.backend() == Backend::exact;
  if (!exact) {
    // Rank ignores column scale; unit columns make tol a relative bound.
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double norm = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) norm = std::hypot(norm, m(i, j).to_double());
      if (norm == 0.0) continue;
      const Scalar inv = Scalar::floating(1.0 / norm);
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) *= inv;
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    double best = 0.0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (exact) {
        if (!m(i, c).is_zero()) {
          pivot = i;
          break;
        }
      } else {
        const double v = std::fabs(m(i, c).to_double());
        if (v > tol && v > best) {
          best = v;
          pivot = i;
        }
      }
    }
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace pantsbd
