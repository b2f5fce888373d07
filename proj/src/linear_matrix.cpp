#include "pvf/linear_matrix.hpp"

#include <utility>

namespace pvf {

LinearMatrix::LinearMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Rational(0));
}

LinearMatrix::LinearMatrix(int dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim < 1 || entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw DimensionError("matrix must be square");
  }
}

LinearMatrix LinearMatrix::identity(int dim) {
  LinearMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

LinearMatrix LinearMatrix::diagonal(const std::vector<Rational>& entries) {
  LinearMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

LinearMatrix LinearMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int n = static_cast<int>(rows.size());
  LinearMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DimensionError("matrix must be square");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Rational LinearMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Rational LinearMatrix::determinant() const {
  LinearMatrix a = *this;
  Rational det = 1;
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r) {
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < dim_; ++r) {
      if (is_zero(a(r, col))) continue;
      Rational f = a(r, col) / a(col, col);
      for (int j = col; j < dim_; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

LinearMatrix LinearMatrix::transpose() const {
  LinearMatrix t(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

LinearMatrix LinearMatrix::inverse() const {
  LinearMatrix a = *this;
  LinearMatrix inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r) {
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError("matrix is singular");
    for (int j = 0; j < dim_; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    Rational p = a(col, col);
    for (int j = 0; j < dim_; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (int j = 0; j < dim_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

LinearMatrix operator*(const LinearMatrix& a, const LinearMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
  LinearMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int k = 0; k < a.dim(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (int j = 0; j < a.dim(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

LinearMatrix operator+(const LinearMatrix& a, const LinearMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
  LinearMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

LinearMatrix operator*(const Rational& s, const LinearMatrix& a) {
  LinearMatrix c = a;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) c(i, j) *= s;
  }
  return c;
}

}  // namespace pvf
