#pragma once

#include <string>
#include <vector>

#include "pvf/errors.hpp"
#include "pvf/rational.hpp"

namespace pvf {

/// Square n x n matrix of rationals, row-major, 0-based access.
class LinearMatrix {
 public:
  explicit LinearMatrix(int dim);
  LinearMatrix(int dim, std::vector<Rational> row_major);

  static LinearMatrix identity(int dim);
  static LinearMatrix diagonal(const std::vector<Rational>& entries);
  /// Rows given as nested lists; all rows must have the same length as the list.
  static LinearMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int dim() const { return dim_; }
  const Rational& operator()(int row, int col) const { return entries_[index(row, col)]; }
  Rational& operator()(int row, int col) { return entries_[index(row, col)]; }

  Rational trace() const;
  Rational determinant() const;
  LinearMatrix transpose() const;
  /// Throws SingularMatrixError for a zero determinant.
  LinearMatrix inverse() const;

  friend LinearMatrix operator*(const LinearMatrix& a, const LinearMatrix& b);
  friend LinearMatrix operator+(const LinearMatrix& a, const LinearMatrix& b);
  friend LinearMatrix operator*(const Rational& s, const LinearMatrix& a);
  friend bool operator==(const LinearMatrix& a, const LinearMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<Rational> entries_;
};

}  // namespace pvf
