#pragma once

#include <vector>

#include "pvf/rational.hpp"

namespace pvf {

using RationalVector = std::vector<Rational>;

/// Dense rational matrix used for the exact kernel computations.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  /// Matrix whose rows are the given vectors (all of equal length).
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form over Q with zero rows dropped.
RationalMatrix rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : M v = 0}. Rows are cleared to integers and eliminated
/// fraction-free (Bareiss); every basis vector is a primitive integer vector.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Row spaces of the two vector families coincide.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t cols);

/// Indices of a maximal linearly independent subfamily, chosen greedily.
std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors,
                                            std::size_t cols);

}  // namespace pvf
