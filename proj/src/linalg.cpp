#include "pvf/linalg.hpp"

#include <utility>

#include "pvf/errors.hpp"

namespace pvf {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix rref(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::size_t rank_so_far = 0;
  for (std::size_t col = 0; col < m.cols() && rank_so_far < m.rows(); ++col) {
    std::size_t pivot = rank_so_far;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank_so_far, c));
    Rational p = m(rank_so_far, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(rank_so_far, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank_so_far || is_zero(m(r, col))) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank_so_far, c);
    }
    ++rank_so_far;
  }
  RationalMatrix out(rank_so_far, m.cols());
  for (std::size_t r = 0; r < rank_so_far; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rows(); }

namespace {

// Integer echelon form by Bareiss elimination. Returns pivot columns.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / previous;
      }
      a[i][col] = 0;
    }
    previous = a[r][col];
    pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm_den = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(r, c).get_den_mpz_t());
    std::vector<Integer> row(cols);
    bool nonzero = false;
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = m(r, c).get_num() * (lcm_den / m(r, c).get_den());
      nonzero = nonzero || sgn(row[c]) != 0;
    }
    if (nonzero) a.push_back(std::move(row));
  }
  auto pivots = bareiss_echelon(a, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    // Back substitution on the echelon rows, last pivot first.
    for (std::size_t i = pivots.size(); i-- > 0;) {
      std::size_t pc = pivots[i];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(a[i][j]) != 0 && !is_zero(v[j])) s += Rational(a[i][j]) * v[j];
      }
      v[pc] = -s / Rational(a[i][pc]);
    }
    // Scale to a primitive integer vector.
    Integer den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    for (auto& x : v) {
      x *= Rational(den);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (sgn(g) != 0) {
      for (auto& x : v) x /= Rational(g);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t cols) {
  auto ra = rref(RationalMatrix::from_rows(a, cols));
  auto rb = rref(RationalMatrix::from_rows(b, cols));
  if (ra.rows() != rb.rows()) return false;
  for (std::size_t r = 0; r < ra.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (ra(r, c) != rb(r, c)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors,
                                            std::size_t cols) {
  std::vector<std::size_t> chosen;
  std::vector<RationalVector> kept;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    kept.push_back(vectors[i]);
    if (rank(RationalMatrix::from_rows(kept, cols)) == kept.size()) {
      chosen.push_back(i);
    } else {
      kept.pop_back();
    }
  }
  return chosen;
}

}  // namespace pvf
