#pragma once

#include <vector>

#include "pvf/linear_matrix.hpp"
#include "pvf/random.hpp"
#include "pvf/tensor.hpp"

namespace support {

using pvf::PolyDifferentialForm;
using pvf::PolyVectorField;
using pvf::Rational;

inline PolyVectorField T(int n, const Rational& c, std::vector<int> exps, std::vector<int> idx) {
  return PolyVectorField::term(n, c, exps, idx);
}

inline PolyDifferentialForm F(int n, const Rational& c, std::vector<int> exps, std::vector<int> idx) {
  return PolyDifferentialForm::term(n, c, exps, idx);
}

inline pvf::LinearMatrix M(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (long v : r) q.back().push_back(v);
  }
  return pvf::LinearMatrix::from_rows(q);
}

/// Nonzero sparse homogeneous field with n in {2,3,4}, k <= 3, l <= n.
inline PolyVectorField random_field(pvf::RandomFields& rng, int n) {
  for (;;) {
    auto f = rng.field(n, rng.integer(0, 3), rng.integer(0, n), rng.integer(1, 4));
    if (!f.is_zero()) return f;
  }
}

inline int grade(const PolyVectorField& u) { return u.is_zero() ? 0 : u.terms().begin()->first.grade(); }

inline int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace support
