#pragma once

#include <cstdint>
#include <random>

#include "pvf/linear_matrix.hpp"
#include "pvf/tensor.hpp"

namespace pvf {

/// Seeded source of small random test data.
class RandomFields {
 public:
  explicit RandomFields(std::uint64_t seed) : engine_(seed) {}

  /// Integer in [lo, hi].
  int integer(int lo, int hi);

  /// Homogeneous (k, l) field with `terms` random terms, coefficients in
  /// [-bound, bound]. May come out zero after cancellation.
  PolyVectorField field(int n, int k, int ell, int terms, int bound = 3);

  /// Integer matrix with entries in [-bound, bound], resampled until invertible.
  LinearMatrix invertible_matrix(int n, int bound = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pvf
