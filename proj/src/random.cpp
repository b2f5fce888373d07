#include "pvf/random.hpp"

#include <algorithm>
#include <numeric>

namespace pvf {

int RandomFields::integer(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(engine_);
}

PolyVectorField RandomFields::field(int n, int k, int ell, int terms, int bound) {
  PolyVectorField out(n);
  if (ell > n || ell < 0 || k < 0) return out;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int d = 0; d < k; ++d) ++exps[static_cast<std::size_t>(integer(0, n - 1))];
    std::shuffle(all.begin(), all.end(), engine_);
    std::vector<int> idx(all.begin(), all.begin() + ell);
    int c = 0;
    while (c == 0) c = integer(-bound, bound);
    out += PolyVectorField::term(n, c, exps, idx);
  }
  return out;
}

LinearMatrix RandomFields::invertible_matrix(int n, int bound) {
  for (;;) {
    LinearMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = integer(-bound, bound);
    }
    if (!is_zero(m.determinant())) return m;
  }
}

}  // namespace pvf
