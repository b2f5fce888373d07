#pragma once

#include <string>
#include <vector>

#include "pvf/linalg.hpp"
#include "pvf/space.hpp"
#include "support.hpp"

// Published classification data: cubic cases in dimension 3 and the three
// quadratic examples in dimension 4.
namespace fixtures {

using pvf::LinearMatrix;
using pvf::PolyDifferentialForm;
using pvf::PolyVectorField;
using pvf::Rational;
using support::F;
using support::M;
using support::T;

struct CubicCase {
  std::string name;
  LinearMatrix c;
  std::size_t kernel_dim;
  std::size_t tracefree_dim;
  std::vector<PolyVectorField> listed;
};

// x, y, z are x1, x2, x3.
inline std::vector<CubicCase> cubic_cases() {
  auto q = [](Rational c, std::vector<int> e, int j) { return T(3, c, e, {j}); };
  return {
      {"A.1.2", LinearMatrix::diagonal({1, 2, -3}), 1, 1, {q(1, {2, 0, 0}, 2)}},
      {"A.2",
       LinearMatrix::diagonal({0, 1, -1}),
       6,
       6,
       {q(1, {0, 2, 0}, 1), q(1, {0, 0, 2}, 1), q(1, {0, 1, 1}, 1),
        q(1, {2, 0, 0}, 1) - q(1, {1, 1, 0}, 2) - q(1, {1, 0, 1}, 3),
        q(1, {2, 0, 0}, 1) - q(3, {1, 1, 0}, 2) + q(1, {1, 0, 1}, 3),
        q(1, {2, 0, 0}, 1) + q(1, {1, 1, 0}, 2) - q(3, {1, 0, 1}, 3)}},
      {"B.2",
       M({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
       8,
       6,
       {q(1, {0, 0, 2}, 3) - q(1, {1, 0, 1}, 1) - q(1, {0, 1, 1}, 2),
        q(3, {1, 0, 1}, 3) - q(1, {2, 0, 0}, 1) - q(1, {1, 1, 0}, 2), q(1, {2, 0, 0}, 2), q(1, {0, 0, 2}, 2),
        q(1, {1, 0, 1}, 2), q(1, {2, 0, 0}, 3)}},
      {"C",
       M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
       4,
       3,
       {q(1, {2, 0, 0}, 3), q(1, {1, 1, 0}, 3) - q(1, {2, 0, 0}, 2),
        q(1, {1, 1, 0}, 2) + q(1, {2, 0, 0}, 1) + q(2, {0, 2, 0}, 3) - q(3, {1, 0, 1}, 3)}},
      {"D.2",
       M({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}),
       3,
       3,
       {q(1, {0, 2, 0}, 3) + q(1, {2, 0, 0}, 3), q(1, {0, 1, 1}, 1) - q(1, {1, 0, 1}, 2),
        q(1, {1, 0, 1}, 1) + q(1, {0, 1, 1}, 2)}},
  };
}

// t, x, y, z are x1, ..., x4; dt is index 1.
inline PolyDifferentialForm poly(std::vector<std::pair<Rational, std::vector<int>>> terms) {
  PolyDifferentialForm p(4);
  for (const auto& [c, e] : terms) p += F(4, c, e, {});
  return p;
}

inline PolyDifferentialForm dx(int i) { return F(4, 1, {0, 0, 0, 0}, {i}); }

inline LinearMatrix quad_first_matrix() { return LinearMatrix::diagonal({1, 2, 4, -7}); }

inline std::vector<PolyDifferentialForm> quad_first_listed() {
  return {F(4, 1, {0, 1, 1, 1}, {1}), F(4, 1, {1, 0, 1, 1}, {2}), F(4, 1, {1, 1, 0, 1}, {3}),
          F(4, 1, {1, 1, 1, 0}, {4})};
}

inline LinearMatrix quad_second_matrix() { return M({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}); }

/// Printed family, parameters in the order alpha1, alpha2, delta1, delta2,
/// beta1, beta2, gamma1, gamma2.
inline std::vector<PolyDifferentialForm> quad_second_family() {
  using pvf::wedge;
  auto ty = poly({{1, {1, 0, 1, 0}}});
  auto w = poly({{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}});  // tz - xy
  auto first = wedge(poly({{1, {0, 0, 0, 1}}}), dx(1)) - wedge(poly({{1, {0, 0, 1, 0}}}), dx(2));   // z dt - y dx
  auto second = wedge(poly({{1, {1, 0, 0, 0}}}), dx(4)) - wedge(poly({{1, {0, 1, 0, 0}}}), dx(3));  // t dz - x dy
  auto y_dt = wedge(poly({{1, {0, 0, 1, 0}}}), dx(1));
  auto t_dy = wedge(poly({{1, {1, 0, 0, 0}}}), dx(3));
  return {wedge(ty, y_dt), wedge(ty, t_dy), wedge(w, first), wedge(w, second),
          wedge(ty, first), wedge(ty, second), wedge(w, y_dt), wedge(w, t_dy)};
}

inline LinearMatrix quad_third_matrix() { return M({{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, 0, -1, 2}, {0, 0, -2, -1}}); }

/// Parameters alpha1, alpha2, beta1, beta2.
inline std::vector<PolyDifferentialForm> quad_third_family() {
  using pvf::wedge;
  auto yz = poly({{1, {0, 0, 2, 0}}, {1, {0, 0, 0, 2}}});
  auto tx = poly({{1, {2, 0, 0, 0}}, {1, {0, 2, 0, 0}}});
  auto v = [](int var) {
    std::vector<int> e(4, 0);
    e[static_cast<std::size_t>(var - 1)] = 1;
    return poly({{1, e}});
  };
  auto a1 = wedge(v(2), dx(1)) - wedge(v(1), dx(2));  // x dt - t dx
  auto a2 = wedge(v(1), dx(1)) + wedge(v(2), dx(2));  // t dt + x dx
  auto b1 = wedge(v(4), dx(3)) - wedge(v(3), dx(4));  // z dy - y dz
  auto b2 = wedge(v(3), dx(3)) + wedge(v(4), dx(4));  // y dy + z dz
  return {wedge(yz, a1), wedge(yz, a2), wedge(tx, b1), wedge(tx, b2)};
}

template <class Tag>
std::vector<pvf::RationalVector> coordinates(const std::vector<pvf::GradedTensor<Tag>>& items, int n, int k,
                                             int ell) {
  pvf::HomogeneousBasis<Tag> basis(n, k, ell);
  std::vector<pvf::RationalVector> out;
  for (const auto& t : items) out.push_back(basis.coordinates(t));
  return out;
}

template <class Tag>
bool same_span(const std::vector<pvf::GradedTensor<Tag>>& a, const std::vector<pvf::GradedTensor<Tag>>& b, int n,
               int k, int ell) {
  pvf::HomogeneousBasis<Tag> basis(n, k, ell);
  return pvf::same_span(coordinates(a, n, k, ell), coordinates(b, n, k, ell), basis.size());
}

}  // namespace fixtures
