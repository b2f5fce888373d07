#include <doctest.h>

#include "fixtures.hpp"
#include "pvf/classifier.hpp"
#include "pvf/decomposition.hpp"
#include "pvf/duality.hpp"
#include "pvf/field_algebra.hpp"
#include "pvf/structures.hpp"

using namespace pvf;
using support::F;
using support::M;
using support::T;

namespace {

PolyVectorField q(Rational c, std::vector<int> e, int j) { return T(3, c, e, {j}); }

const fixtures::CubicCase& find_case(const std::vector<fixtures::CubicCase>& cases, const std::string& name) {
  for (const auto& c : cases) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no case " + name);
}

PolyDifferentialForm combine(const std::vector<PolyDifferentialForm>& family, const RationalVector& c) {
  PolyDifferentialForm theta(4);
  for (std::size_t i = 0; i < family.size(); ++i) theta += c[i] * family[i];
  return theta;
}

PolyDifferentialForm square_of_d(const PolyDifferentialForm& theta) {
  auto d = exterior_derivative(theta);
  return wedge(d, d);
}

}  // namespace

TEST_CASE("display field orientation") {
  CHECK(display_field(M({{0, 1}, {0, 0}})) == T(2, 1, {1, 0}, {2}));
  CHECK(display_field(LinearMatrix::diagonal({1, 2})) == T(2, 1, {1, 0}, {1}) + T(2, 2, {0, 1}, {2}));
  auto order = cubic_display_order();
  REQUIRE(order.size() == 20);
  CHECK(order.front() == std::vector<int>{1, 1, 1, 0});
  CHECK(order[4] == std::vector<int>{2, 1, 0, 0});
  CHECK(order.back() == std::vector<int>{0, 0, 0, 3});
}

TEST_CASE("cubic cases: computed kernel and trace-free dimensions") {
  struct Expect {
    std::string name;
    std::size_t kernel, tracefree;
  };
  auto cases = fixtures::cubic_cases();
  for (const auto& e : std::vector<Expect>{{"A.1.2", 1, 1}, {"A.2", 4, 3}, {"B.2", 8, 6}, {"C", 4, 3}, {"D.2", 4, 3}}) {
    CAPTURE(e.name);
    auto result = cubic3_catalog(find_case(cases, e.name).c);
    CHECK(std::get<FieldSpace>(result.kernel).dimension() == e.kernel);
    CHECK(result.tracefree_basis.size() == e.tracefree);
  }
  auto zero = cubic3_catalog(LinearMatrix(3));
  CHECK(std::get<FieldSpace>(zero.kernel).dimension() == 18);
  CHECK(zero.tracefree_basis.size() == 15);
  // Generic diagonal: only A = 0.
  CHECK(cubic3_catalog(LinearMatrix::diagonal({1, 3, -4})).generators.empty());
}

TEST_CASE("cubic cases: trace-free spans") {
  auto cases = fixtures::cubic_cases();
  for (const auto& name : {"A.1.2", "B.2"}) {
    CAPTURE(name);
    const auto& c = find_case(cases, name);
    CHECK(fixtures::same_span(cubic3_catalog(c.c).tracefree_basis, c.listed, 3, 2, 1));
  }

  // Diagonal (0, 1, -1): kernel spanned by the weight-zero monomials.
  const auto& a2 = find_case(cases, "A.2");
  auto a2_result = cubic3_catalog(a2.c);
  CHECK(fixtures::same_span(std::get<FieldSpace>(a2_result.kernel).basis,
                            {q(1, {2, 0, 0}, 1), q(1, {0, 1, 1}, 1), q(1, {1, 1, 0}, 2), q(1, {1, 0, 1}, 3)}, 3, 2,
                            1));
  // y^2 d_x and z^2 d_x are eigenvectors of [C, .], not kernel elements.
  auto ca2 = display_field(a2.c);
  CHECK(schouten(ca2, q(1, {0, 2, 0}, 1)) == Rational(2) * q(1, {0, 2, 0}, 1));
  CHECK(schouten(ca2, q(1, {0, 0, 2}, 1)) == Rational(-2) * q(1, {0, 0, 2}, 1));

  // Jordan block of size three: xy d_z + x^2 d_y commutes with C.
  const auto& cc = find_case(cases, "C");
  std::vector<PolyVectorField> corrected = {q(1, {2, 0, 0}, 3), q(1, {1, 1, 0}, 3) + q(1, {2, 0, 0}, 2),
                                            cc.listed[2]};
  CHECK(schouten(display_field(cc.c), cc.listed[1]) != PolyVectorField(3));
  CHECK(fixtures::same_span(cubic3_catalog(cc.c).tracefree_basis, corrected, 3, 2, 1));

  // Rotation block: z^2 d_z also commutes, and z (x d_x + y d_y) has a trace.
  const auto& d2 = find_case(cases, "D.2");
  CHECK(schouten(display_field(d2.c), q(1, {0, 0, 2}, 3)).is_zero());
  CHECK_FALSE(trace_D(d2.listed[2]).is_zero());
  std::vector<PolyVectorField> projected;
  for (const auto& a : d2.listed) projected.push_back(decompose(a).tracefree);
  CHECK(fixtures::same_span(cubic3_catalog(d2.c).tracefree_basis, projected, 3, 2, 1));
}

TEST_CASE("cubic catalog generators are simple Poisson structures of rank two") {
  auto cases = fixtures::cubic_cases();
  std::vector<LinearMatrix> matrices;
  for (const auto& c : cases) matrices.push_back(c.c);
  matrices.push_back(LinearMatrix(3));
  for (const auto& m : matrices) {
    auto result = cubic3_catalog(m);
    CHECK(result.generators.size() == result.tracefree_basis.size());
    for (const auto& g : result.generators) {
      CHECK(g.poisson);
      CHECK(g.simple);
      CHECK(g.rank == 2);
      CHECK(g.field.bidegree() == BiDegree{3, 2});
      CHECK(is_poisson(g.field));
    }
  }
  CHECK_THROWS_AS(cubic3_catalog(LinearMatrix::identity(3)), PreconditionError);
  CHECK_THROWS_AS(cubic3_catalog(LinearMatrix(4)), PreconditionError);
}

TEST_CASE("cubic catalog is equivariant under linear changes of coordinates") {
  RandomFields rng(601);
  auto cases = fixtures::cubic_cases();
  for (int trial = 0; trial < 10; ++trial) {
    const auto& c = cases[static_cast<std::size_t>(trial) % cases.size()];
    auto l = rng.invertible_matrix(3);
    auto moved = matrix_of_linear_field(pushforward(l, display_field(c.c))).transpose();
    auto kernel = std::get<FieldSpace>(cubic3_catalog(c.c).kernel).basis;
    std::vector<PolyVectorField> transported;
    for (const auto& a : kernel) transported.push_back(pushforward(l, a));
    auto moved_result = cubic3_catalog(moved);
    CHECK(fixtures::same_span(std::get<FieldSpace>(moved_result.kernel).basis, transported, 3, 2, 1));
    std::vector<PolyVectorField> transported_tf;
    for (const auto& a : cubic3_catalog(c.c).tracefree_basis) transported_tf.push_back(pushforward(l, a));
    CHECK(fixtures::same_span(moved_result.tracefree_basis, transported_tf, 3, 2, 1));
  }
}

TEST_CASE("quadratic structures in dimension four: diagonal case") {
  auto a = fixtures::quad_first_matrix();
  auto kernel = compatible_cubic_oneforms(a);
  CHECK(kernel.dimension() == 4);
  CHECK(fixtures::same_span(kernel.basis, fixtures::quad_first_listed(), 4, 3, 1));
  CHECK(quartic_constraints(kernel).identically_zero());
  auto result = quad4_catalog(a);
  CHECK(result.generators.size() == 4);
  for (const auto& g : result.generators) {
    CHECK(g.poisson);
    CHECK(trace_D(g.field) == display_field(a));
  }
  // Pi_theta is spanned by the six coordinate bi-vectors x_i x_j d_i ^ d_j.
  std::vector<PolyVectorField> expected;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      std::vector<int> e(4, 0);
      e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(j - 1)] = 1;
      expected.push_back(T(4, 1, e, {i, j}));
    }
  }
  std::vector<PolyVectorField> images;
  for (const auto& theta : kernel.basis) images.push_back(from_form(exterior_derivative(theta)));
  for (const auto& image : images) {
    std::vector<PolyVectorField> with = expected;
    with.push_back(image);
    CHECK(fixtures::same_span(with, expected, 4, 2, 2));
  }
}

TEST_CASE("quadratic structures in dimension four: Jordan blocks") {
  auto a = fixtures::quad_second_matrix();
  auto family = fixtures::quad_second_family();
  auto kernel = compatible_cubic_oneforms(a);
  CHECK(kernel.dimension() == 8);
  CHECK(fixtures::same_span(kernel.basis, family, 4, 3, 1));
  auto constraints = quartic_constraints(kernel);
  CHECK_FALSE(constraints.identically_zero());

  // Generated locus: delta1 = delta2 and (b1 - b2)((b1 - b2) + (g1 - g2)) = 0.
  RandomFields rng(602);
  for (int trial = 0; trial < 100; ++trial) {
    RationalVector c(8);
    for (auto& v : c) v = rng.integer(-4, 4);
    c[3] = c[2];
    if (trial % 2 == 0) {
      c[5] = c[4];
    } else {
      c[5] = c[4] + c[6] - c[7];  // b1 - b2 = -(g1 - g2)
    }
    CHECK(square_of_d(combine(family, c)).is_zero());

    RationalVector v(8);
    for (auto& x : v) x = rng.integer(-4, 4);
    Rational db = v[4] - v[5];
    bool violates = v[2] != v[3] || !is_zero(db * (db + v[6] - v[7]));
    if (!violates) v[2] += 1;
    CHECK_FALSE(square_of_d(combine(family, v)).is_zero());
  }

  // The constraint set agrees with direct evaluation on the kernel basis.
  for (int trial = 0; trial < 20; ++trial) {
    RationalVector c(kernel.dimension());
    for (auto& v : c) v = rng.integer(-3, 3);
    CHECK(constraints.satisfied(c) == theta_square(kernel, c).is_zero());
  }

  auto result = quad4_catalog(a);
  CHECK(result.constraints.has_value());
  for (const auto& g : result.generators) {
    CHECK(g.poisson);
    CHECK(trace_D(g.field) == display_field(a));
  }
}

TEST_CASE("quadratic structures in dimension four: rotation blocks") {
  auto a = fixtures::quad_third_matrix();
  auto kernel = compatible_cubic_oneforms(a);
  CHECK(kernel.dimension() == 4);
  CHECK(fixtures::same_span(kernel.basis, fixtures::quad_third_family(), 4, 3, 1));
  CHECK(quartic_constraints(kernel).identically_zero());

  // alpha2 = beta2 makes the second summands exact; with alpha1 = beta1 too
  // the structure is the displayed one.
  auto family = fixtures::quad_third_family();
  auto pi = from_form(exterior_derivative(family[0] + family[2]));
  CHECK(is_poisson(pi));
  CHECK(exterior_derivative(family[1] + family[3]).is_zero());
  CHECK(trace_D(pi).is_zero());
  auto displayed = T(4, 1, {2, 0, 0, 0}, {1, 2}) + T(4, 1, {0, 2, 0, 0}, {1, 2}) + T(4, 1, {0, 0, 2, 0}, {3, 4}) +
                   T(4, 1, {0, 0, 0, 2}, {3, 4});
  for (auto [c, e] : std::vector<std::pair<int, std::vector<int>>>{{1, {1, 0, 1, 0}}, {1, {0, 1, 0, 1}}}) {
    displayed += T(4, c, e, {2, 3}) - T(4, c, e, {1, 4});
  }
  displayed += T(4, 1, {1, 0, 0, 1}, {1, 3}) + T(4, 1, {1, 0, 0, 1}, {2, 4}) - T(4, 1, {0, 1, 1, 0}, {1, 3}) -
               T(4, 1, {0, 1, 1, 0}, {2, 4});
  CHECK(fixtures::same_span(std::vector<PolyVectorField>{pi}, {displayed}, 4, 2, 2));
}

TEST_CASE("building a quadratic Poisson structure from a 1-form") {
  auto a = fixtures::quad_first_matrix();
  // theta = d(txyz) is exact, so only the trace part remains.
  auto theta = exterior_derivative(F(4, 1, {1, 1, 1, 1}, {}));
  auto pi = build_quadratic_poisson(theta, a);
  CHECK(pi == wedge(display_field(a), euler(4, 2, 2)));
  CHECK(is_poisson(pi));
  CHECK(trace_D(pi) == display_field(a));

  auto listed = fixtures::quad_first_listed();
  auto general = Rational(2) * listed[0] - listed[1] + Rational(1, 3) * listed[2] + Rational(5) * listed[3];
  auto p2 = build_quadratic_poisson(general, a);
  CHECK(is_poisson(p2));
  CHECK(decompose(p2).tracefree == from_form(exterior_derivative(general)));

  CHECK_THROWS_WITH_AS(build_quadratic_poisson(F(4, 1, {3, 0, 0, 0}, {2}), a), "condition (i) L_A theta = 0 fails",
                       PreconditionError);
  auto second = fixtures::quad_second_family();
  auto bad = second[4] + Rational(2) * second[6];  // beta1 = 1, gamma1 = 2
  CHECK_THROWS_WITH_AS(build_quadratic_poisson(bad, fixtures::quad_second_matrix()),
                       "condition (ii) d theta ^ d theta = 0 fails", PreconditionError);
  CHECK_THROWS_AS(build_quadratic_poisson(F(4, 1, {2, 0, 0, 0}, {2}), a), HomogeneityError);
  CHECK_THROWS_AS(build_quadratic_poisson(theta, LinearMatrix::identity(4)), PreconditionError);
}

TEST_CASE("compatible 1-forms are equivariant") {
  RandomFields rng(603);
  for (const auto& a : {fixtures::quad_first_matrix(), fixtures::quad_second_matrix(), fixtures::quad_third_matrix()}) {
    auto l = rng.invertible_matrix(4);
    auto moved = matrix_of_linear_field(pushforward(l, display_field(a))).transpose();
    std::vector<PolyDifferentialForm> transported;
    for (const auto& theta : compatible_cubic_oneforms(a).basis) transported.push_back(pullback(l, theta));
    CHECK(fixtures::same_span(compatible_cubic_oneforms(moved).basis, transported, 4, 3, 1));
  }
}

TEST_CASE("quadratic constraint sets") {
  QuadraticConstraintSet s;
  s.parameters = {"c1", "c2"};
  s.constraints.push_back({{{0, 0}, 1}, {{0, 1}, -1}});
  CHECK(s.evaluate({2, 2}) == std::vector<Rational>{0});
  CHECK(s.satisfied({0, 5}));
  CHECK_FALSE(s.satisfied({1, 2}));
  CHECK_FALSE(s.identically_zero());
  CHECK(QuadraticConstraintSet{}.identically_zero());
}
