#include "pvf/classifier.hpp"

#include "pvf/decomposition.hpp"
#include "pvf/duality.hpp"
#include "pvf/field_algebra.hpp"
#include "pvf/space.hpp"
#include "pvf/structures.hpp"

namespace pvf {

namespace {

std::vector<std::string> parameter_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

// Kernel of a linear map given by its images of the domain basis.
template <class Domain, class Image>
std::vector<RationalVector> linear_kernel(const Domain& domain, const HomogeneousBasis<Image>& target,
                                          auto&& map) {
  RationalMatrix m(target.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    auto image = target.coordinates(map(domain.element(j)));
    for (std::size_t i = 0; i < target.size(); ++i) m(i, j) = image[i];
  }
  return nullspace(m);
}

void require_trace_free(const LinearMatrix& m, int n) {
  if (m.dim() != n) throw PreconditionError("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!is_zero(m.trace())) throw PreconditionError("matrix must be trace free");
}

}  // namespace

std::vector<Rational> QuadraticConstraintSet::evaluate(const RationalVector& c) const {
  std::vector<Rational> out;
  out.reserve(constraints.size());
  for (const auto& q : constraints) {
    Rational v = 0;
    for (const auto& [ij, coeff] : q) v += coeff * c.at(ij.first) * c.at(ij.second);
    out.push_back(v);
  }
  return out;
}

bool QuadraticConstraintSet::satisfied(const RationalVector& c) const {
  for (const auto& v : evaluate(c)) {
    if (!is_zero(v)) return false;
  }
  return true;
}

PolyVectorField display_field(const LinearMatrix& m) { return linear_field(m.transpose()); }

std::vector<std::vector<int>> cubic_display_order() {
  static const int triples[20][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 0, 1},
                                     {0, 0, 2}, {0, 0, 3}, {1, 1, 0}, {1, 1, 2}, {1, 1, 3},
                                     {2, 2, 0}, {2, 2, 1}, {2, 2, 3}, {3, 3, 0}, {3, 3, 1},
                                     {3, 3, 2}, {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
  std::vector<std::vector<int>> order;
  for (const auto& t : triples) {
    std::vector<int> exps(4, 0);
    for (int v : t) ++exps[static_cast<std::size_t>(v)];
    order.push_back(exps);
  }
  return order;
}

FieldSpace centralizer_kernel(const LinearMatrix& c, int k) {
  const int n = c.dim();
  HomogeneousBasis<VectorTag> space(n, k, 1);
  PolyVectorField cf = display_field(c);
  auto kernel = linear_kernel(space, space, [&](const PolyVectorField& a) { return schouten(cf, a); });
  FieldSpace out;
  out.ambient = "P^(" + std::to_string(k) + ",1) in dimension " + std::to_string(n);
  for (const auto& v : kernel) out.basis.push_back(space.combine(v));
  out.parameter_names = parameter_names(out.basis.size());
  return out;
}

FieldSpace tracefree_projection(const FieldSpace& space) {
  FieldSpace out;
  out.ambient = space.ambient + ", trace free";
  if (space.basis.empty()) return out;
  std::vector<PolyVectorField> projected;
  for (const auto& a : space.basis) projected.push_back(decompose(a).tracefree);
  auto d = space.basis.front().bidegree();
  if (!d) return out;
  HomogeneousBasis<VectorTag> coords(space.basis.front().dim(), d->k, d->ell);
  std::vector<RationalVector> vecs;
  for (const auto& p : projected) vecs.push_back(coords.coordinates(p));
  for (auto i : independent_subset(vecs, coords.size())) out.basis.push_back(projected[i]);
  out.parameter_names = parameter_names(out.basis.size());
  return out;
}

VerifiedGenerator verify_generator(const PolyVectorField& field) {
  VerifiedGenerator g{field};
  g.poisson = is_poisson(field);
  g.simple = g.poisson && is_simple(field);
  g.rank = generic_rank(field);
  return g;
}

ClassificationCase cubic3_catalog(const LinearMatrix& c) {
  require_trace_free(c, 3);
  ClassificationCase out{c, centralizer_kernel(c, 2), {}, std::nullopt, {}};
  FieldSpace tracefree = tracefree_projection(std::get<FieldSpace>(out.kernel));
  out.tracefree_basis = tracefree.basis;
  PolyVectorField factor = display_field(c) + euler(3, 3, 2);
  for (const auto& a0 : out.tracefree_basis) out.generators.push_back(verify_generator(wedge(a0, factor)));
  return out;
}

FormSpace compatible_cubic_oneforms(const LinearMatrix& a) {
  require_trace_free(a, 4);
  HomogeneousBasis<FormTag> space(4, 1, cubic_display_order());
  PolyVectorField af = display_field(a);
  auto kernel =
      linear_kernel(space, space, [&](const PolyDifferentialForm& theta) { return lie_derivative(af, theta); });
  FormSpace out;
  out.ambient = "cubic 1-forms in dimension 4 (80 coefficients)";
  for (const auto& v : kernel) out.basis.push_back(space.combine(v));
  out.parameter_names = parameter_names(out.basis.size());
  return out;
}

QuadraticConstraintSet quartic_constraints(const FormSpace& space) {
  QuadraticConstraintSet out;
  out.parameters = space.parameter_names;
  std::vector<PolyDifferentialForm> d;
  for (const auto& theta : space.basis) d.push_back(exterior_derivative(theta));
  std::map<BasisKey, QuadraticConstraintSet::Quadratic, BasisKeyLess> by_monomial;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i; j < d.size(); ++j) {
      PolyDifferentialForm product = wedge(d[i], d[j]);
      Rational factor = i == j ? 1 : 2;
      for (const auto& [key, c] : product.terms()) {
        auto& q = by_monomial[key];
        auto [it, inserted] = q.try_emplace({i, j}, factor * c);
        if (!inserted) it->second += factor * c;
      }
    }
  }
  for (auto& [key, q] : by_monomial) {
    std::erase_if(q, [](const auto& entry) { return is_zero(entry.second); });
    if (!q.empty()) out.constraints.push_back(std::move(q));
  }
  return out;
}

PolyDifferentialForm theta_square(const FormSpace& space, const RationalVector& c) {
  PolyDifferentialForm theta(4);
  for (std::size_t i = 0; i < space.basis.size(); ++i) theta += c.at(i) * space.basis[i];
  PolyDifferentialForm dtheta = exterior_derivative(theta);
  return wedge(dtheta, dtheta);
}

PolyVectorField build_quadratic_poisson(const PolyDifferentialForm& theta, const LinearMatrix& a) {
  require_trace_free(a, 4);
  if (theta.dim() != 4) throw DimensionError("theta must live in dimension 4");
  for (auto d : theta.bidegrees()) {
    if (d != BiDegree{3, 1}) throw HomogeneityError("theta must be a cubic 1-form");
  }
  PolyVectorField af = display_field(a);
  if (!lie_derivative(af, theta).is_zero()) throw PreconditionError("condition (i) L_A theta = 0 fails");
  PolyDifferentialForm dtheta = exterior_derivative(theta);
  if (!wedge(dtheta, dtheta).is_zero()) {
    throw PreconditionError("condition (ii) d theta ^ d theta = 0 fails");
  }
  return from_form(dtheta) + wedge(af, euler(4, 2, 2));
}

ClassificationCase quad4_catalog(const LinearMatrix& a) {
  FormSpace kernel = compatible_cubic_oneforms(a);
  ClassificationCase out{a, kernel, {}, quartic_constraints(kernel), {}};

  HomogeneousBasis<VectorTag> bivectors(4, 2, 2);
  std::vector<PolyVectorField> images;
  std::vector<RationalVector> coords;
  for (const auto& theta : kernel.basis) {
    images.push_back(from_form(exterior_derivative(theta)));
    coords.push_back(bivectors.coordinates(images.back()));
  }
  for (auto i : independent_subset(coords, bivectors.size())) out.tracefree_basis.push_back(images[i]);

  for (std::size_t i = 0; i < kernel.basis.size(); ++i) {
    RationalVector unit(kernel.basis.size(), Rational(0));
    unit[i] = 1;
    if (!out.constraints->satisfied(unit)) continue;
    out.generators.push_back(verify_generator(build_quadratic_poisson(kernel.basis[i], a)));
  }
  return out;
}

}  // namespace pvf
