#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pvf/linalg.hpp"
#include "pvf/linear_matrix.hpp"
#include "pvf/tensor.hpp"

namespace pvf {

/// Exact basis of a linear solution space, with one parameter name per
/// basis element (c1, c2, ...).
template <class T>
struct SolutionSpace {
  std::string ambient;
  std::vector<T> basis;
  std::vector<std::string> parameter_names;

  std::size_t dimension() const { return basis.size(); }
};

using FieldSpace = SolutionSpace<PolyVectorField>;
using FormSpace = SolutionSpace<PolyDifferentialForm>;

/// Quadratic polynomials sum_{i<=j} q_ij c_i c_j in the family parameters.
struct QuadraticConstraintSet {
  using Quadratic = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  std::vector<std::string> parameters;
  std::vector<Quadratic> constraints;

  std::vector<Rational> evaluate(const RationalVector& c) const;
  bool satisfied(const RationalVector& c) const;
  bool identically_zero() const { return constraints.empty(); }
};

struct VerifiedGenerator {
  PolyVectorField field;
  bool poisson = false;
  bool simple = false;
  int rank = 0;
};

struct ClassificationCase {
  LinearMatrix matrix;
  std::variant<FieldSpace, FormSpace> kernel;
  std::vector<PolyVectorField> tracefree_basis;
  std::optional<QuadraticConstraintSet> constraints;
  std::vector<VerifiedGenerator> generators;
};

/// Linear field of a matrix as printed in the case lists:
/// sum_{ij} M(i,j) x_i d_j (so a Jordan block [[0,1],[0,0]] is x1 d2).
PolyVectorField display_field(const LinearMatrix& m);

/// Monomial order of the cubic coefficients in dimension 4, variables
/// (t, x, y, z) = (x1, x2, x3, x4): 012, 013, 023, 123, 001, ..., 333.
std::vector<std::vector<int>> cubic_display_order();

/// {A in P^(k,1) : [C, A] = 0} for the display field of C.
FieldSpace centralizer_kernel(const LinearMatrix& c, int k);

/// Independent basis of the trace-free parts of a field space.
FieldSpace tracefree_projection(const FieldSpace& space);

/// Cubic Poisson structures A0 ^ (C + e^(3,2)) in dimension 3.
/// Throws PreconditionError unless C is 3x3 and trace free.
ClassificationCase cubic3_catalog(const LinearMatrix& c);

/// Kernel of theta -> L_A theta on cubic 1-forms in dimension 4 (80
/// unknowns in the display monomial order).
/// Throws PreconditionError unless A is 4x4 and trace free.
FormSpace compatible_cubic_oneforms(const LinearMatrix& a);

/// Coefficients of d theta ^ d theta for theta = sum c_i theta_i.
QuadraticConstraintSet quartic_constraints(const FormSpace& space);

/// d theta ^ d theta for the family member with coordinates c.
PolyDifferentialForm theta_square(const FormSpace& space, const RationalVector& c);

/// Psi^-1 d theta + A ^ e^(2,2). Throws PreconditionError naming the failed
/// condition: (i) L_A theta = 0 or (ii) d theta ^ d theta = 0.
PolyVectorField build_quadratic_poisson(const PolyDifferentialForm& theta, const LinearMatrix& a);

/// Kernel, trace-free bi-vectors Psi^-1 d theta_i, constraints, and one
/// generator per basis element that satisfies the constraints on its own.
ClassificationCase quad4_catalog(const LinearMatrix& a);

/// Recomputes the verification flags of a generator.
VerifiedGenerator verify_generator(const PolyVectorField& field);

}  // namespace pvf
