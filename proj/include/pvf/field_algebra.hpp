#pragma once

#include <map>
#include <vector>

#include "pvf/linear_matrix.hpp"
#include "pvf/tensor.hpp"

namespace pvf {

/// Schouten bracket, the bi-derivation extension of the Lie bracket.
///
/// Conventions: [X, f] = X(f), [X, Y] is the Lie bracket, and for a p-vector
/// U the map [U, .] is a derivation of degree p - 1:
///   [U, V ^ W] = [U, V] ^ W + (-1)^{(p-1) q} V ^ [U, W],   q = deg V,
///   [U, V] = -(-1)^{(p-1)(q-1)} [V, U].
/// In odd coordinates xi_i = d_i this is
///   [P, Q] = sum_i (P <-d/dxi_i)(d_i Q) - (-1)^{(p-1)(q-1)} (Q <-d/dxi_i)(d_i P)
/// with right derivatives in xi.
PolyVectorField schouten(const PolyVectorField& u, const PolyVectorField& v);

/// e_0 = x^m d_m.
PolyVectorField euler_field(int dim);

/// e^(k,l) = e_0 / (n + k - l). Throws DegenerateNormalizerError when the
/// normalizer vanishes (only k = 0, l = n).
PolyVectorField euler(int dim, int k, int ell);

/// Splits a field into its (k, l)-homogeneous components.
std::map<BiDegree, PolyVectorField> homogeneous_components(const PolyVectorField& u);

/// Linear vector field x -> M x, i.e. sum_{ij} M(i,j) x_j d_i.
PolyVectorField linear_field(const LinearMatrix& m);

/// Matrix of a (1,1)-homogeneous field in the `linear_field` convention.
/// Throws HomogeneityError for anything else (the zero field is accepted).
LinearMatrix matrix_of_linear_field(const PolyVectorField& u);

/// Induced action of the linear diffeomorphism L on poly-vector fields:
/// (L_* U)(x) = Lambda(L^{-1}) U(L x). Linear fields transform by
/// conjugation L^{-1} A L and L_* e_0 = e_0. Throws SingularMatrixError for a
/// singular L and DimensionError for mismatched sizes.
PolyVectorField pushforward(const LinearMatrix& l, const PolyVectorField& u);

/// Fully skew component A_{i1..ik}^{j1..jl} of a field written as
/// (1/(k! l!)) A_{i..}^{j..} x^{i1}..x^{ik} d_{j1}^..^d_{jl}. Indices are 1-based
/// and may come in any order.
Rational skew_component(const PolyVectorField& u, const std::vector<int>& lower,
                        const std::vector<int>& upper);

/// Field whose skew components are those generated by A_{lower}^{upper} = value
/// under the symmetries of the index picture, and zero otherwise.
PolyVectorField skew_term(int dim, const std::vector<int>& lower, const std::vector<int>& upper,
                          const Rational& value);

namespace detail {

/// Substitutes x_i -> sum_j var_map(i,j) x_j in every coefficient and the
/// generator e_i -> sum_m gen_map(m,i) e_m in the skew part.
template <class Tag>
GradedTensor<Tag> linear_substitution(const GradedTensor<Tag>& t, const LinearMatrix& var_map,
                                      const LinearMatrix& gen_map);

}  // namespace detail

}  // namespace pvf
