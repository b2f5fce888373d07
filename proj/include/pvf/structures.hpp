#pragma once

#include <map>
#include <utility>

#include "pvf/decomposition.hpp"

namespace pvf {

/// (Lambda, E): a 2l-vector and a (2l-1)-vector on the same space.
class JacobiPair {
 public:
  /// Throws DimensionError on mismatched dimensions and ParityError when the
  /// grades do not fit (odd Lambda, or E not one below Lambda).
  JacobiPair(PolyVectorField lambda, PolyVectorField e_field);

  const PolyVectorField& lambda() const { return lambda_; }
  const PolyVectorField& e_field() const { return e_field_; }

 private:
  PolyVectorField lambda_;
  PolyVectorField e_field_;
};

/// Element of Lambda^2(gl_n) in the matrix-unit basis E_ij (1-based).
class RMatrix {
 public:
  explicit RMatrix(int dim);

  int dim() const { return dim_; }
  /// Adds c * E_ij ^ E_kl (antisymmetry is applied on insertion).
  void add(int i, int j, int k, int l, const Rational& c);
  /// Coefficient r^{ijkl} of E_ij ^ E_kl in the skew pairing.
  Rational coefficient(int i, int j, int k, int l) const;

  /// Canonical entries keyed by flattened (slot_a, slot_b), slot_a < slot_b.
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

 private:
  int slot(int i, int j) const;

  int dim_;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// [P, P] = 0. Throws ParityError if some homogeneous component has odd l.
bool is_poisson(const PolyVectorField& p);

/// Poisson condition through the trace decomposition of a homogeneous even
/// field: for k != l, [A0,A0] = 2(l-k)/(n+k-l) DA ^ A0; for k = l,
/// [A0,A0] = 0 and [DA,A0] = 0.
bool poisson_component_test(const PolyVectorField& a);

/// Trace-free part of a homogeneous Poisson field is Poisson.
/// Throws PreconditionError for non-Poisson or non-homogeneous input.
bool is_simple(const PolyVectorField& p);

/// Rank of the skew matrix P^{ij}(x) over the rational function field,
/// via principal Pfaffian minors. Throws ParityError unless P is a bi-vector.
int generic_rank(const PolyVectorField& p);

/// [Lambda, E] = 0 and [Lambda, Lambda] = 2 E ^ Lambda.
bool is_jacobi(const JacobiPair& pair);

/// Poisson structure with Pi0 = Lambda0 and
/// DPi = DLambda + ((n+k-2l)/(2l-k)) E0.
/// Throws ExceptionalDegreeError for k = 2l and PreconditionError when the
/// pair is not a homogeneous Jacobi structure.
PolyVectorField poisson_from_jacobi(const JacobiPair& pair);

/// Jacobi structure from a Poisson field with a splitting DPi = F0 + E~0:
///   Lambda = Pi0 + F0 ^ e^(k,2l),
///   E = ((2l-k)/(n+k-2l)) (E~0 + xi ^ e^(k,2l)).
/// Requires xi ^ Pi0 = [Pi0, F0] + F0 ^ E~0, else IncompatibleSplittingError.
JacobiPair jacobi_from_poisson(const PolyVectorField& p, const PolyVectorField& f0,
                               const PolyVectorField& xi);

/// The two xi = 0 pairs: (Pi, 0) and (Pi0, ((2l-k)/(n+k-2l)) DPi).
/// Throws ExceptionalDegreeError for k = 2l unless DPi = 0.
std::pair<JacobiPair, JacobiPair> associated_special_cases(const PolyVectorField& p);

/// Pi0 = Lambda0 and E0 = ((k-2l)/(n+k-2l)) (DLambda - DPi).
/// Throws DimensionError when the bidegrees of Pi and Lambda differ.
bool are_associated(const PolyVectorField& p, const JacobiPair& pair);

/// Checker for the exceptional degree k = 2l given eta: E0 = 0,
/// DLambda = DPi + eta and [eta, Lambda0] = -DE ^ Lambda0.
bool exceptional_association_holds(const PolyVectorField& p, const JacobiPair& pair,
                                   const PolyVectorField& eta);

/// r^{ijkl} E_ij ^ E_kl -> r^{ijkl} x^i x^k d_j ^ d_l.
PolyVectorField r_matrix_to_bivector(const RMatrix& r);

}  // namespace pvf
