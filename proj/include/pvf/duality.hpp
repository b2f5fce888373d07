#pragma once

#include <cstdint>

#include "pvf/field_algebra.hpp"
#include "pvf/linear_matrix.hpp"
#include "pvf/tensor.hpp"

namespace pvf {

// Volume form fixed as dx^1 ^ ... ^ dx^n throughout.

/// Psi(U)(W) = Psi(U ^ W): an l-vector goes to an (n-l)-form,
/// f d_I -> f eps(I, I^c) dx^{I^c}.
PolyDifferentialForm to_form(const PolyVectorField& u);

/// Inverse of to_form.
PolyVectorField from_form(const PolyDifferentialForm& omega);

/// Exterior derivative d(f dx^I) = sum_m d_m f dx^m ^ dx^I.
PolyDifferentialForm exterior_derivative(const PolyDifferentialForm& omega);

/// Trace operator D(U) = d_m U^{i1..i(l-1) m}, computed by contracting the
/// last skew index. Bidegree (k, l) -> (k-1, l-1). Equals Psi^-1 d Psi.
PolyVectorField trace_D(const PolyVectorField& u);

/// Pullback of a form along x -> L x.
PolyDifferentialForm pullback(const LinearMatrix& l, const PolyDifferentialForm& omega);

/// Interior product i_X omega, contracting X into the first slot.
PolyDifferentialForm interior(const PolyVectorField& x, const PolyDifferentialForm& omega);

/// Lie derivative L_X omega = i_X d omega + d i_X omega.
PolyDifferentialForm lie_derivative(const PolyVectorField& x, const PolyDifferentialForm& omega);

/// Dimension of the trace-free summand of P^(k,l) in dimension n:
/// (n+k)! / ((n+k-l) k! l! (n-l-1)!). Requires k >= 0 and 0 <= l <= n-1,
/// throws DomainError otherwise.
std::int64_t dim_irrep(int n, int k, int ell);

}  // namespace pvf
