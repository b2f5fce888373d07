#include "pvf/duality.hpp"

#include <string>

namespace pvf {

namespace {

std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1); }

}  // namespace

PolyDifferentialForm to_form(const PolyVectorField& u) {
  PolyDifferentialForm out(u.dim());
  std::uint32_t all = full_mask(u.dim());
  for (const auto& [key, c] : u.terms()) {
    BasisKey k = key;
    k.indices = all & ~key.indices;
    int eps = wedge_sign(key.indices, k.indices);
    out.add_term(k, eps * c);
  }
  return out;
}

PolyVectorField from_form(const PolyDifferentialForm& omega) {
  PolyVectorField out(omega.dim());
  std::uint32_t all = full_mask(omega.dim());
  for (const auto& [key, c] : omega.terms()) {
    BasisKey k = key;
    k.indices = all & ~key.indices;
    int eps = wedge_sign(k.indices, key.indices);
    out.add_term(k, eps * c);
  }
  return out;
}

PolyDifferentialForm exterior_derivative(const PolyDifferentialForm& omega) {
  PolyDifferentialForm out(omega.dim());
  for (const auto& [key, c] : omega.terms()) {
    for (int m = 1; m <= omega.dim(); ++m) {
      std::uint32_t bit = 1u << (m - 1);
      int sign = wedge_sign(bit, key.indices);
      if (sign == 0) continue;
      BasisKey k = key;
      int mult = differentiate_monomial(k, m);
      if (mult == 0) continue;
      k.indices |= bit;
      out.add_term(k, c * (sign * mult));
    }
  }
  return out;
}

PolyVectorField trace_D(const PolyVectorField& u) {
  PolyVectorField out(u.dim());
  for (const auto& [key, c] : u.terms()) {
    for (int m : key.index_list()) {
      std::uint32_t bit = 1u << (m - 1);
      // Moving d_m to the last slot passes every larger index.
      std::uint32_t rest = key.indices & ~bit;
      int sign = wedge_sign(rest, bit);
      BasisKey k = key;
      int mult = differentiate_monomial(k, m);
      if (mult == 0) continue;
      k.indices = rest;
      out.add_term(k, c * (sign * mult));
    }
  }
  return out;
}

PolyDifferentialForm pullback(const LinearMatrix& l, const PolyDifferentialForm& omega) {
  if (l.dim() != omega.dim()) throw DimensionError("matrix and form dimensions differ");
  // dx_i -> sum_j L(i,j) dx_j, i.e. generator map L^T.
  return detail::linear_substitution(omega, l, l.transpose());
}

PolyDifferentialForm interior(const PolyVectorField& x, const PolyDifferentialForm& omega) {
  if (x.dim() != omega.dim()) throw DimensionError("field and form dimensions differ");
  PolyDifferentialForm out(omega.dim());
  for (const auto& [xk, xc] : x.terms()) {
    if (xk.grade() != 1) throw ParityError("interior product needs a vector field");
    int i = xk.index_list().front();
    std::uint32_t bit = 1u << (i - 1);
    for (const auto& [fk, fc] : omega.terms()) {
      if (!(fk.indices & bit)) continue;
      std::uint32_t rest = fk.indices & ~bit;
      int sign = wedge_sign(bit, rest);
      BasisKey k;
      for (int v = 0; v < kMaxDim; ++v) {
        k.exponents[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(
            xk.exponents[static_cast<std::size_t>(v)] + fk.exponents[static_cast<std::size_t>(v)]);
      }
      k.indices = rest;
      out.add_term(k, xc * fc * sign);
    }
  }
  return out;
}

PolyDifferentialForm lie_derivative(const PolyVectorField& x, const PolyDifferentialForm& omega) {
  return interior(x, exterior_derivative(omega)) + exterior_derivative(interior(x, omega));
}

std::int64_t dim_irrep(int n, int k, int ell) {
  if (n < 1 || k < 0 || ell < 0 || ell > n - 1) {
    throw DomainError("dim_irrep needs n >= 1, k >= 0, 0 <= l <= n-1 (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ")");
  }
  auto fact = [](int m) {
    Integer f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  Integer num = fact(n + k);
  Integer den = Integer(n + k - ell) * fact(k) * fact(ell) * fact(n - ell - 1);
  if (num % den != 0) throw DomainError("dimension formula is not integral");
  Integer q = num / den;
  if (!q.fits_slong_p()) throw DomainError("dimension too large");
  return q.get_si();
}

}  // namespace pvf
