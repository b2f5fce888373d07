#include "pvf/field_algebra.hpp"

#include <algorithm>
#include <limits>

namespace pvf {

namespace {

// Product of two monomial keys' exponents; indices are taken from `mask`.
BasisKey combine(const BasisKey& a, const BasisKey& b, std::uint32_t mask) {
  BasisKey out;
  for (int i = 0; i < kMaxDim; ++i) {
    int e = a.exponents[i] + b.exponents[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) throw DomainError("exponent overflow");
    out.exponents[i] = static_cast<std::uint8_t>(e);
  }
  out.indices = mask;
  return out;
}

// Adds sum_alpha (f <-d/dxi_{i_alpha}) * d_{i_alpha}(g) ^ xi_J, scaled by `scale`.
void accumulate_half(PolyVectorField& out, const BasisKey& fk, const Rational& fc,
                     const BasisKey& gk, const Rational& gc, int scale) {
  auto idx = fk.index_list();
  int p = static_cast<int>(idx.size());
  for (int alpha = 0; alpha < p; ++alpha) {
    int i = idx[static_cast<std::size_t>(alpha)];
    // Right derivative past the p - alpha - 1 later generators.
    int sign = ((p - alpha - 1) % 2) ? -1 : 1;
    BasisKey dg = gk;
    int mult = differentiate_monomial(dg, i);
    if (mult == 0) continue;
    std::uint32_t rest = fk.indices & ~(1u << (i - 1));
    int ws = wedge_sign(rest, gk.indices);
    if (ws == 0) continue;
    out.add_term(combine(fk, dg, rest | gk.indices), fc * gc * (sign * ws * mult * scale));
  }
}

}  // namespace

PolyVectorField schouten(const PolyVectorField& u, const PolyVectorField& v) {
  u.require_same_dim(v);
  PolyVectorField out(u.dim());
  for (const auto& [ka, ca] : u.terms()) {
    for (const auto& [kb, cb] : v.terms()) {
      int p = ka.grade();
      int q = kb.grade();
      int twist = (((p - 1) * (q - 1)) % 2 != 0) ? 1 : -1;  // -(-1)^{(p-1)(q-1)}
      accumulate_half(out, ka, ca, kb, cb, 1);
      accumulate_half(out, kb, cb, ka, ca, twist);
    }
  }
  return out;
}

PolyVectorField euler_field(int dim) {
  PolyVectorField e(dim);
  for (int m = 1; m <= dim; ++m) {
    std::vector<int> exps(static_cast<std::size_t>(dim), 0);
    exps[static_cast<std::size_t>(m - 1)] = 1;
    e += PolyVectorField::term(dim, 1, exps, {m});
  }
  return e;
}

PolyVectorField euler(int dim, int k, int ell) {
  int normalizer = dim + k - ell;
  if (normalizer == 0) {
    throw DegenerateNormalizerError("e^(k,l) undefined for n + k - l = 0 (k=" + std::to_string(k) +
                                    ", l=" + std::to_string(ell) + ")");
  }
  return euler_field(dim) * ratio(1, normalizer);
}

std::map<BiDegree, PolyVectorField> homogeneous_components(const PolyVectorField& u) {
  std::map<BiDegree, PolyVectorField> out;
  for (const auto& [key, c] : u.terms()) {
    BiDegree d{key.degree(), key.grade()};
    auto it = out.try_emplace(d, u.dim()).first;
    it->second.add_term(key, c);
  }
  return out;
}

PolyVectorField linear_field(const LinearMatrix& m) {
  int n = m.dim();
  PolyVectorField out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (is_zero(m(i, j))) continue;
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      exps[static_cast<std::size_t>(j)] = 1;
      out += PolyVectorField::term(n, m(i, j), exps, {i + 1});
    }
  }
  return out;
}

LinearMatrix matrix_of_linear_field(const PolyVectorField& u) {
  LinearMatrix m(u.dim());
  for (const auto& [key, c] : u.terms()) {
    if (key.degree() != 1 || key.grade() != 1) {
      throw HomogeneityError("not a linear vector field");
    }
    int row = key.index_list().front() - 1;
    int col = 0;
    while (key.exponents[static_cast<std::size_t>(col)] == 0) ++col;
    m(row, col) = c;
  }
  return m;
}

namespace detail {

template <class Tag>
GradedTensor<Tag> linear_substitution(const GradedTensor<Tag>& t, const LinearMatrix& var_map,
                                      const LinearMatrix& gen_map) {
  int n = t.dim();
  if (var_map.dim() != n || gen_map.dim() != n) throw DimensionError("matrix size mismatch");

  std::vector<GradedTensor<Tag>> variable_image;
  std::vector<GradedTensor<Tag>> generator_image;
  for (int i = 0; i < n; ++i) {
    GradedTensor<Tag> xi(n);
    GradedTensor<Tag> gi(n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      exps[static_cast<std::size_t>(j)] = 1;
      xi += GradedTensor<Tag>::term(n, var_map(i, j), exps, {});
      gi += GradedTensor<Tag>::term(n, gen_map(j, i), {}, {j + 1});
    }
    variable_image.push_back(std::move(xi));
    generator_image.push_back(std::move(gi));
  }

  GradedTensor<Tag> out(n);
  for (const auto& [key, c] : t.terms()) {
    auto piece = GradedTensor<Tag>::constant(n, c);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < key.exponents[static_cast<std::size_t>(i)]; ++e) {
        piece = wedge(piece, variable_image[static_cast<std::size_t>(i)]);
      }
    }
    for (int i : key.index_list()) piece = wedge(piece, generator_image[static_cast<std::size_t>(i - 1)]);
    out += piece;
  }
  return out;
}

template PolyVectorField linear_substitution(const PolyVectorField&, const LinearMatrix&,
                                             const LinearMatrix&);
template PolyDifferentialForm linear_substitution(const PolyDifferentialForm&, const LinearMatrix&,
                                                  const LinearMatrix&);

}  // namespace detail

PolyVectorField pushforward(const LinearMatrix& l, const PolyVectorField& u) {
  if (l.dim() != u.dim()) throw DimensionError("matrix and field dimensions differ");
  return detail::linear_substitution(u, l, l.inverse());
}

namespace {

Integer factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Sorts 1-based indices, returning the permutation sign, 0 on repeats.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j + 1 + i < idx.size(); ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return 0;
  return sign;
}

BasisKey key_from(int dim, const std::vector<int>& lower, std::uint32_t mask, Integer& weight) {
  BasisKey key;
  for (int i : lower) {
    if (i < 1 || i > dim) throw DimensionError("index outside 1..n");
    ++key.exponents[static_cast<std::size_t>(i - 1)];
  }
  weight = 1;
  for (auto e : key.exponents) weight *= factorial(e);
  key.indices = mask;
  return key;
}

}  // namespace

// A = sum_{alpha, J} c x^alpha d_J with A_{alpha}^{J} = c * prod(alpha_i!).
Rational skew_component(const PolyVectorField& u, const std::vector<int>& lower,
                        const std::vector<int>& upper) {
  auto up = upper;
  for (int j : up) {
    if (j < 1 || j > u.dim()) throw DimensionError("index outside 1..n");
  }
  int sign = sort_with_sign(up);
  if (sign == 0) return 0;
  Integer weight;
  BasisKey key = key_from(u.dim(), lower, index_mask(up), weight);
  return u.coefficient(key) * Rational(weight) * sign;
}

PolyVectorField skew_term(int dim, const std::vector<int>& lower, const std::vector<int>& upper,
                          const Rational& value) {
  PolyVectorField out(dim);
  auto up = upper;
  for (int j : up) {
    if (j < 1 || j > dim) throw DimensionError("index outside 1..n");
  }
  int sign = sort_with_sign(up);
  if (sign == 0) return out;
  Integer weight;
  BasisKey key = key_from(dim, lower, index_mask(up), weight);
  out.add_term(key, value / Rational(weight) * sign);
  return out;
}

}  // namespace pvf
