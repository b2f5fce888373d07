#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pvf/errors.hpp"
#include "pvf/rational.hpp"

namespace pvf {

/// Largest ambient dimension supported by the packed basis keys.
inline constexpr int kMaxDim = 8;

/// Polynomial degree k and multivector degree ell of a homogeneous piece.
struct BiDegree {
  int k = 0;
  int ell = 0;

  int delta() const { return k - ell; }

  auto operator<=>(const BiDegree&) const = default;
};

/// A basis element x^alpha d_{j1} ^ ... ^ d_{jl}, j1 < ... < jl.
///
/// The skew indices are stored as a bit mask (bit i-1 for index i), so the
/// strictly increasing tuple is implicit. The same key serves covariant
/// indices dx^{j1} ^ ... ^ dx^{jl} in differential forms.
struct BasisKey {
  std::array<std::uint8_t, kMaxDim> exponents{};
  std::uint32_t indices = 0;

  int degree() const {
    int total = 0;
    for (auto e : exponents) total += e;
    return total;
  }
  int grade() const { return std::popcount(indices); }

  /// Skew indices in increasing order, 1-based.
  std::vector<int> index_list() const;

  bool operator==(const BasisKey&) const = default;
};

/// Canonical term order: grade, then degree, then the index tuple, then
/// exponents in descending lexicographic order (x1^2 before x1*x2).
struct BasisKeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const;
};

/// Sign of e_I ^ e_J relative to e_{I u J}; zero when I and J overlap.
int wedge_sign(std::uint32_t left, std::uint32_t right);

std::uint32_t index_mask(std::initializer_list<int> one_based);
std::uint32_t index_mask(const std::vector<int>& one_based);

struct VectorTag {};
struct FormTag {};

/// Sparse element of S(V*) (x) Lambda(V) (vector tag) or of polynomial
/// differential forms (form tag) over the rationals.
///
/// Invariants: no stored zero coefficient, exponents and indices confined to
/// the first `dim` coordinates. The zero tensor still knows its dimension.
template <class Tag>
class GradedTensor {
 public:
  using Terms = std::map<BasisKey, Rational, BasisKeyLess>;

  explicit GradedTensor(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) {
      throw DimensionError("dimension must lie in [1, " + std::to_string(kMaxDim) + "]");
    }
  }

  static GradedTensor constant(int dim, const Rational& value) {
    GradedTensor t(dim);
    t.add_term(BasisKey{}, value);
    return t;
  }

  /// c * x^exponents * (basis element on the given 1-based indices, in the
  /// given order; reordering contributes its sign, repeats give zero).
  static GradedTensor term(int dim, const Rational& c, const std::vector<int>& exponents,
                           const std::vector<int>& indices);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a basis element (zero if absent).
  Rational coefficient(const BasisKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const BasisKey& key, const Rational& c);

  std::set<BiDegree> bidegrees() const {
    std::set<BiDegree> out;
    for (const auto& [key, c] : terms_) out.insert({key.degree(), key.grade()});
    return out;
  }

  /// The single bidegree of a nonzero homogeneous tensor.
  std::optional<BiDegree> bidegree() const {
    auto all = bidegrees();
    if (all.size() != 1) return std::nullopt;
    return *all.begin();
  }

  bool is_homogeneous() const { return bidegrees().size() <= 1; }

  GradedTensor& operator+=(const GradedTensor& other);
  GradedTensor& operator-=(const GradedTensor& other);
  GradedTensor& operator*=(const Rational& s);

  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
  friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
  friend GradedTensor operator*(GradedTensor a, const Rational& s) { return a *= s; }
  friend GradedTensor operator*(const Rational& s, GradedTensor a) { return a *= s; }
  friend GradedTensor operator-(GradedTensor a) { return a *= Rational(-1); }

  friend bool operator==(const GradedTensor& a, const GradedTensor& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void require_same_dim(const GradedTensor& other) const {
    if (dim_ != other.dim_) {
      throw DimensionError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                           std::to_string(other.dim_));
    }
  }

 private:
  int dim_;
  Terms terms_;
};

/// Polynomial poly-vector field on R^n.
using PolyVectorField = GradedTensor<VectorTag>;
/// Polynomial differential form on R^n.
using PolyDifferentialForm = GradedTensor<FormTag>;

/// Partial derivative of a coefficient monomial: returns the multiplier and
/// writes the lowered exponents into `key`; multiplier 0 if x_i is absent.
int differentiate_monomial(BasisKey& key, int variable);

/// Graded product shared by fields and forms: sign from reordering the skew
/// indices, exponents add.
template <class Tag>
GradedTensor<Tag> wedge(const GradedTensor<Tag>& u, const GradedTensor<Tag>& v);

/// Partial derivative of every coefficient with respect to x_variable (1-based).
template <class Tag>
GradedTensor<Tag> partial(const GradedTensor<Tag>& u, int variable);

/// Restriction of a tensor to one bidegree.
template <class Tag>
GradedTensor<Tag> component(const GradedTensor<Tag>& u, BiDegree degree);

extern template class GradedTensor<VectorTag>;
extern template class GradedTensor<FormTag>;

}  // namespace pvf
