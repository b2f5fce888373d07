#include "pvf/tensor.hpp"

#include <algorithm>
#include <limits>

namespace pvf {

std::vector<int> BasisKey::index_list() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxDim; ++i) {
    if (indices & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

bool BasisKeyLess::operator()(const BasisKey& a, const BasisKey& b) const {
  if (a.grade() != b.grade()) return a.grade() < b.grade();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.indices != b.indices) {
    // Lexicographic comparison of the increasing index tuples.
    auto la = a.index_list();
    auto lb = b.index_list();
    return la < lb;
  }
  return a.exponents > b.exponents;
}

int wedge_sign(std::uint32_t left, std::uint32_t right) {
  if (left & right) return 0;
  // Every index of `right` has to move past the larger indices of `left`.
  int swaps = 0;
  for (std::uint32_t r = right; r; r &= r - 1) {
    std::uint32_t bit = r & (~r + 1);
    swaps += std::popcount(left & ~((bit << 1) - 1));
  }
  return (swaps % 2) ? -1 : 1;
}

std::uint32_t index_mask(const std::vector<int>& one_based) {
  std::uint32_t mask = 0;
  for (int i : one_based) mask |= 1u << (i - 1);
  return mask;
}

std::uint32_t index_mask(std::initializer_list<int> one_based) {
  return index_mask(std::vector<int>(one_based));
}

int differentiate_monomial(BasisKey& key, int variable) {
  auto& e = key.exponents[static_cast<std::size_t>(variable - 1)];
  if (e == 0) return 0;
  int multiplier = e;
  --e;
  return multiplier;
}

template <class Tag>
GradedTensor<Tag> GradedTensor<Tag>::term(int dim, const Rational& c,
                                          const std::vector<int>& exponents,
                                          const std::vector<int>& indices) {
  GradedTensor t(dim);
  if (static_cast<int>(exponents.size()) > dim) {
    throw DimensionError("exponent tuple longer than the dimension");
  }
  BasisKey key;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > std::numeric_limits<std::uint8_t>::max()) {
      throw DomainError("exponent out of range");
    }
    key.exponents[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  int sign = 1;
  std::uint32_t mask = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > dim) throw DimensionError("index outside 1..n");
    std::uint32_t bit = 1u << (idx - 1);
    sign *= wedge_sign(mask, bit);
    if (sign == 0) return t;
    mask |= bit;
  }
  key.indices = mask;
  t.add_term(key, sign * c);
  return t;
}

template <class Tag>
void GradedTensor<Tag>::add_term(const BasisKey& key, const Rational& c) {
  if (pvf::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (pvf::is_zero(it->second)) terms_.erase(it);
  }
}

template <class Tag>
GradedTensor<Tag>& GradedTensor<Tag>::operator+=(const GradedTensor& other) {
  require_same_dim(other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

template <class Tag>
GradedTensor<Tag>& GradedTensor<Tag>::operator-=(const GradedTensor& other) {
  require_same_dim(other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

template <class Tag>
GradedTensor<Tag>& GradedTensor<Tag>::operator*=(const Rational& s) {
  if (pvf::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

template <class Tag>
GradedTensor<Tag> wedge(const GradedTensor<Tag>& u, const GradedTensor<Tag>& v) {
  u.require_same_dim(v);
  GradedTensor<Tag> out(u.dim());
  for (const auto& [ka, ca] : u.terms()) {
    for (const auto& [kb, cb] : v.terms()) {
      int sign = wedge_sign(ka.indices, kb.indices);
      if (sign == 0) continue;
      BasisKey key;
      for (int i = 0; i < kMaxDim; ++i) {
        int e = ka.exponents[i] + kb.exponents[i];
        if (e > std::numeric_limits<std::uint8_t>::max()) throw DomainError("exponent overflow");
        key.exponents[i] = static_cast<std::uint8_t>(e);
      }
      key.indices = ka.indices | kb.indices;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(key, c);
    }
  }
  return out;
}

template <class Tag>
GradedTensor<Tag> partial(const GradedTensor<Tag>& u, int variable) {
  GradedTensor<Tag> out(u.dim());
  for (const auto& [key, c] : u.terms()) {
    BasisKey k = key;
    int m = differentiate_monomial(k, variable);
    if (m != 0) out.add_term(k, c * m);
  }
  return out;
}

template <class Tag>
GradedTensor<Tag> component(const GradedTensor<Tag>& u, BiDegree degree) {
  GradedTensor<Tag> out(u.dim());
  for (const auto& [key, c] : u.terms()) {
    if (key.degree() == degree.k && key.grade() == degree.ell) out.add_term(key, c);
  }
  return out;
}

template class GradedTensor<VectorTag>;
template class GradedTensor<FormTag>;

template PolyVectorField wedge(const PolyVectorField&, const PolyVectorField&);
template PolyDifferentialForm wedge(const PolyDifferentialForm&, const PolyDifferentialForm&);
template PolyVectorField partial(const PolyVectorField&, int);
template PolyDifferentialForm partial(const PolyDifferentialForm&, int);
template PolyVectorField component(const PolyVectorField&, BiDegree);
template PolyDifferentialForm component(const PolyDifferentialForm&, BiDegree);

}  // namespace pvf
