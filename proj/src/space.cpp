#include "pvf/space.hpp"

#include <functional>

namespace pvf {

std::vector<std::vector<int>> monomials(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      current[static_cast<std::size_t>(var)] = left;
      out.push_back(current);
      return;
    }
    for (int e = left; e >= 0; --e) {
      current[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  if (k >= 0) rec(0, k);
  return out;
}

std::vector<std::vector<int>> index_tuples(int n, int ell) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == ell) {
      out.push_back(current);
      return;
    }
    for (int i = start; i <= n; ++i) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
  };
  if (ell >= 0 && ell <= n) rec(1);
  return out;
}

template <class Tag>
HomogeneousBasis<Tag>::HomogeneousBasis(int n, int k, int ell) : n_(n), monomials_(monomials(n, k)) {
  build(index_tuples(n, ell));
}

template <class Tag>
HomogeneousBasis<Tag>::HomogeneousBasis(int n, int ell, std::vector<std::vector<int>> monomial_order)
    : n_(n), monomials_(std::move(monomial_order)) {
  build(index_tuples(n, ell));
}

template <class Tag>
void HomogeneousBasis<Tag>::build(const std::vector<std::vector<int>>& index_list) {
  for (const auto& idx : index_list) {
    for (const auto& m : monomials_) {
      BasisKey key;
      for (std::size_t i = 0; i < m.size(); ++i) key.exponents[i] = static_cast<std::uint8_t>(m[i]);
      key.indices = index_mask(idx);
      position_.emplace(key, keys_.size());
      keys_.push_back(key);
    }
  }
}

template <class Tag>
typename HomogeneousBasis<Tag>::Tensor HomogeneousBasis<Tag>::element(std::size_t i) const {
  Tensor t(n_);
  t.add_term(keys_.at(i), 1);
  return t;
}

template <class Tag>
typename HomogeneousBasis<Tag>::Tensor HomogeneousBasis<Tag>::combine(
    const RationalVector& coefficients) const {
  if (coefficients.size() != keys_.size()) throw DimensionError("coordinate vector size mismatch");
  Tensor t(n_);
  for (std::size_t i = 0; i < keys_.size(); ++i) t.add_term(keys_[i], coefficients[i]);
  return t;
}

template <class Tag>
RationalVector HomogeneousBasis<Tag>::coordinates(const Tensor& t) const {
  if (t.dim() != n_) throw DimensionError("dimension mismatch");
  RationalVector v(keys_.size(), Rational(0));
  for (const auto& [key, c] : t.terms()) {
    auto it = position_.find(key);
    if (it == position_.end()) throw HomogeneityError("term outside the homogeneous space");
    v[it->second] = c;
  }
  return v;
}

template class HomogeneousBasis<VectorTag>;
template class HomogeneousBasis<FormTag>;

}  // namespace pvf
