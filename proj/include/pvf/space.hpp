#pragma once

#include <map>
#include <vector>

#include "pvf/linalg.hpp"
#include "pvf/tensor.hpp"

namespace pvf {

/// Exponent tuples of degree k in n variables, x1^k first (descending lex).
std::vector<std::vector<int>> monomials(int n, int k);

/// Strictly increasing index tuples of size l from 1..n, lexicographic.
std::vector<std::vector<int>> index_tuples(int n, int ell);

/// Coordinates on the homogeneous space of bidegree (k, l) in dimension n.
/// Basis element (m, J) is ordered index-major: all monomials for the first
/// index tuple, then the next tuple.
template <class Tag>
class HomogeneousBasis {
 public:
  using Tensor = GradedTensor<Tag>;

  HomogeneousBasis(int n, int k, int ell);
  /// Custom monomial order (e.g. a published display order).
  HomogeneousBasis(int n, int ell, std::vector<std::vector<int>> monomial_order);

  int dim() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  std::size_t monomial_count() const { return monomials_.size(); }

  Tensor element(std::size_t i) const;
  Tensor combine(const RationalVector& coefficients) const;
  /// Throws HomogeneityError if `t` has a term outside this space.
  RationalVector coordinates(const Tensor& t) const;

 private:
  void build(const std::vector<std::vector<int>>& index_list);

  int n_;
  std::vector<std::vector<int>> monomials_;
  std::vector<BasisKey> keys_;
  std::map<BasisKey, std::size_t, BasisKeyLess> position_;
};

extern template class HomogeneousBasis<VectorTag>;
extern template class HomogeneousBasis<FormTag>;

}  // namespace pvf
