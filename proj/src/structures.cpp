#include "pvf/structures.hpp"

#include <functional>
#include <vector>

namespace pvf {

namespace {

BiDegree homogeneous_or_throw(const PolyVectorField& a, const char* what) {
  auto d = a.bidegree();
  if (!d) throw HomogeneityError(std::string(what) + " is not homogeneous");
  return *d;
}

PolyVectorField wedge_euler(const PolyVectorField& u, int normalizer) {
  if (u.is_zero()) return u;
  if (normalizer == 0) throw DegenerateNormalizerError("Euler normalizer vanishes");
  return wedge(u, euler_field(u.dim())) * ratio(1, normalizer);
}

// (k, 2l) of a homogeneous Jacobi pair, read from Lambda or else from E.
std::optional<BiDegree> jacobi_bidegree(const JacobiPair& pair) {
  if (!pair.lambda().is_zero()) return homogeneous_or_throw(pair.lambda(), "Lambda");
  if (!pair.e_field().is_zero()) {
    BiDegree e = homogeneous_or_throw(pair.e_field(), "E");
    return BiDegree{e.k + 1, e.ell + 1};
  }
  return std::nullopt;
}

}  // namespace

JacobiPair::JacobiPair(PolyVectorField lambda, PolyVectorField e_field)
    : lambda_(std::move(lambda)), e_field_(std::move(e_field)) {
  lambda_.require_same_dim(e_field_);
  std::set<int> lambda_grades;
  for (auto d : lambda_.bidegrees()) lambda_grades.insert(d.ell);
  if (lambda_grades.size() > 1) throw ParityError("Lambda mixes multivector degrees");
  for (int g : lambda_grades) {
    if (g % 2 != 0) throw ParityError("Lambda must have even multivector degree");
  }
  for (auto d : e_field_.bidegrees()) {
    if (d.ell % 2 == 0) throw ParityError("E must have odd multivector degree");
    if (!lambda_grades.empty() && d.ell != *lambda_grades.begin() - 1) {
      throw ParityError("E must have multivector degree one below Lambda");
    }
  }
}

RMatrix::RMatrix(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw DimensionError("unsupported dimension");
}

int RMatrix::slot(int i, int j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) throw DimensionError("matrix unit index outside 1..n");
  return (i - 1) * dim_ + (j - 1);
}

void RMatrix::add(int i, int j, int k, int l, const Rational& c) {
  int a = slot(i, j);
  int b = slot(k, l);
  if (a == b || is_zero(c)) return;
  Rational v = c;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  auto [it, inserted] = entries_.try_emplace({a, b}, v);
  if (!inserted) {
    it->second += v;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

Rational RMatrix::coefficient(int i, int j, int k, int l) const {
  int a = slot(i, j);
  int b = slot(k, l);
  if (a == b) return 0;
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return 0;
  return flip ? Rational(-it->second) : it->second;
}

bool is_poisson(const PolyVectorField& p) {
  for (auto d : p.bidegrees()) {
    if (d.ell % 2 != 0) throw ParityError("Poisson test needs even multivector degree");
  }
  return schouten(p, p).is_zero();
}

bool poisson_component_test(const PolyVectorField& a) {
  if (a.is_zero()) return true;
  BiDegree d = homogeneous_or_throw(a, "field");
  if (d.ell % 2 != 0) throw ParityError("Poisson test needs even multivector degree");
  auto parts = decompose(a);
  const int n = a.dim();
  PolyVectorField lhs = schouten(parts.tracefree, parts.tracefree);
  if (d.k == d.ell) {
    return lhs.is_zero() && schouten(parts.trace, parts.tracefree).is_zero();
  }
  if (parts.trace.is_zero()) return lhs.is_zero();
  PolyVectorField rhs = ratio(2 * (d.ell - d.k), n + d.delta()) * wedge(parts.trace, parts.tracefree);
  return lhs == rhs;
}

bool is_simple(const PolyVectorField& p) {
  if (!p.is_homogeneous()) throw PreconditionError("is_simple needs a homogeneous field");
  if (!is_poisson(p)) throw PreconditionError("is_simple needs a Poisson structure");
  return is_poisson(decompose(p).tracefree);
}

int generic_rank(const PolyVectorField& p) {
  for (auto d : p.bidegrees()) {
    if (d.ell != 2) throw ParityError("generic rank is defined for bi-vectors");
  }
  const int n = p.dim();
  // Skew coefficient matrix of polynomials, entry (i,j) for i < j.
  std::vector<std::vector<PolyVectorField>> entry(
      static_cast<std::size_t>(n), std::vector<PolyVectorField>(static_cast<std::size_t>(n), PolyVectorField(n)));
  for (const auto& [key, c] : p.terms()) {
    auto idx = key.index_list();
    BasisKey k = key;
    k.indices = 0;
    entry[static_cast<std::size_t>(idx[0] - 1)][static_cast<std::size_t>(idx[1] - 1)].add_term(k, c);
  }

  std::map<std::uint32_t, PolyVectorField> memo;
  // Pfaffian of the principal submatrix on `rows`, expanded along its first row.
  std::function<PolyVectorField(std::uint32_t)> pfaffian = [&](std::uint32_t rows) -> PolyVectorField {
    if (rows == 0) return PolyVectorField::constant(n, 1);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (rows & (1u << i)) idx.push_back(i);
    }
    PolyVectorField total(n);
    const int first = idx[0];
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
      const auto& a = entry[static_cast<std::size_t>(first)][static_cast<std::size_t>(idx[pos])];
      if (a.is_zero()) continue;
      std::uint32_t rest = rows & ~(1u << first) & ~(1u << idx[pos]);
      PolyVectorField term = wedge(a, pfaffian(rest));
      // Sign (-1)^{pos+1} for 0-based position within the submatrix.
      if (pos % 2 == 0) term = -term;
      total += term;
    }
    memo.emplace(rows, total);
    return total;
  };

  for (int r = n - (n % 2); r >= 2; r -= 2) {
    for (std::uint32_t rows = 0; rows < (1u << n); ++rows) {
      if (std::popcount(rows) != r) continue;
      if (!pfaffian(rows).is_zero()) return r;
    }
  }
  return 0;
}

bool is_jacobi(const JacobiPair& pair) {
  const auto& lambda = pair.lambda();
  const auto& e = pair.e_field();
  if (!schouten(lambda, e).is_zero()) return false;
  return schouten(lambda, lambda) == Rational(2) * wedge(e, lambda);
}

PolyVectorField poisson_from_jacobi(const JacobiPair& pair) {
  const int n = pair.lambda().dim();
  auto degree = jacobi_bidegree(pair);
  if (!degree) return PolyVectorField(n);
  const int k = degree->k;
  const int g = degree->ell;
  if (k == g) throw ExceptionalDegreeError("k = 2l has no Poisson counterpart of this form");
  if (!is_jacobi(pair)) throw PreconditionError("input is not a Jacobi structure");

  auto lambda = decompose(pair.lambda());
  auto e = decompose(pair.e_field());
  PolyVectorField trace = lambda.trace + ratio(n + k - g, g - k) * e.tracefree;
  return lambda.tracefree + wedge_euler(trace, n + k - g);
}

JacobiPair jacobi_from_poisson(const PolyVectorField& p, const PolyVectorField& f0,
                               const PolyVectorField& xi) {
  const int n = p.dim();
  p.require_same_dim(f0);
  p.require_same_dim(xi);
  if (p.is_zero()) return JacobiPair(p, PolyVectorField(n));
  BiDegree d = homogeneous_or_throw(p, "Pi");
  const int k = d.k;
  const int g = d.ell;
  if (g % 2 != 0) throw ParityError("Pi must have even multivector degree");
  if (k == g) throw ExceptionalDegreeError("k = 2l is the exceptional degree");
  if (!is_poisson(p)) throw PreconditionError("input is not a Poisson structure");
  if (!trace_D(f0).is_zero()) throw PreconditionError("F0 must be trace free");
  for (auto fd : f0.bidegrees()) {
    if (fd != BiDegree{k - 1, g - 1}) throw HomogeneityError("F0 must have bidegree (k-1, 2l-1)");
  }
  for (auto xd : xi.bidegrees()) {
    if (xd != BiDegree{k - 2, g - 2}) throw HomogeneityError("xi must have bidegree (k-2, 2l-2)");
  }

  auto parts = decompose(p);
  PolyVectorField e_tilde = parts.trace - f0;
  PolyVectorField lhs = wedge(xi, parts.tracefree);
  PolyVectorField rhs = schouten(parts.tracefree, f0) + wedge(f0, e_tilde);
  if (lhs != rhs) throw IncompatibleSplittingError("xi ^ Pi0 != [Pi0, F0] + F0 ^ E~0");

  PolyVectorField lambda = parts.tracefree + wedge_euler(f0, n + k - g);
  PolyVectorField e_inner = e_tilde + wedge_euler(xi, n + k - g);
  PolyVectorField e_field(n);
  if (!e_inner.is_zero()) {
    if (n + k - g == 0) throw DegenerateNormalizerError("n + k - 2l vanishes");
    e_field = ratio(g - k, n + k - g) * e_inner;
  }
  return JacobiPair(std::move(lambda), std::move(e_field));
}

std::pair<JacobiPair, JacobiPair> associated_special_cases(const PolyVectorField& p) {
  const int n = p.dim();
  JacobiPair first(p, PolyVectorField(n));
  if (p.is_zero()) return {first, first};
  BiDegree d = homogeneous_or_throw(p, "Pi");
  auto parts = decompose(p);
  PolyVectorField e(n);
  if (!parts.trace.is_zero()) {
    if (d.k == d.ell) throw ExceptionalDegreeError("k = 2l is the exceptional degree");
    e = ratio(d.ell - d.k, n + d.delta()) * parts.trace;
  }
  return {first, JacobiPair(parts.tracefree, e)};
}

bool are_associated(const PolyVectorField& p, const JacobiPair& pair) {
  const int n = p.dim();
  p.require_same_dim(pair.lambda());
  auto pd = p.bidegree();
  auto ld = jacobi_bidegree(pair);
  if (pd && ld && *pd != *ld) throw DimensionError("Poisson and Jacobi bidegrees differ");
  if (!p.is_zero() && !pd) throw HomogeneityError("Pi is not homogeneous");
  BiDegree d = pd ? *pd : (ld ? *ld : BiDegree{0, 0});

  auto pi = decompose(p);
  auto lambda = decompose(pair.lambda());
  auto e = decompose(pair.e_field());
  if (pi.tracefree != lambda.tracefree) return false;
  PolyVectorField diff = lambda.trace - pi.trace;
  if (diff.is_zero()) return e.tracefree.is_zero();
  if (n + d.delta() == 0) throw DegenerateNormalizerError("n + k - 2l vanishes");
  return e.tracefree == ratio(d.delta(), n + d.delta()) * diff;
}

bool exceptional_association_holds(const PolyVectorField& p, const JacobiPair& pair,
                                   const PolyVectorField& eta) {
  auto pd = p.bidegree();
  auto ld = jacobi_bidegree(pair);
  if (pd && ld && *pd != *ld) throw DimensionError("Poisson and Jacobi bidegrees differ");
  auto d = pd ? pd : ld;
  if (d && d->k != d->ell) throw PreconditionError("checker applies to k = 2l only");

  auto pi = decompose(p);
  auto lambda = decompose(pair.lambda());
  auto e = decompose(pair.e_field());
  if (pi.tracefree != lambda.tracefree) return false;
  if (!e.tracefree.is_zero()) return false;
  if (lambda.trace != pi.trace + eta) return false;
  return schouten(eta, lambda.tracefree) == -wedge(e.trace, lambda.tracefree);
}

PolyVectorField r_matrix_to_bivector(const RMatrix& r) {
  const int n = r.dim();
  PolyVectorField out(n);
  for (const auto& [slots, c] : r.entries()) {
    int i = slots.first / n + 1;
    int j = slots.first % n + 1;
    int k = slots.second / n + 1;
    int l = slots.second % n + 1;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    ++exps[static_cast<std::size_t>(i - 1)];
    ++exps[static_cast<std::size_t>(k - 1)];
    out += PolyVectorField::term(n, c, exps, {j, l});
  }
  return out;
}

}  // namespace pvf
