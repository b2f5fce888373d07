#include "pvf/decomposition.hpp"

namespace pvf {

namespace {

BiDegree require_homogeneous(const PolyVectorField& a, const char* what) {
  auto d = a.bidegree();
  if (!d) {
    if (a.is_zero()) return {0, 0};
    throw HomogeneityError(std::string(what) + " is not homogeneous");
  }
  return *d;
}

int sign_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// Wedge with e0 / normalizer, skipping the normalizer when the factor vanishes.
PolyVectorField wedge_euler(const PolyVectorField& u, int normalizer) {
  if (u.is_zero()) return u;
  if (normalizer == 0) throw DegenerateNormalizerError("Euler normalizer n + delta vanishes");
  return wedge(u, euler_field(u.dim())) * ratio(1, normalizer);
}

}  // namespace

DecompositionResult decompose(const PolyVectorField& a) {
  BiDegree d = require_homogeneous(a, "field");
  PolyVectorField trace = trace_D(a);
  if (trace.is_zero()) return {a, PolyVectorField(a.dim()), trace, d};
  PolyVectorField trace_part = wedge(trace, euler(a.dim(), d.k, d.ell));
  return {a - trace_part, trace_part, trace, d};
}

BracketParts bracket_parts(const PolyVectorField& a, const PolyVectorField& b) {
  a.require_same_dim(b);
  const int n = a.dim();
  if (a.is_zero() || b.is_zero()) return {PolyVectorField(n), PolyVectorField(n)};

  BiDegree da = require_homogeneous(a, "first argument");
  BiDegree db = require_homogeneous(b, "second argument");
  const int delta = da.delta();
  const int delta_p = db.delta();
  const int delta_pp = delta + delta_p;
  if (n + delta == 0 || n + delta_p == 0) {
    throw DegenerateNormalizerError("bracket decomposition needs n + delta != 0");
  }

  auto A = decompose(a);
  auto B = decompose(b);
  const int s = sign_pow(db.ell);  // (-1)^{l'}

  const Rational c1 = ratio(delta_p, n + delta);  // delta' / (n + delta)
  const Rational c2 = ratio(delta, n + delta_p);  // delta / (n + delta')

  // e'' has normalizer n + delta''; it multiplies brackets of bidegree
  // (k+k'-2, l+l'-2), which vanish whenever that normalizer does.
  PolyVectorField tracefree = schouten(A.tracefree, B.tracefree);
  tracefree += c1 * wedge(A.trace, B.tracefree);
  tracefree += (s * c2) * wedge(A.tracefree, B.trace);
  tracefree += c2 * wedge_euler(schouten(A.tracefree, B.trace), n + delta_pp);
  tracefree -= (s * c1) * wedge_euler(schouten(A.trace, B.tracefree), n + delta_pp);

  PolyVectorField trace = schouten(A.tracefree, B.trace) - s * schouten(A.trace, B.tracefree);
  const Rational c3 = ratio((n + delta_pp) * (delta - delta_p), (n + delta) * (n + delta_p));
  if (!is_zero(c3)) {
    PolyVectorField inner = wedge(A.trace, B.trace);
    inner += s * wedge_euler(schouten(A.trace, B.trace), n + delta_pp);
    trace -= c3 * inner;
  }
  return {tracefree, trace};
}

BracketParts self_bracket_parts(const PolyVectorField& a) {
  const int n = a.dim();
  if (a.is_zero()) return {PolyVectorField(n), PolyVectorField(n)};
  BiDegree d = require_homogeneous(a, "field");
  if (d.ell % 2 != 0) throw ParityError("self-bracket decomposition needs even l");

  auto A = decompose(a);
  PolyVectorField bracket_trace = schouten(A.trace, A.tracefree);
  PolyVectorField tracefree = schouten(A.tracefree, A.tracefree);
  if (!A.trace.is_zero()) {
    if (n + d.delta() == 0) throw DegenerateNormalizerError("n + k - l vanishes");
    Rational c = ratio(2 * d.delta(), n + d.delta());
    tracefree += c * (wedge(A.trace, A.tracefree) - wedge_euler(bracket_trace, n + 2 * d.delta()));
  }
  return {tracefree, Rational(-2) * bracket_trace};
}

}  // namespace pvf
