#pragma once

#include "pvf/duality.hpp"
#include "pvf/field_algebra.hpp"

namespace pvf {

/// A = tracefree + trace_part with trace_part = DA ^ e^(k,l).
struct DecompositionResult {
  PolyVectorField tracefree;
  PolyVectorField trace_part;
  PolyVectorField trace;
  BiDegree bidegree;
};

/// Unique trace-free/trace splitting of a (k,l)-homogeneous field.
/// When DA = 0 the field is returned unchanged without building e^(k,l),
/// which also covers the degenerate case k = 0, l = n. The zero field
/// decomposes into zeros with bidegree (0, 0). Throws HomogeneityError for
/// inputs with more than one bidegree.
DecompositionResult decompose(const PolyVectorField& a);

/// Trace-free part [A,B]_0 and trace D[A,B] of a Schouten bracket, evaluated
/// from the decompositions of A and B rather than from the bracket itself.
struct BracketParts {
  PolyVectorField tracefree;
  PolyVectorField trace;
};

/// With d = k - l, d' = k' - l', s = (-1)^{l'} and e'' = e^(k+k'-1, l+l'-1):
///   [A,B]_0 = [A0,B0] + d'/(n+d) DA ^ B0 + s d/(n+d') A0 ^ DB
///             + d/(n+d') [A0,DB] ^ e'' - s d'/(n+d) [DA,B0] ^ e''.
/// Requires homogeneous A, B with n + (k - l) != 0 and n + (k' - l') != 0
/// (DegenerateNormalizerError otherwise).
BracketParts bracket_parts(const PolyVectorField& a, const PolyVectorField& b);

/// Self-bracket of an even field:
///   [A,A]_0 = [A0,A0] + 2(k-l)/(n+k-l) (DA ^ A0 - [DA,A0] ^ e^(2k,2l)),
///   D[A,A]  = -2 [DA, A0].
/// Throws ParityError for odd l.
BracketParts self_bracket_parts(const PolyVectorField& a);

}  // namespace pvf
