#pragma once

#include <string>

#include "pvf/tensor.hpp"

namespace pvf::cli {

/// Coordinate names used when printing.
/// numeric: x1..xn, d1..dn. xyz: x, y, z (n = 3). txyz: t, x, y, z (n = 4).
enum class AliasMode { numeric, xyz, txyz };

/// Parses "numeric", "xyz" or "txyz"; throws std::invalid_argument otherwise.
AliasMode parse_alias(const std::string& name);

/// Sum of terms such as "3/2*x1^2*x3*d1/\d2 - x2*d3".
///
/// Variables x1..xn, and for n = 3 also x, y, z, for n = 4 also t, x, y, z.
/// Partials d1..dn with the matching aliases dx, dy, dz, dt. `^` raises a
/// variable to a non-negative integer power, `*` multiplies, `/\` joins
/// partials. Wedge order is canonicalized with its sign.
/// Throws ParseError carrying the offending position.
PolyVectorField parse_expr(const std::string& text, int n);

/// Same grammar read as a differential form: d_i stands for dx^i.
PolyDifferentialForm parse_form(const std::string& text, int n);

/// Canonical text, "0" for zero. parse_expr(format_expr(u), n) == u.
std::string format_expr(const PolyVectorField& u, AliasMode mode = AliasMode::numeric);
std::string format_expr(const PolyDifferentialForm& omega, AliasMode mode = AliasMode::numeric);

}  // namespace pvf::cli
