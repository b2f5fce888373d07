#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pvf/classifier.hpp"
#include "pvf/cli/expression.hpp"

namespace pvf::cli {

inline constexpr int kCatalogFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// "r11,r12,..;r21,.." with integer or p/q entries. Throws ParseError.
LinearMatrix parse_matrix(const std::string& text);

/// Catalog document for a classification case; `kind` is "cubic3" or "quad4".
/// Fields and forms are written with the given alias mode.
nlohmann::json catalog_to_json(const ClassificationCase& c, const std::string& kind, AliasMode mode);

struct CatalogCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// Re-parses every generator of a document and recomputes its flags.
CatalogCheck reverify_catalog(const nlohmann::json& doc);

}  // namespace pvf::cli
