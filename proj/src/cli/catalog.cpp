#include "pvf/cli/catalog.hpp"

#include <sstream>

namespace pvf::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int alias_dim(AliasMode mode, int dim) {
  if (mode == AliasMode::xyz && dim != 3) return 0;
  if (mode == AliasMode::txyz && dim != 4) return 0;
  return dim;
}

}  // namespace

LinearMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t offset = 0;
  for (const auto& row_text : split(text, ';')) {
    std::vector<Rational> row;
    std::size_t entry_offset = offset;
    for (const auto& entry : split(row_text, ',')) {
      std::string t = trim(entry);
      try {
        row.push_back(parse_rational(t));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad matrix entry '" + t + "'", entry_offset);
      }
      entry_offset += entry.size() + 1;
    }
    rows.push_back(std::move(row));
    offset += row_text.size() + 1;
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("matrix must be square", 0);
  }
  return LinearMatrix::from_rows(rows);
}

nlohmann::json catalog_to_json(const ClassificationCase& c, const std::string& kind, AliasMode mode) {
  using nlohmann::json;
  const int n = c.matrix.dim();
  if (alias_dim(mode, n) == 0) mode = AliasMode::numeric;
  json doc;
  doc["format_version"] = kCatalogFormatVersion;
  doc["tool_version"] = kToolVersion;
  doc["kind"] = kind;
  doc["dim"] = n;
  doc["alias"] = mode == AliasMode::numeric ? "numeric" : (mode == AliasMode::xyz ? "xyz" : "txyz");

  json matrix = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(to_string(c.matrix(i, j)));
    matrix.push_back(row);
  }
  doc["matrix"] = matrix;

  json kernel;
  std::visit(
      [&](const auto& space) {
        kernel["ambient"] = space.ambient;
        kernel["parameters"] = space.parameter_names;
        json basis = json::array();
        for (const auto& b : space.basis) basis.push_back(format_expr(b, mode));
        kernel["basis"] = basis;
      },
      c.kernel);
  doc["kernel"] = kernel;

  json tracefree = json::array();
  for (const auto& t : c.tracefree_basis) tracefree.push_back(format_expr(t, mode));
  doc["tracefree_basis"] = tracefree;

  if (c.constraints) {
    json cons;
    cons["parameters"] = c.constraints->parameters;
    json polys = json::array();
    for (const auto& q : c.constraints->constraints) {
      json terms = json::array();
      for (const auto& [ij, coeff] : q) {
        terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coefficient", to_string(coeff)}});
      }
      polys.push_back(terms);
    }
    cons["polynomials"] = polys;
    doc["constraints"] = cons;
  } else {
    doc["constraints"] = nullptr;
  }

  json gens = json::array();
  for (const auto& g : c.generators) {
    gens.push_back({{"field", format_expr(g.field, mode)},
                    {"poisson", g.poisson},
                    {"simple", g.simple},
                    {"rank", g.rank}});
  }
  doc["generators"] = gens;
  return doc;
}

CatalogCheck reverify_catalog(const nlohmann::json& doc) {
  CatalogCheck check;
  auto fail = [&](const std::string& why) {
    check.ok = false;
    check.mismatches.push_back(why);
  };
  if (!doc.contains("format_version") || doc["format_version"] != kCatalogFormatVersion) {
    fail("unsupported format_version");
    return check;
  }
  const int n = doc.at("dim").get<int>();
  std::size_t index = 0;
  for (const auto& g : doc.at("generators")) {
    std::string label = "generator " + std::to_string(index++);
    PolyVectorField field = parse_expr(g.at("field").get<std::string>(), n);
    VerifiedGenerator v = verify_generator(field);
    if (v.poisson != g.at("poisson").get<bool>()) fail(label + ": poisson flag differs");
    if (v.simple != g.at("simple").get<bool>()) fail(label + ": simple flag differs");
    if (v.rank != g.at("rank").get<int>()) fail(label + ": rank differs");
  }
  return check;
}

}  // namespace pvf::cli
