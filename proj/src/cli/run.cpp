#include "pvf/cli/run.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "pvf/classifier.hpp"
#include "pvf/cli/catalog.hpp"
#include "pvf/cli/expression.hpp"
#include "pvf/decomposition.hpp"
#include "pvf/duality.hpp"
#include "pvf/field_algebra.hpp"
#include "pvf/random.hpp"
#include "pvf/structures.hpp"

namespace pvf::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::optional<int> dim;
  bool json = false;
  std::string alias = "numeric";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  const Globals& globals;
  std::ostream& out;

  int dim() const {
    if (globals.dim) return *globals.dim;
    if (globals.alias == "xyz") return 3;
    if (globals.alias == "txyz") return 4;
    throw UsageError("--dim is required for this command");
  }
  AliasMode mode() const { return parse_alias(globals.alias); }
  std::string show(const PolyVectorField& u) const { return format_expr(u, mode()); }
  PolyVectorField field(const std::string& text) const { return parse_expr(text, dim()); }

  int emit_field(const std::string& command, const PolyVectorField& u) const {
    if (globals.json) {
      out << json{{"command", command}, {"dim", u.dim()}, {"result", show(u)}}.dump() << "\n";
    } else {
      out << show(u) << "\n";
    }
    return 0;
  }
  int emit_bool(const std::string& command, bool value) const {
    if (globals.json) {
      out << json{{"command", command}, {"result", value}}.dump() << "\n";
    } else {
      out << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
  }
  int emit_int(const std::string& command, long long value) const {
    if (globals.json) {
      out << json{{"command", command}, {"result", value}}.dump() << "\n";
    } else {
      out << value << "\n";
    }
    return 0;
  }
};

std::string bidegree_text(BiDegree d) { return "(" + std::to_string(d.k) + "," + std::to_string(d.ell) + ")"; }

int emit_catalog(const Context& ctx, const ClassificationCase& c, const std::string& kind,
                 const std::string& output_path) {
  AliasMode mode = ctx.mode();
  json doc = catalog_to_json(c, kind, mode);
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) throw UsageError("cannot write " + output_path);
    file << doc.dump(2) << "\n";
  }
  if (ctx.globals.json) {
    ctx.out << doc.dump(2) << "\n";
    return 0;
  }
  auto& out = ctx.out;
  std::visit(
      [&](const auto& space) {
        out << "kernel dimension: " << space.dimension() << "\n";
        for (std::size_t i = 0; i < space.basis.size(); ++i) {
          out << "  " << space.parameter_names[i] << ": " << format_expr(space.basis[i], mode) << "\n";
        }
      },
      c.kernel);
  out << "trace-free basis: " << c.tracefree_basis.size() << "\n";
  for (const auto& t : c.tracefree_basis) out << "  " << format_expr(t, mode) << "\n";
  if (c.constraints) {
    out << "quadratic constraints: " << c.constraints->constraints.size() << "\n";
    for (const auto& q : c.constraints->constraints) {
      out << " ";
      bool first = true;
      for (const auto& [ij, coeff] : q) {
        out << (first ? " " : (sgn(coeff) < 0 ? " - " : " + "));
        Rational shown = first ? coeff : Rational(abs(coeff));
        out << to_string(shown) << "*" << c.constraints->parameters[ij.first] << "*"
            << c.constraints->parameters[ij.second];
        first = false;
      }
      out << " = 0\n";
    }
  }
  out << "generators: " << c.generators.size() << "\n";
  for (const auto& g : c.generators) {
    out << "  " << format_expr(g.field, mode) << "  [poisson=" << (g.poisson ? "true" : "false")
        << " simple=" << (g.simple ? "true" : "false") << " rank=" << g.rank << "]\n";
  }
  return 0;
}

RMatrix parse_rmatrix(int n, const std::vector<std::string>& terms) {
  RMatrix r(n);
  for (const auto& text : terms) {
    std::string indices = text;
    Rational c = 1;
    if (auto colon = text.find(':'); colon != std::string::npos) {
      indices = text.substr(0, colon);
      try {
        c = parse_rational(text.substr(colon + 1));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient in '" + text + "'", colon + 1);
      }
    }
    std::vector<int> idx;
    std::string cur;
    for (char ch : indices + ",") {
      if (ch == ',') {
        try {
          std::size_t used = 0;
          idx.push_back(std::stoi(cur, &used));
          if (used != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
          throw ParseError("bad index in '" + text + "'", 0);
        }
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (idx.size() != 4) throw ParseError("expected i,j,k,l[:c] in '" + text + "'", 0);
    r.add(idx[0], idx[1], idx[2], idx[3], c);
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of polynomial poly-vector fields", "pvf"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--dim", globals.dim, "Ambient dimension n (1..8)")->check(CLI::Range(1, kMaxDim));
  app.add_flag("--json", globals.json, "Machine-readable output");
  app.add_option("--alias", globals.alias, "Output coordinate names")
      ->check(CLI::IsMember({"numeric", "xyz", "txyz"}));
  app.fallthrough();

  Context ctx{globals, out};
  std::function<int()> action;

  auto binary = [&](const std::string& name, const std::string& help, auto op) {
    auto* sub = app.add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("A", *a, "first operand")->required();
    sub->add_option("B", *b, "second operand")->required();
    sub->callback([&, a, b, name, op] { action = [&, a, b, name, op] { return ctx.emit_field(name, op(ctx.field(*a), ctx.field(*b))); }; });
  };
  binary("wedge", "Exterior product A /\\ B", [](const auto& a, const auto& b) { return wedge(a, b); });
  binary("bracket", "Schouten bracket [A, B]", [](const auto& a, const auto& b) { return schouten(a, b); });

  std::string expr;
  auto* trace = app.add_subcommand("trace", "Trace operator D");
  trace->add_option("A", expr, "field")->required();
  trace->callback([&] { action = [&] { return ctx.emit_field("trace", trace_D(ctx.field(expr))); }; });

  auto* dec = app.add_subcommand("decompose", "Trace-free and trace parts");
  dec->add_option("A", expr, "homogeneous field")->required();
  dec->callback([&] {
    action = [&] {
      auto r = decompose(ctx.field(expr));
      if (globals.json) {
        out << json{{"command", "decompose"},
                    {"bidegree", {r.bidegree.k, r.bidegree.ell}},
                    {"tracefree", ctx.show(r.tracefree)},
                    {"trace", ctx.show(r.trace)},
                    {"trace_part", ctx.show(r.trace_part)}}
                   .dump()
            << "\n";
      } else {
        out << "bidegree: " << bidegree_text(r.bidegree) << "\n"
            << "tracefree: " << ctx.show(r.tracefree) << "\n"
            << "trace: " << ctx.show(r.trace) << "\n"
            << "trace_part: " << ctx.show(r.trace_part) << "\n";
      }
      return 0;
    };
  });

  auto* poisson = app.add_subcommand("check-poisson", "Is [P, P] = 0?");
  poisson->add_option("P", expr, "even multivector field")->required();
  poisson->callback([&] { action = [&] { return ctx.emit_bool("check-poisson", is_poisson(ctx.field(expr))); }; });

  std::string e_expr;
  auto* jacobi = app.add_subcommand("check-jacobi", "Is (Lambda, E) a Jacobi structure?");
  jacobi->add_option("LAMBDA", expr, "even multivector field")->required();
  jacobi->add_option("E", e_expr, "odd multivector field")->required();
  jacobi->callback([&] {
    action = [&] { return ctx.emit_bool("check-jacobi", is_jacobi(JacobiPair(ctx.field(expr), ctx.field(e_expr)))); };
  });

  auto* rank = app.add_subcommand("rank", "Generic rank of a bi-vector");
  rank->add_option("P", expr, "bi-vector")->required();
  rank->callback([&] { action = [&] { return ctx.emit_int("rank", generic_rank(ctx.field(expr))); }; });

  int irrep_n = 0, irrep_k = 0, irrep_l = 0;
  auto* irrep = app.add_subcommand("dim-irrep", "Dimension of the trace-free summand of P^(k,l)");
  irrep->add_option("n", irrep_n)->required();
  irrep->add_option("k", irrep_k)->required();
  irrep->add_option("l", irrep_l)->required();
  irrep->callback([&] { action = [&] { return ctx.emit_int("dim-irrep", dim_irrep(irrep_n, irrep_k, irrep_l)); }; });

  auto* assoc = app.add_subcommand("associate", "The two Jacobi structures (Pi, 0) and (Pi0, c DPi)");
  assoc->add_option("P", expr, "homogeneous Poisson field")->required();
  assoc->callback([&] {
    action = [&] {
      PolyVectorField p = ctx.field(expr);
      if (!is_poisson(p)) throw PreconditionError("input is not a Poisson structure");
      auto [first, second] = associated_special_cases(p);
      if (globals.json) {
        json pairs = json::array();
        for (const auto* pair : {&first, &second}) {
          pairs.push_back({{"lambda", ctx.show(pair->lambda())},
                           {"e", ctx.show(pair->e_field())},
                           {"jacobi", is_jacobi(*pair)}});
        }
        out << json{{"command", "associate"}, {"pairs", pairs}}.dump() << "\n";
      } else {
        int i = 1;
        for (const auto* pair : {&first, &second}) {
          out << "pair " << i++ << ": Lambda = " << ctx.show(pair->lambda()) << "; E = " << ctx.show(pair->e_field())
              << "; jacobi = " << (is_jacobi(*pair) ? "true" : "false") << "\n";
        }
      }
      return 0;
    };
  });

  std::string matrix_text, output_path;
  auto* cubic = app.add_subcommand("classify-cubic3", "Simple cubic Poisson structures in dimension 3");
  cubic->add_option("--matrix", matrix_text, "trace-free C as \"r11,r12,r13;r21,...\"")->required();
  cubic->add_option("--output", output_path, "also write the catalog document here");
  cubic->callback([&] {
    action = [&] { return emit_catalog(ctx, cubic3_catalog(parse_matrix(matrix_text)), "cubic3", output_path); };
  });

  auto* quad = app.add_subcommand("classify-quad4", "Quadratic Poisson structures in dimension 4");
  quad->add_option("--matrix", matrix_text, "trace-free A as \"r11,...;r21,...\"")->required();
  quad->add_option("--output", output_path, "also write the catalog document here");
  quad->callback([&] {
    action = [&] { return emit_catalog(ctx, quad4_catalog(parse_matrix(matrix_text)), "quad4", output_path); };
  });

  std::vector<std::string> r_terms;
  auto* rmat = app.add_subcommand("rmatrix", "Quadratic bi-vector of an element of Lambda^2 gl_n");
  rmat->add_option("TERMS", r_terms, "c * E_ij /\\ E_kl written i,j,k,l[:c]")->required();
  rmat->callback([&] {
    action = [&] { return ctx.emit_field("rmatrix", r_matrix_to_bivector(parse_rmatrix(ctx.dim(), r_terms))); };
  });

  std::string catalog_path;
  auto* verify = app.add_subcommand("verify-catalog", "Recompute the flags of a catalog document");
  verify->add_option("FILE", catalog_path)->required()->check(CLI::ExistingFile);
  verify->callback([&] {
    action = [&] {
      std::ifstream file(catalog_path);
      auto check = reverify_catalog(json::parse(file));
      for (const auto& m : check.mismatches) err << m << "\n";
      return ctx.emit_bool("verify-catalog", check.ok);
    };
  });

  auto* self = app.add_subcommand("selftest", "Run the randomized invariant suite");
  self->callback([&] { action = [&] { return selftest(out) ? 0 : 1; }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: invalid catalog document: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace pvf::cli
