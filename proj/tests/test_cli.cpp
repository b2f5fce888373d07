#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_fixtures.hpp"
#include "pvf/classifier.hpp"
#include "pvf/cli/catalog.hpp"
#include "pvf/cli/expression.hpp"
#include "pvf/cli/run.hpp"
#include "pvf/field_algebra.hpp"
#include "support.hpp"

using namespace pvf;
using namespace pvf::cli;
using support::T;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parsing expressions") {
  CHECK(parse_expr("x1^2*d2", 3) == T(3, 1, {2, 0, 0}, {2}));
  CHECK(parse_expr("d2/\\d1", 2) == T(2, -1, {0, 0}, {1, 2}));
  CHECK(parse_expr("3/2*x1*x3*d1/\\d2 - x2*d3", 3) ==
        T(3, Rational(3, 2), {1, 0, 1}, {1, 2}) - T(3, 1, {0, 1, 0}, {3}));
  CHECK(parse_expr("x*y*dz", 3) == T(3, 1, {1, 1, 0}, {3}));
  CHECK(parse_expr("t^2*dz", 4) == T(4, 1, {2, 0, 0, 0}, {4}));
  CHECK(parse_expr("x2*x2*d1", 2) == T(2, 1, {0, 2}, {1}));
  CHECK(parse_expr("5", 2) == PolyVectorField::constant(2, 5));
  CHECK(parse_expr("0", 2).is_zero());
  CHECK(parse_expr("d1/\\d1", 2).is_zero());
  CHECK(parse_expr("x1*d1 - x1*d1", 2).is_zero());
  CHECK(parse_form("x2*d1", 2) == PolyDifferentialForm::term(2, 1, {0, 1}, {1}));

  CHECK_THROWS_AS(parse_expr("x5*d1", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("x1*", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("x1 /\\ x2", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("t*d1", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0*d1", 3), ParseError);
  CHECK_THROWS_AS(parse_expr("x1^-1*d1", 3), ParseError);
  try {
    parse_expr("x1 + x9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("formatting expressions") {
  CHECK(format_expr(euler_field(2)) == "x1*d1 + x2*d2");
  CHECK(format_expr(PolyVectorField(3)) == "0");
  CHECK(format_expr(T(3, 1, {2, 0, 0}, {2})) == "x1^2*d2");
  CHECK(format_expr(T(3, 1, {0, 2, 0}, {2}), AliasMode::xyz) == "y^2*dy");
  CHECK(format_expr(T(4, -1, {1, 0, 0, 1}, {1, 3}), AliasMode::txyz) == "-t*z*dt/\\dy");
  CHECK(format_expr(T(2, Rational(-3, 4), {0, 0}, {1, 2})) == "-3/4*d1/\\d2");
  CHECK(format_expr(PolyVectorField::constant(2, 7)) == "7");
  CHECK(format_expr(PolyDifferentialForm::term(2, 1, {0, 1}, {1})) == "x2*d1");
  CHECK(parse_alias("xyz") == AliasMode::xyz);
  CHECK_THROWS_AS(parse_alias("greek"), std::invalid_argument);
}

TEST_CASE("parse and format are inverse on the fixture list") {
  auto list = cli_fixtures::expressions();
  REQUIRE(list.size() == 50);
  for (const auto& f : list) {
    CAPTURE(f.text);
    auto u = parse_expr(f.text, f.dim);
    CHECK(parse_expr(format_expr(u), f.dim) == u);
    CHECK(format_expr(parse_expr(format_expr(u), f.dim)) == format_expr(u));
    if (f.dim == 3) CHECK(parse_expr(format_expr(u, AliasMode::xyz), 3) == u);
    if (f.dim == 4) CHECK(parse_expr(format_expr(u, AliasMode::txyz), 4) == u);
    auto omega = parse_form(f.text, f.dim);
    CHECK(parse_form(format_expr(omega), f.dim) == omega);
  }
}

TEST_CASE("parse and format are inverse on random fields") {
  RandomFields rng(701);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.integer(1, 6);
    auto u = rng.field(n, rng.integer(0, 4), rng.integer(0, n), rng.integer(0, 6), 9) +
             rng.field(n, rng.integer(0, 2), rng.integer(0, n), rng.integer(0, 3), 9) * Rational(1, 7);
    CHECK(parse_expr(format_expr(u), n) == u);
  }
}

TEST_CASE("matrix arguments") {
  CHECK(parse_matrix("1,1,0,0;0,1,0,0;0,0,-1,1;0,0,0,-1") ==
        support::M({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}));
  CHECK(parse_matrix("1/2,0;0,-1/2") == LinearMatrix::diagonal({Rational(1, 2), Rational(-1, 2)}));
  CHECK(parse_matrix(" 0, 1 ; -1 , 0 ") == support::M({{0, 1}, {-1, 0}}));
  CHECK_THROWS_AS(parse_matrix("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,a;0,1"), ParseError);
}

TEST_CASE("documented command examples") {
  auto t = invoke({"trace", "--dim", "3", "x1*d1 + x2*d2 + x3*d3"});
  CHECK(t.status == 0);
  CHECK(t.out == "3\n");
  auto p = invoke({"check-poisson", "--dim", "3", "x1*d1/\\d2 + x2*d2/\\d3"});
  CHECK(p.status == 1);
  CHECK(p.out == "false\n");
  auto d = invoke({"dim-irrep", "3", "2", "2"});
  CHECK(d.status == 0);
  CHECK(d.out == "10\n");
}

TEST_CASE("command line behaviour") {
  auto w = invoke({"wedge", "--dim", "2", "d1", "x1*d2"});
  CHECK(w.status == 0);
  CHECK(w.out == "x1*d1/\\d2\n");
  auto b = invoke({"bracket", "--alias", "xyz", "dx", "x^2*dy"});
  CHECK(b.status == 0);
  CHECK(b.out == "2*x*dy\n");
  CHECK(invoke({"check-poisson", "--dim", "3", "x1*d2/\\d3 + x2*d3/\\d1 + x3*d1/\\d2"}).status == 0);
  CHECK(invoke({"rank", "--dim", "3", "x1*d2/\\d3 + x2*d3/\\d1 + x3*d1/\\d2"}).out == "2\n");
  auto j = invoke({"trace", "--dim", "2", "--json", "x1*d1 + x2*d2"});
  CHECK(nlohmann::json::parse(j.out)["result"] == "2");
  CHECK(invoke({"check-jacobi", "--dim", "3", "x1*d2/\\d3 + x2*d3/\\d1 + x3*d1/\\d2", "0"}).status == 0);
  CHECK(invoke({"rmatrix", "--dim", "2", "1,2,2,1"}).status == 0);
  auto a = invoke({"associate", "--dim", "3", "x1*d2/\\d3 + x2*d3/\\d1 + x3*d1/\\d2"});
  CHECK(a.status == 0);
  CHECK(a.out.find("jacobi = false") == std::string::npos);

  CHECK(invoke({"trace", "--dim", "3", "x5*d1"}).status == 2);
  CHECK(invoke({"trace", "x1*d1"}).status == 2);
  CHECK(invoke({"no-such-command"}).status == 2);
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"trace", "--dim", "9", "x1*d1"}).status == 2);
  CHECK(invoke({"check-poisson", "--dim", "3", "x1*d1"}).status == 2);
  CHECK(invoke({"classify-cubic3", "--matrix", "1,0,0;0,1,0;0,0,1"}).status == 2);
  auto err = invoke({"trace", "--dim", "3", "x1*d1 + x9"});
  CHECK(err.err.find("parse error") != std::string::npos);
}

TEST_CASE("catalog documents round trip") {
  auto cubic = cubic3_catalog(support::M({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  auto doc = catalog_to_json(cubic, "cubic3", AliasMode::xyz);
  CHECK(doc["format_version"] == kCatalogFormatVersion);
  CHECK(doc["kind"] == "cubic3");
  CHECK(doc["generators"].size() == cubic.generators.size());
  auto reparsed = nlohmann::json::parse(doc.dump());
  auto check = reverify_catalog(reparsed);
  CHECK(check.ok);
  CHECK(check.mismatches.empty());

  reparsed["generators"][0]["rank"] = 4;
  CHECK_FALSE(reverify_catalog(reparsed).ok);

  auto quad = quad4_catalog(support::M({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}));
  auto qdoc = catalog_to_json(quad, "quad4", AliasMode::txyz);
  CHECK(qdoc["constraints"].is_object());
  CHECK(reverify_catalog(nlohmann::json::parse(qdoc.dump())).ok);

  auto path = std::filesystem::temp_directory_path() / "pvf_catalog_test.json";
  auto written = invoke({"classify-quad4", "--json", "--matrix", "1,0,0,0;0,2,0,0;0,0,4,0;0,0,0,-7", "--output",
                         path.string()});
  CHECK(written.status == 0);
  auto verified = invoke({"verify-catalog", path.string()});
  CHECK(verified.status == 0);
  CHECK(verified.out == "true\n");
  std::filesystem::remove(path);
}
