#include <ostream>

#include "pvf/cli/expression.hpp"
#include "pvf/cli/run.hpp"
#include "pvf/decomposition.hpp"
#include "pvf/duality.hpp"
#include "pvf/field_algebra.hpp"
#include "pvf/random.hpp"

namespace pvf::cli {

namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

bool selftest(std::ostream& out, unsigned long long seed) {
  RandomFields rng(seed);
  struct Check {
    const char* name;
    int passed = 0;
    int total = 0;
  };
  Check jacobi{"graded Jacobi identity"}, leibniz{"Leibniz rule"}, commute{"graded commutativity"},
      dd{"D o D = 0"}, psi{"D = Psi^-1 d Psi"}, exact{"d o d = 0"}, split{"A = A0 + DA ^ e"},
      parts{"bracket decomposition"}, text{"parse o format"};
  auto record = [](Check& c, bool ok) {
    ++c.total;
    if (ok) ++c.passed;
  };

  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.integer(2, 4);
    auto pick = [&] { return rng.field(n, rng.integer(0, 2), rng.integer(0, n), 3); };
    PolyVectorField u = pick(), v = pick(), w = pick();
    int p = u.is_zero() ? 0 : u.terms().begin()->first.grade();
    int q = v.is_zero() ? 0 : v.terms().begin()->first.grade();

    record(jacobi, schouten(u, schouten(v, w)) ==
                       schouten(schouten(u, v), w) + sign_pow((p - 1) * (q - 1)) * schouten(v, schouten(u, w)));
    record(leibniz, schouten(u, wedge(v, w)) == wedge(schouten(u, v), w) + sign_pow((p - 1) * q) * wedge(v, schouten(u, w)));
    record(commute, wedge(u, v) == sign_pow(p * q) * wedge(v, u));
    record(dd, trace_D(trace_D(u)).is_zero());
    record(psi, trace_D(u) == from_form(exterior_derivative(to_form(u))));
    record(exact, exterior_derivative(exterior_derivative(to_form(u))).is_zero());
    if (!u.is_zero() && n + u.bidegree()->delta() != 0) {
      auto r = decompose(u);
      record(split, r.tracefree + r.trace_part == u && trace_D(r.tracefree).is_zero());
    }
    if (!u.is_zero() && !v.is_zero() && n + u.bidegree()->delta() != 0 && n + v.bidegree()->delta() != 0) {
      auto direct = decompose(schouten(u, v));
      auto bp = bracket_parts(u, v);
      record(parts, bp.tracefree == direct.tracefree && bp.trace == direct.trace);
    }
    record(text, parse_expr(format_expr(u), n) == u);
  }

  bool all = true;
  for (const Check* c : {&jacobi, &leibniz, &commute, &dd, &psi, &exact, &split, &parts, &text}) {
    bool ok = c->passed == c->total;
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << c->name << " (" << c->passed << "/" << c->total << ")\n";
  }
  return all;
}

}  // namespace pvf::cli
