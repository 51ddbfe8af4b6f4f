#include <doctest.h>

#include <iostream>
#include <qas/casebook.hpp>
#include <qas/poly_io.hpp>

using namespace qas;

TEST_CASE("probe f1sub") {
  const ParamPoly f = fixture("caseA1b.f3").num;
  const Fixture& k0 = fixture("elim.caseA1b.k0");
  ParamPoly fk;
  for (const auto& [m, c] : f.terms()) {
    Monomial t = m;
    const unsigned e = t.e[static_cast<int>(Var::b02)];
    t.e[static_cast<int>(Var::b02)] = 0;
    t.e[static_cast<int>(Var::kt)] += e / 2;
    t.e[static_cast<int>(Var::a20)] += e;
    fk.add_term(t, c);
  }
  auto [s, c] = fk.substitute_cleared(Var::kt, k0.num, k0.den);
  (void)c;
  ParamPoly p = s.primitive_part();
  for (const char* fs : {"lambda-1", "2*lambda-9", "5*lambda+9", "lambda+9", "lambda+3"}) {
    const ParamPoly g = parse_poly(fs);
    unsigned n = 0;
    while (auto q = p.exact_divide(g)) {
      p = *q;
      ++n;
    }
    if (n) std::cout << fs << "^" << n << "  ";
  }
  std::cout << "\n  rest: " << emit_poly(p) << "\n";
  std::cout << "  C3  : " << emit_poly(fixture("elim.C3").num) << "\n";
}
