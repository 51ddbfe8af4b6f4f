#include <random>

#include "doctest.h"
#include "qas/parampoly.hpp"
#include "qas/poly_io.hpp"

using qas::ParamPoly;
using qas::Scalar;
using qas::Var;

namespace {

ParamPoly rnd_poly(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> pip(0, 1);
  std::uniform_int_distribution<size_t> varpick(0, qas::kNumVars - 1);
  ParamPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    qas::Monomial m;
    for (int j = 0; j < 3; ++j) m.e[varpick(rng)] += expo(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    p += ParamPoly::term(m, Scalar::pi(pip(rng), qas::make_rational(c, den(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical text examples") {
  CHECK(qas::parse_poly("a11 + 2*b02 + b20").str() == "a11+b20+2*b02");
  CHECK(qas::parse_poly("(2/4)*lambda - 0*a20").str() == "(1/2)*lambda");
  CHECK(qas::parse_poly("pi*pi*delta").str() == "pi^2*delta");
  CHECK(qas::parse_poly("0").str() == "0");
  CHECK(qas::parse_poly("-a20^2 + 3").str() == "-a20^2+3");
}

TEST_CASE("graded lex emission order") {
  ParamPoly p = qas::parse_poly("(2/3)*lambda*a11+(2/3)*lambda*b20+(4/3)*lambda*b02");
  CHECK(p.str() == "(2/3)*lambda*a11+(2/3)*lambda*b20+(4/3)*lambda*b02");
  // degree dominates: a single cubic term precedes every quadratic one
  ParamPoly q = qas::parse_poly("lambda*a11 + b02^3");
  CHECK(q.str() == "b02^3+lambda*a11");
}

TEST_CASE("parse-print-parse is the identity") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 40; ++i) {
    ParamPoly p = rnd_poly(rng);
    ParamPoly q = qas::parse_poly(p.str());
    CHECK(p == q);
    CHECK(p.str() == q.str());
  }
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(qas::parse_poly("a11 + + b20"), qas::ParseError);
  CHECK_THROWS_AS(qas::parse_poly("bogus"), qas::ParseError);
  CHECK_THROWS_AS(qas::parse_poly("2*"), qas::ParseError);
  CHECK_THROWS_AS(qas::parse_poly("(1/0)*a20"), qas::ParseError);
  try {
    qas::parse_poly("a20 * wat");
  } catch (const qas::ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(777);
  for (int i = 0; i < 25; ++i) {
    ParamPoly a = rnd_poly(rng), b = rnd_poly(rng), c = rnd_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("exact division") {
  ParamPoly p = qas::parse_poly("a20^2 - b02^2");
  ParamPoly d = qas::parse_poly("a20 - b02");
  auto q = p.exact_divide(d);
  REQUIRE(q.has_value());
  CHECK(q->str() == "a20+b02");

  CHECK(!qas::parse_poly("a20 + 1").exact_divide(qas::parse_poly("a20 + 2")).has_value());
  CHECK_THROWS(p.exact_divide(ParamPoly()));

  std::mt19937 rng(999);
  for (int i = 0; i < 25; ++i) {
    ParamPoly a = rnd_poly(rng), b = rnd_poly(rng);
    if (b.is_zero()) continue;
    auto r = (a * b).exact_divide(b);
    REQUIRE(r.has_value());
    CHECK(*r == a);
  }
}

TEST_CASE("substitution and evaluation") {
  // b11 := a20 + 2*a02 inside lambda*b11^2
  ParamPoly p = qas::parse_poly("lambda*b11^2");
  ParamPoly v = qas::parse_poly("a20 + 2*a02");
  CHECK(p.substitute(Var::b11, v) ==
        qas::parse_poly("lambda*a20^2 + 4*lambda*a20*a02 + 4*lambda*a02^2"));

  // cleared rational substitution: a02 := 1/b20 in a02^2 + 1 gives 1 + b20^2
  auto [cleared, power] =
      qas::parse_poly("a02^2 + 1").substitute_cleared(Var::a02, ParamPoly(1),
                                                      ParamPoly::variable(Var::b20));
  CHECK(power == 2);
  CHECK(cleared == qas::parse_poly("b20^2 + 1"));

  std::map<Var, qas::Rational> pt{{Var::lambda, qas::make_rational(1, 2)},
                                  {Var::b11, qas::make_rational(-3, 1)}};
  CHECK(qas::parse_poly("lambda*b11^2").eval(pt) == Scalar(qas::make_rational(9, 2)));
}

TEST_CASE("derivative and coefficient extraction") {
  ParamPoly p = qas::parse_poly("a20^3*k^2 + 2*a20*k + 7");
  CHECK(p.derivative(Var::k) == qas::parse_poly("2*a20^3*k + 2*a20"));
  CHECK(p.coeff_of(Var::k, 2) == qas::parse_poly("a20^3"));
  CHECK(p.coeff_of(Var::k, 0) == qas::parse_poly("7"));
  CHECK(p.degree_in(Var::k) == 2);
  CHECK(p.degree_in(Var::b11) == 0);
}

TEST_CASE("primitive part removes content and sign") {
  ParamPoly p = qas::parse_poly("-4*a20^2 + 8*b02");
  CHECK(p.primitive_part().str() == "a20^2-2*b02");
  ParamPoly q = qas::parse_poly("(3/2)*pi*a20 - 3*pi*b02");
  CHECK(q.primitive_part().str() == "a20-2*b02");
}
