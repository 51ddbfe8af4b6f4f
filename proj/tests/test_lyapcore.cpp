#include "doctest.h"
#include "qas/lyapcore.hpp"
#include "qas/poly_io.hpp"
#include "test_util.hpp"

using namespace qas;
using testutil::quad_system;
using testutil::quad_upper;

TEST_CASE("variational recursion, trivial and quadrature cases") {
  ReturnSeries zero = ReturnSeries::solve({}, 4);
  CHECK(zero.u(1) == TrigPoly::constant(ParamPoly(1)));
  for (unsigned m = 2; m <= 4; ++m) CHECK(zero.u(m).is_zero());

  // R_1 = cos: u_2 = sin, u_3 = sin^2
  TrigPoly c = TrigPoly::harmonic_cos(1, {ParamPoly(1)});
  TrigPoly s = TrigPoly::harmonic_sin(1, {ParamPoly(1)});
  ReturnSeries rs = ReturnSeries::solve({c}, 3);
  CHECK(rs.u(2) == s);
  CHECK(rs.u(3) == tmul(s, s));
  CHECK(rs.omega(1, 3) == rs.u(3));
  CHECK(rs.omega(3, 3) == TrigPoly::constant(ParamPoly(1)));
}

TEST_CASE("second focus value of the quadratic system") {
  FocusValues fv = focus_values(quad_system(), 3);
  CHECK(fv.V(2).str() == "(2/3)*lambda*a11+(2/3)*lambda*b20+(4/3)*lambda*b02");
  // zero set equals that of a11 + b20 + 2 b02: the quotient is constant
  auto q = fv.V(2).exact_divide(parse_poly("a11 + b20 + 2*b02"));
  REQUIRE(q.has_value());
  CHECK(q->str() == "(2/3)*lambda");
}

TEST_CASE("mirror lower half gives identically zero focus values") {
  SwitchingSystem s = quad_system();
  s.lower = reflect_time_reverse(s.upper);
  FocusValues fv = focus_values(s, 6);
  CHECK(fv.all_zero());
  CHECK(fv.first_nonzero() == -1);
}

TEST_CASE("order consistency of focus values") {
  SwitchingSystem s = quad_system();
  FocusValues lo = focus_values(s, 4);
  FocusValues hi = focus_values(s, 6);
  for (unsigned m = 2; m <= 4; ++m) CHECK(lo.V(m) == hi.V(m));
}

TEST_CASE("series preconditions") {
  SwitchingSystem s = quad_system();
  s.delta = parse_poly("delta");
  CHECK_THROWS_AS((void)focus_values(s, 3), ModelError);
  CHECK_THROWS_AS((void)period_constants(s, 3), ModelError);
  SwitchingSystem t = quad_system();
  CHECK_THROWS_AS((void)focus_values(t, 1), ModelError);
}

TEST_CASE("first period constant of the quadratic system") {
  PeriodConstants pc = period_constants(quad_system(), 2);
  CHECK(pc.T(1).str() == "(2/3)*a20+(4/3)*a02-(2/3)*b11");
}

TEST_CASE("linear system has constant period") {
  SwitchingSystem s;
  s.lambda = parse_poly("lambda");
  PeriodConstants pc = period_constants(s, 6);
  CHECK(pc.all_zero());
}

TEST_CASE("period constants of the rigid-rotation family vanish") {
  // b11 = a20, a11 = a02 = b20 = b02 = 0 leaves the angular speed constant
  SwitchingSystem s = quad_system();
  std::vector<Substitution> subs{
      {Var::b11, parse_poly("a20"), ParamPoly(1)},
      {Var::a11, ParamPoly(), ParamPoly(1)},
      {Var::a02, ParamPoly(), ParamPoly(1)},
      {Var::b20, ParamPoly(), ParamPoly(1)},
      {Var::b02, ParamPoly(), ParamPoly(1)},
  };
  SwitchingSystem reduced = apply_conditions(s, subs);
  PeriodConstants pc = period_constants(reduced, 6);
  CHECK(pc.all_zero());
}

TEST_CASE("early and late substitution agree") {
  SwitchingSystem s = quad_system();
  std::vector<Substitution> subs{
      {Var::a11, parse_poly("-2*b02 - b20"), ParamPoly(1)},
      {Var::b20, ParamPoly(), ParamPoly(1)},
  };
  FocusValues late = apply_conditions(focus_values(s, 5), subs);
  FocusValues early = focus_values(apply_conditions(s, subs), 5);
  REQUIRE(late.entries.size() == early.entries.size());
  for (unsigned m = 2; m <= 5; ++m) CHECK(late.V(m) == early.V(m));
  CHECK(late.V(2).is_zero());
}

TEST_CASE("substitution semantics") {
  // chained assignment introduces a variable handled by a later entry
  ParamPoly p = parse_poly("a11 + b20");
  std::vector<Substitution> subs{
      {Var::a11, parse_poly("b20 + 1"), ParamPoly(1)},
      {Var::b20, ParamPoly(2), ParamPoly(1)},
  };
  CHECK(apply_conditions(p, subs).str() == "5");

  // denominator clearing keeps the zero set
  ParamPoly q = parse_poly("a02*b20 + 1");
  std::vector<Substitution> rational{{Var::a02, ParamPoly(1), parse_poly("b20")}};
  CHECK(apply_conditions(q, rational).str() == "2*b20");

  std::vector<Substitution> zero_den{{Var::a02, ParamPoly(1), ParamPoly()}};
  CHECK_THROWS_AS((void)apply_conditions(q, zero_den), ModelError);

  std::vector<Substitution> cyclic{
      {Var::a20, parse_poly("a11"), ParamPoly(1)},
      {Var::a11, parse_poly("a20"), ParamPoly(1)},
  };
  CHECK_THROWS_AS((void)apply_conditions(parse_poly("a20"), cyclic), ModelError);

  // rational substitutions may not be pushed into the tables
  std::vector<Substitution> rational2{{Var::a02, ParamPoly(1), parse_poly("b20")}};
  CHECK_THROWS_AS((void)apply_conditions(quad_system(), rational2), ModelError);

  // identity
  FocusValues fv = focus_values(quad_system(), 3);
  FocusValues same = apply_conditions(fv, {});
  CHECK(same.V(2) == fv.V(2));
}
