#include <random>

#include "doctest.h"
#include "qas/elimination.hpp"
#include "qas/poly_io.hpp"

using qas::ParamPoly;
using qas::RatPoly;
using qas::Rational;
using qas::Var;

TEST_CASE("resultant textbook identities") {
  // res_x(x^2 - k, x - 2) = 4 - k
  ParamPoly p = qas::parse_poly("k") * qas::parse_poly("-1");
  p += ParamPoly::variable(Var::kt, 2);  // use kt as the eliminated x
  ParamPoly q = ParamPoly::variable(Var::kt) - ParamPoly(2);
  CHECK(qas::resultant(p, q, Var::kt) == qas::parse_poly("4 - k"));

  // res_x(x^2 + b*x + c, 2x + b) = 4c - b^2  (b := b11, c := b02)
  ParamPoly r = ParamPoly::variable(Var::kt, 2) +
                qas::parse_poly("b11") * ParamPoly::variable(Var::kt) +
                qas::parse_poly("b02");
  ParamPoly s = ParamPoly(2) * ParamPoly::variable(Var::kt) + qas::parse_poly("b11");
  CHECK(qas::resultant(r, s, Var::kt) == qas::parse_poly("4*b02 - b11^2"));
}

TEST_CASE("resultant vanishes exactly on shared factors") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 15; ++i) {
    // shared root k = c0, disjoint cofactors
    ParamPoly x = ParamPoly::variable(Var::k);
    ParamPoly shared = x - ParamPoly(c(rng));
    ParamPoly p = shared * (x - ParamPoly(c(rng)) + qas::parse_poly("lambda"));
    ParamPoly q = shared * (x * x + ParamPoly(std::abs(c(rng)) + 1));
    CHECK(qas::resultant(p, q, Var::k).is_zero());

    ParamPoly p2 = (x - ParamPoly(1)) * (x - ParamPoly(2));
    ParamPoly q2 = (x - ParamPoly(3)) * (x - ParamPoly(4));
    CHECK(!qas::resultant(p2, q2, Var::k).is_zero());
  }
}

TEST_CASE("root isolation basics") {
  // x^2 - 2
  RatPoly p{Rational(-2), Rational(0), Rational(1)};
  auto roots = qas::isolate_real_roots(p, qas::make_rational(1, 1000000000));
  REQUIRE(roots.size() == 2);
  double r0 = roots[0].value.get_d(), r1 = roots[1].value.get_d();
  CHECK(r0 == doctest::Approx(-1.41421356).epsilon(1e-8));
  CHECK(r1 == doctest::Approx(1.41421356).epsilon(1e-8));
}

TEST_CASE("root isolation recovers constructed rational roots") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rational> want;
    RatPoly p{Rational(1)};
    for (int j = 0; j < 4; ++j) {
      Rational root = qas::make_rational(num(rng), den(rng));
      bool dup = false;
      for (const auto& w : want) dup |= (w == root);
      if (dup) continue;
      want.push_back(root);
      RatPoly next(p.size() + 1, Rational(0));
      for (size_t i = 0; i < p.size(); ++i) {
        next[i + 1] += p[i];
        next[i] -= root * p[i];
      }
      p = next;
    }
    std::sort(want.begin(), want.end());
    auto got = qas::isolate_real_roots(p, qas::make_rational(1, 100000000));
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
      CHECK(got[i].lo <= want[i]);
      CHECK(want[i] <= got[i].hi);
    }
  }
}

TEST_CASE("multiple roots are counted once") {
  // (x-1)^2 (x+2)
  RatPoly p{Rational(2), Rational(-3), Rational(0), Rational(1)};
  auto roots = qas::isolate_real_roots(p, qas::make_rational(1, 1000000));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value.get_d() == doctest::Approx(-2.0));
  CHECK(roots[1].value.get_d() == doctest::Approx(1.0));
}

TEST_CASE("positive root counting") {
  // (x-1)(x-3)(x+2): two positive
  RatPoly p{Rational(6), Rational(-5), Rational(-2), Rational(1)};
  CHECK(qas::count_positive_roots(p) == 2);
  CHECK(qas::count_real_roots(p) == 3);
  // x^2 + 1: none
  RatPoly q{Rational(1), Rational(0), Rational(1)};
  CHECK(qas::count_positive_roots(q) == 0);
  CHECK(qas::count_real_roots(q) == 0);
}

TEST_CASE("to_ratpoly guards") {
  CHECK_THROWS(qas::to_ratpoly(qas::parse_poly("pi*lambda"), Var::lambda));
  CHECK_THROWS(qas::to_ratpoly(qas::parse_poly("k*lambda"), Var::lambda));
  CHECK_THROWS(qas::isolate_real_roots(RatPoly{Rational(3)}, qas::make_rational(1, 10)));
}
