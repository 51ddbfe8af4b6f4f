#include "qas/numlab.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qas/lyapcore.hpp"
#include "test_util.hpp"

using namespace qas;

namespace {

constexpr double kPi = std::numbers::pi;

// Parameter point in the order (a20, a11, a02, b20, b11, b02, lambda).
struct Point {
  double a20, a11, a02, b20, b11, b02, lambda;

  std::map<Var, double> map() const {
    return {{Var::a20, a20}, {Var::a11, a11}, {Var::a02, a02},
            {Var::b20, b20}, {Var::b11, b11}, {Var::b02, b02},
            {Var::lambda, lambda}};
  }
};

Substitution rat(Var v, long num, long den = 1) {
  return {v, ParamPoly(Scalar(make_rational(num, den)))};
}

// Exact-rational twin of Point for the series side; fractions chosen with
// power-of-two denominators so both bindings agree bit for bit.
std::vector<Substitution> subs_of(long a20n, long a11n, long a02n, long b20n,
                                  long b11n, long b02n, long lamn, long den) {
  return {rat(Var::a20, a20n, den), rat(Var::a11, a11n, den),
          rat(Var::a02, a02n, den), rat(Var::b20, b20n, den),
          rat(Var::b11, b11n, den), rat(Var::b02, b02n, den),
          rat(Var::lambda, lamn, den)};
}

}  // namespace

TEST_CASE("linear system: identity return map and period 2*pi") {
  SwitchingSystem s;
  s.lambda = parse_poly("lambda");
  NumericInstance inst(s, {{Var::lambda, 2.0}});
  auto res = half_return(inst, 0.3, HalfSide::upper);
  CHECK(res.value == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(res.transit_time == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(period_numeric(inst, 0.5) == doctest::Approx(2 * kPi).epsilon(1e-13));
}

TEST_CASE("displacement follows the focus series at the fitted order") {
  auto s = testutil::quad_system();
  // a20=1, a11=1/2, a02=-1/3 is not a dyadic rational; use sixteenths.
  auto subs = subs_of(16, 8, -5, 4, -16, 11, 8, 16);
  Point p{1.0, 0.5, -5.0 / 16, 0.25, -1.0, 11.0 / 16, 0.5};
  NumericInstance inst(s, p.map());

  auto fv = focus_values(apply_conditions(s, subs), 5);
  std::vector<double> coeffs;
  for (unsigned m = 2; m <= 5; ++m) coeffs.push_back(fv.V(m).value({}, kPi));
  REQUIRE(std::abs(coeffs[0]) > 0.1);  // genuinely non-center point

  std::vector<double> hs{0.02, 0.03, 0.04, 0.06, 0.08};
  auto cc = series_crosscheck(inst, coeffs, hs);
  CHECK(!cc.exact_to_tolerance);
  CHECK(cc.fitted_order >= 5.7);
  CHECK(cc.fitted_order <= 7.0);

  SUBCASE("a corrupted coefficient drags the fitted order down") {
    coeffs[1] += 1e-3;
    auto bad = series_crosscheck(inst, coeffs, hs);
    CHECK(bad.fitted_order < 3.5);
  }
}

TEST_CASE("center instances return to the start radius") {
  auto s = testutil::quad_system();

  SUBCASE("a11 = -2*b02, b20 = 0, b11 = -2*a20") {
    Point p{0.5, -1.0, 0.25, 0.0, -1.0, 0.5, 2.0};
    NumericInstance inst(s, p.map());
    CHECK(std::abs(displacement(inst, 0.05, 1e-13)) < 1e-10);
    CHECK(std::abs(displacement(inst, 0.15, 1e-13)) < 1e-10);

    auto scan = displacement_scan(inst, 0.01, 0.2, 25);
    CHECK(scan.cycle_estimate == 0);
    CHECK(scan.sign_changes.empty());

    auto cc = series_crosscheck(inst, {0, 0, 0}, {0.02, 0.05, 0.1});
    CHECK(cc.exact_to_tolerance);
  }

  SUBCASE("lambda = 1 algebraic family") {
    // a20 = b20 = 1 forces a11 = -1/2, b11 = -5/2, a02 = -5/8, b02 = -1/4.
    Point p{1.0, -0.5, -0.625, 1.0, -2.5, -0.25, 1.0};
    NumericInstance inst(s, p.map());
    CHECK(std::abs(displacement(inst, 0.1, 1e-13)) < 1e-10);
    CHECK(std::abs(displacement(inst, 0.02, 1e-13)) < 1e-11);
  }
}

TEST_CASE("isochronous instance keeps period 2*pi") {
  auto s = testutil::quad_system();
  Point p{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 7.0 / 3};  // b11 = a20, rest zero
  NumericInstance inst(s, p.map());
  CHECK(std::abs(period_numeric(inst, 0.05, 1e-12) - 2 * kPi) < 1e-9);
  CHECK(std::abs(period_numeric(inst, 0.1, 1e-12) - 2 * kPi) < 1e-9);
}

TEST_CASE("period series matches numeric transit times") {
  auto s = testutil::quad_system();
  auto subs = subs_of(16, 8, -5, 4, -16, 11, 8, 16);
  Point p{1.0, 0.5, -5.0 / 16, 0.25, -1.0, 11.0 / 16, 0.5};
  NumericInstance inst(s, p.map());

  auto tc = period_constants(apply_conditions(s, subs), 4);
  auto series_at = [&](double h) {
    double out = 2 * kPi;
    for (unsigned k = 1; k <= 4; ++k)
      out += tc.T(k).value({}, kPi) * std::pow(h, k);
    return out;
  };
  double r1 = std::abs(period_numeric(inst, 0.02, 1e-13) - series_at(0.02));
  double r2 = std::abs(period_numeric(inst, 0.04, 1e-13) - series_at(0.04));
  CHECK(r2 / r1 > 20.0);  // truncation residual is O(h^5)
  CHECK(r2 / r1 < 45.0);
}

TEST_CASE("two small limit cycles are detected and bracketed") {
  auto s = testutil::quad_system();
  Point p{1.0, -271.0 / 240, 14745908.0 / 114035625, -209.0 / 240,
          3062993.0 / 545625, 1.0, 0.5};
  NumericInstance inst(s, p.map());

  auto scan = displacement_scan(inst, 0.01, 0.3, 60);
  REQUIRE(scan.cycle_estimate >= 2);

  bool low = false, high = false;
  for (auto [a, b] : scan.sign_changes) {
    if (b > 0.085 && a < 0.1) low = true;
    if (b > 0.25 && a < 0.265) high = true;
  }
  CHECK(low);
  CHECK(high);

  double r1 = bisect_displacement(inst, 0.085, 0.1);
  double r2 = bisect_displacement(inst, 0.25, 0.265);
  CHECK(r1 > 0.09);
  CHECK(r1 < 0.095);
  CHECK(r2 > 0.255);
  CHECK(r2 < 0.26);
}

TEST_CASE("validity-region guard trips when 1 + Psi collapses") {
  auto s = testutil::quad_system();
  // Psi is dominated by -a02 sin^3, which drags 1 + Psi*r under the floor
  // near theta = pi/2 once r is large enough.
  Point p{0.0, 0.0, 40.0, 0.0, 0.0, 0.0, 1.0};
  NumericInstance inst(s, p.map());
  CHECK_NOTHROW(half_return(inst, 0.01, HalfSide::upper));
  CHECK_THROWS_AS(half_return(inst, 0.1, HalfSide::upper), NumericGuard);
}

TEST_CASE("delta must vanish and lambda must not") {
  auto s = testutil::quad_system();
  s.delta = parse_poly("delta");
  Point p{1, 0, 0, 0, 0, 0, 1};
  auto m = p.map();
  m[Var::delta] = 0.5;
  CHECK_THROWS_AS(NumericInstance(s, m), ModelError);
  m[Var::delta] = 0.0;
  m[Var::lambda] = 0.0;
  CHECK_THROWS_AS(NumericInstance(s, m), ModelError);
}

TEST_CASE("halving the tolerance moves the result less than the estimate") {
  auto s = testutil::quad_system();
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-32, 32);
  std::uniform_int_distribution<int> lam(-48, 48);

  for (int trial = 0; trial < 20; ++trial) {
    int ln = lam(rng);
    if (std::abs(ln) < 5) ln = 24;  // keep lambda away from zero
    Point p{coef(rng) / 16.0, coef(rng) / 16.0, coef(rng) / 16.0,
            coef(rng) / 16.0, coef(rng) / 16.0, coef(rng) / 16.0,
            ln / 16.0};
    NumericInstance inst(s, p.map());
    auto coarse = half_return(inst, 0.05, HalfSide::upper, 1e-9);
    auto fine = half_return(inst, 0.05, HalfSide::upper, 1e-10);
    CHECK(std::abs(coarse.value - fine.value) <=
          coarse.error_estimate + 1e-14);
  }
}
