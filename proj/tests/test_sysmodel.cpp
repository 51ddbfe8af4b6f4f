#include <random>

#include "doctest.h"
#include "qas/poly_io.hpp"
#include "qas/sysmodel.hpp"
#include "test_util.hpp"

using namespace qas;
using testutil::quad_system;
using testutil::quad_upper;

namespace {

TrigPoly cs(unsigned m, unsigned n, const std::string& coeff) {
  return TrigPoly::cos_pow_sin_pow(m, n, parse_poly(coeff));
}

HalfSystem random_half(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  HalfSystem h;
  for (unsigned a = 0; a <= 2; ++a) {
    unsigned b = 2 - a;
    h.set_F(a, b, ParamPoly(coef(rng)));
    h.set_G(a, b, ParamPoly(coef(rng)));
  }
  if (coef(rng) > 0) h.set_F(3, 0, ParamPoly(coef(rng)));
  return h;
}

}  // namespace

TEST_CASE("polar decomposition of the quadratic half") {
  AngularForm a = polar_decompose(quad_upper(), parse_poly("lambda"), ParamPoly());
  TrigPoly phi3 = cs(3, 0, "a20") + cs(2, 1, "a11 + b20") +
                  cs(1, 2, "a02 + b11") + cs(0, 3, "b02");
  TrigPoly psi3 = cs(3, 0, "b20") + cs(2, 1, "b11 - a20") +
                  cs(1, 2, "b02 - a11") - cs(0, 3, "a02");
  CHECK(a.phi_at(3) == phi3);
  CHECK(a.psi_at(3) == psi3);
  CHECK(a.phi_at(4).is_zero());
  CHECK(a.psi_at(4).is_zero());
}

TEST_CASE("polar decomposition of the empty half is zero") {
  AngularForm a = polar_decompose(HalfSystem{}, parse_poly("lambda"), ParamPoly());
  CHECK(a.phi.empty());
  CHECK(a.phi_at(3).is_zero());
  CHECK(a.psi_at(3).is_zero());
}

TEST_CASE("polar decomposition is linear in the tables") {
  std::mt19937 rng(8101);
  ParamPoly lam = parse_poly("lambda");
  for (int trial = 0; trial < 10; ++trial) {
    HalfSystem h1 = random_half(rng);
    HalfSystem h2 = random_half(rng);
    HalfSystem sum;
    for (const auto& [e, c] : h1.F) sum.set_F(e.first, e.second, c);
    for (const auto& [e, c] : h2.F)
      sum.set_F(e.first, e.second,
                (sum.F.count(e) ? sum.F.at(e) : ParamPoly()) + c);
    for (const auto& [e, c] : h1.G) sum.set_G(e.first, e.second, c);
    for (const auto& [e, c] : h2.G)
      sum.set_G(e.first, e.second,
                (sum.G.count(e) ? sum.G.at(e) : ParamPoly()) + c);
    AngularForm a1 = polar_decompose(h1, lam, ParamPoly());
    AngularForm a2 = polar_decompose(h2, lam, ParamPoly());
    AngularForm as = polar_decompose(sum, lam, ParamPoly());
    for (unsigned k = 3; k <= 5; ++k) {
      CHECK(as.phi_at(k) == a1.phi_at(k) + a2.phi_at(k));
      CHECK(as.psi_at(k) == a1.psi_at(k) + a2.psi_at(k));
    }
  }
}

TEST_CASE("reflection sign rule") {
  HalfSystem h;
  h.set_F(2, 0, ParamPoly(1));  // x^2
  h.set_G(1, 1, ParamPoly(1));  // xy
  HalfSystem r = reflect_time_reverse(h);
  CHECK(r.F.at({2, 0}).str() == "-1");
  CHECK(r.G.at({1, 1}).str() == "-1");

  HalfSystem h2;
  h2.set_F(0, 2, ParamPoly(1));  // y^2
  CHECK(reflect_time_reverse(h2).F.at({0, 2}).str() == "-1");

  CHECK(reflect_time_reverse(HalfSystem{}).empty());
}

TEST_CASE("reflection applied twice restores the tables") {
  std::mt19937 rng(8102);
  for (int trial = 0; trial < 10; ++trial) {
    HalfSystem h = random_half(rng);
    CHECK(reflect_time_reverse(reflect_time_reverse(h)) == h);
  }
}

TEST_CASE("radial series for the quadratic-only half") {
  AngularForm a = polar_decompose(quad_upper(), parse_poly("lambda"), ParamPoly());
  TrigPoly lam = TrigPoly::constant(parse_poly("lambda"));
  TrigPoly phi3 = a.phi_at(3), psi3 = a.psi_at(3);
  auto R = radial_series(a, 3);
  CHECK(R[0] == tmul(lam, phi3));
  CHECK(R[1] == -tmul(lam, tmul(phi3, psi3)));
  CHECK(R[2] == tmul(lam, tmul(phi3, tmul(psi3, psi3))));
}

TEST_CASE("radial series with a cubic block") {
  HalfSystem h = quad_upper();
  h.set_F(3, 0, parse_poly("k"));
  AngularForm a = polar_decompose(h, parse_poly("lambda"), ParamPoly());
  TrigPoly lam = TrigPoly::constant(parse_poly("lambda"));
  auto R = radial_series(a, 2);
  CHECK(R[1] == tmul(lam, a.phi_at(4) - tmul(a.phi_at(3), a.psi_at(3))));
}

TEST_CASE("radial series of the zero form vanishes") {
  AngularForm a = polar_decompose(HalfSystem{}, parse_poly("lambda"), ParamPoly());
  for (const auto& r : radial_series(a, 5)) CHECK(r.is_zero());
}

TEST_CASE("radial series rejects nonzero delta") {
  AngularForm a =
      polar_decompose(quad_upper(), parse_poly("lambda"), parse_poly("delta"));
  CHECK_THROWS_AS((void)radial_series(a, 3), ModelError);
}

TEST_CASE("multiplying the series back recovers the numerator") {
  std::mt19937 rng(8103);
  const unsigned N = 6;
  for (int trial = 0; trial < 8; ++trial) {
    HalfSystem h = random_half(rng);
    AngularForm a = polar_decompose(h, parse_poly("lambda"), ParamPoly());
    auto R = radial_series(a, N);
    TrigPoly lam = TrigPoly::constant(parse_poly("lambda"));
    for (unsigned m = 1; m <= N; ++m) {
      // coefficient of r^m in (1 + sum psi r^k)(sum R_k r^k) - lambda sum phi r^k
      TrigPoly c = R[m - 1] - tmul(lam, a.phi_at(m + 2));
      for (unsigned i = 1; i < m; ++i) c += tmul(a.psi_at(i + 2), R[m - i - 1]);
      CHECK(c.is_zero());
    }
  }
}

TEST_CASE("symmetry flags") {
  // condition (i) shape: a11 = b20 = b02 = 0
  SwitchingSystem s;
  s.lambda = parse_poly("lambda");
  s.upper.set_F(2, 0, parse_poly("a20"));
  s.upper.set_F(0, 2, parse_poly("a02"));
  s.upper.set_G(1, 1, parse_poly("b11"));
  SymmetryReport rep = symmetry_check(s);
  CHECK(rep.y_axis);
  CHECK_FALSE(rep.x_axis);

  SwitchingSystem generic = quad_system();
  rep = symmetry_check(generic);
  CHECK_FALSE(rep.y_axis);
  CHECK_FALSE(rep.x_axis);

  // lower built as the mirror of the upper
  SwitchingSystem mirror = quad_system();
  mirror.lower = reflect_time_reverse(mirror.upper);
  rep = symmetry_check(mirror);
  CHECK(rep.x_axis);

  // nonzero delta defeats both flags
  mirror.delta = parse_poly("delta");
  CHECK_FALSE(symmetry_check(mirror).x_axis);
}

TEST_CASE("system file ingestion") {
  const std::string text = R"({
    "lambda": "lambda",
    "delta": 0,
    "upper": {
      "2": {
        "F": {"20": "a20", "11": "a11", "02": "a02"},
        "G": {"20": "b20", "11": "b11", "02": "b02"}
      }
    },
    "lower": {}
  })";
  SwitchingSystem s = parse_system(text);
  CHECK(s.lambda.str() == "lambda");
  CHECK(s.delta.is_zero());
  CHECK(s.upper == quad_upper());
  CHECK(s.lower.empty());

  SwitchingSystem t =
      parse_system(R"json({"lambda": "(1/2)", "upper": {"2": {"F": {"20": -3}}}})json");
  CHECK(t.lambda.str() == "(1/2)");
  CHECK(t.upper.F.at({2, 0}).str() == "-3");
}

TEST_CASE("system file rejection") {
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 0})"), ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 1, "extra": 1})"), ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"upper": {}})"), ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 1, "upper": {"1": {"F": {"10": 1}}}})"),
                  ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 1, "upper": {"2": {"H": {"20": 1}}}})"),
                  ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 1, "upper": {"2": {"F": {"30": 1}}}})"),
                  ModelError);
  CHECK_THROWS_AS((void)parse_system(R"({"lambda": 1, "upper": {"2": {"F": {"20": "wat"}}}})"),
                  ModelError);
  CHECK_THROWS_AS((void)parse_system("not json"), ModelError);
}
