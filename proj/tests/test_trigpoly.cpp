#include <random>

#include "doctest.h"
#include "qas/poly_io.hpp"
#include "qas/trigpoly.hpp"

using namespace qas;

namespace {

ParamPoly pp(const std::string& s) { return parse_poly(s); }

TrigPoly cosj(unsigned j) { return TrigPoly::harmonic_cos(j, {ParamPoly(1)}); }
TrigPoly sinj(unsigned j) { return TrigPoly::harmonic_sin(j, {ParamPoly(1)}); }

// theta^n carried on the trivial harmonic
TrigPoly theta_pow(unsigned n) {
  ThetaPoly w(n + 1);
  w[n] = ParamPoly(1);
  return TrigPoly::harmonic_cos(0, w);
}

TrigPoly random_trig(std::mt19937& rng, bool with_theta) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> harm(0, 3);
  std::uniform_int_distribution<unsigned> pw(0, with_theta ? 2 : 0);
  TrigPoly t;
  for (int i = 0; i < 4; ++i) {
    unsigned j = harm(rng);
    ThetaPoly w(pw(rng) + 1);
    w.back() = ParamPoly(coef(rng));
    if (harm(rng) % 2 == 0)
      t += TrigPoly::harmonic_cos(j, w);
    else
      t += TrigPoly::harmonic_sin(j, w);
  }
  return t;
}

}  // namespace

TEST_CASE("product-to-sum identities") {
  // cos^2 = 1/2 + (1/2) cos 2theta
  TrigPoly c2 = tmul(cosj(1), cosj(1));
  TrigPoly want = TrigPoly::constant(pp("(1/2)")) +
                  TrigPoly::harmonic_cos(2, {pp("(1/2)")});
  CHECK(c2 == want);

  // sin * cos2 = (1/2) sin 3theta - (1/2) sin theta
  TrigPoly sc = tmul(sinj(1), cosj(2));
  TrigPoly want2 = TrigPoly::harmonic_sin(3, {pp("(1/2)")}) -
                   TrigPoly::harmonic_sin(1, {pp("(1/2)")});
  CHECK(sc == want2);

  // (theta cos) * sin = (theta/2) sin 2theta
  TrigPoly tc = TrigPoly::harmonic_cos(1, {ParamPoly(), ParamPoly(1)});
  TrigPoly ts = tmul(tc, sinj(1));
  TrigPoly want3 = TrigPoly::harmonic_sin(2, {ParamPoly(), pp("(1/2)")});
  CHECK(ts == want3);
}

TEST_CASE("power ingestion matches repeated products") {
  TrigPoly a = TrigPoly::cos_pow_sin_pow(3, 0, pp("a20"));
  // cos^3 = (3/4) cos + (1/4) cos 3theta
  TrigPoly want = TrigPoly::harmonic_cos(1, {pp("(3/4)*a20")}) +
                  TrigPoly::harmonic_cos(3, {pp("(1/4)*a20")});
  CHECK(a == want);

  TrigPoly b = TrigPoly::cos_pow_sin_pow(2, 1, ParamPoly(1));
  // cos^2 sin = (1/4) sin + (1/4) sin 3theta
  TrigPoly want2 = TrigPoly::harmonic_sin(1, {pp("(1/4)")}) +
                   TrigPoly::harmonic_sin(3, {pp("(1/4)")});
  CHECK(b == want2);
}

TEST_CASE("antiderivative with zero initial value") {
  // cos -> sin
  CHECK(cosj(1).antiderivative_zero() == sinj(1));

  // sin^2 -> theta/2 - (1/4) sin 2theta
  TrigPoly s2 = tmul(sinj(1), sinj(1));
  TrigPoly want = TrigPoly::harmonic_cos(0, {ParamPoly(), pp("(1/2)")}) -
                  TrigPoly::harmonic_sin(2, {pp("(1/4)")});
  CHECK(s2.antiderivative_zero() == want);

  // theta cos -> theta sin + cos - 1
  TrigPoly tc = TrigPoly::harmonic_cos(1, {ParamPoly(), ParamPoly(1)});
  TrigPoly want2 = TrigPoly::harmonic_sin(1, {ParamPoly(), ParamPoly(1)}) +
                   cosj(1) - TrigPoly::constant(ParamPoly(1));
  CHECK(tc.antiderivative_zero() == want2);

  // sin -> 1 - cos (constant fixed by F(0) = 0)
  CHECK(sinj(1).antiderivative_zero() ==
        TrigPoly::constant(ParamPoly(1)) - cosj(1));
}

TEST_CASE("boundary evaluation") {
  CHECK(sinj(1).eval_at_pi().is_zero());

  TrigPoly s2anti = tmul(sinj(1), sinj(1)).antiderivative_zero();
  CHECK(s2anti.eval_at_pi().str() == "(1/2)*pi");

  TrigPoly tc = TrigPoly::harmonic_cos(1, {ParamPoly(), ParamPoly(1)});
  // theta cos at pi is -pi
  CHECK(tc.eval_at_pi().str() == "-pi");
  CHECK(cosj(2).eval_at_pi().str() == "1");
  CHECK(cosj(3).eval_at_pi().str() == "-1");
  CHECK(theta_pow(2).eval_at_pi().str() == "pi^2");
}

TEST_CASE("derivative inverts antiderivative") {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 30; ++trial) {
    TrigPoly f = random_trig(rng, true);
    TrigPoly F = f.antiderivative_zero();
    CHECK(F.derivative() == f);
    CHECK(F.eval_at_zero().is_zero());
  }
}

TEST_CASE("product laws") {
  std::mt19937 rng(7002);
  for (int trial = 0; trial < 20; ++trial) {
    TrigPoly a = random_trig(rng, true);
    TrigPoly b = random_trig(rng, true);
    TrigPoly c = random_trig(rng, false);
    CHECK(tmul(a, b) == tmul(b, a));
    CHECK(tmul(tmul(a, b), c) == tmul(a, tmul(b, c)));
    CHECK(tmul(a, b + c) == tmul(a, b) + tmul(a, c));
  }
}

TEST_CASE("odd cosine powers integrate to zero over the half turn") {
  for (unsigned m = 1; m <= 5; m += 2) {
    for (unsigned n = 0; n <= 4; n += 2) {
      TrigPoly f = TrigPoly::cos_pow_sin_pow(m, n, ParamPoly(1));
      CHECK(f.antiderivative_zero().eval_at_pi().is_zero());
    }
  }
  // and an even/even case that must not vanish
  TrigPoly g = TrigPoly::cos_pow_sin_pow(2, 2, ParamPoly(1));
  CHECK(g.antiderivative_zero().eval_at_pi().str() == "(1/8)*pi");
}

TEST_CASE("fourier table round trip") {
  TrigPoly f = TrigPoly::harmonic_cos(2, {pp("a20")}) +
               TrigPoly::harmonic_sin(1, {pp("b11")}) +
               TrigPoly::constant(pp("lambda"));
  auto table = f.fourier_table();
  REQUIRE(table.size() == 3);
  CHECK(table[0].first.str() == "lambda");
  CHECK(table[1].second.str() == "b11");
  CHECK(table[2].first.str() == "a20");

  TrigPoly with_theta = theta_pow(1);
  CHECK_THROWS_AS((void)with_theta.fourier_table(), std::logic_error);
}
