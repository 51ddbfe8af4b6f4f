#pragma once

#include "qas/poly_io.hpp"
#include "qas/sysmodel.hpp"

namespace qas::testutil {

// Quadratic upper half with symbolic coefficients, trivial linear lower.
inline HalfSystem quad_upper() {
  HalfSystem h;
  h.set_F(2, 0, parse_poly("a20"));
  h.set_F(1, 1, parse_poly("a11"));
  h.set_F(0, 2, parse_poly("a02"));
  h.set_G(2, 0, parse_poly("b20"));
  h.set_G(1, 1, parse_poly("b11"));
  h.set_G(0, 2, parse_poly("b02"));
  return h;
}

inline SwitchingSystem quad_system() {
  SwitchingSystem s;
  s.lambda = parse_poly("lambda");
  s.upper = quad_upper();
  return s;
}

}  // namespace qas::testutil
