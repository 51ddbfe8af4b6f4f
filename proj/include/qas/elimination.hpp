#pragma once

#include <vector>

#include "qas/parampoly.hpp"

namespace qas {

// Determinant of the Sylvester matrix of p and q with respect to v, computed
// by fraction-free (Bareiss) elimination so intermediate entries stay
// polynomial.  Requires positive degree in v on both sides.
ParamPoly resultant(const ParamPoly& p, const ParamPoly& q, Var v);

// Dense univariate polynomial over Q, coefficient of x^i at index i.
using RatPoly = std::vector<Rational>;

// Extraction for root isolation; rejects pi and any second variable.
RatPoly to_ratpoly(const ParamPoly& p, Var v);

RatPoly ratpoly_derivative(const RatPoly& p);
Rational ratpoly_eval(const RatPoly& p, const Rational& x);
RatPoly ratpoly_squarefree(const RatPoly& p);

struct RealRoot {
  Rational lo, hi;   // isolating interval, lo < hi or lo == hi (exact root)
  Rational value;    // refined midpoint, |value - root| < precision
};

// Sturm-sequence isolation of the distinct real roots, bisection-refined.
std::vector<RealRoot> isolate_real_roots(const RatPoly& p, const Rational& precision);

// Sign changes of p on (0, +inf) counted by Sturm at 0+ and +inf: the number
// of distinct positive real roots.
int count_positive_roots(const RatPoly& p);
int count_real_roots(const RatPoly& p);

}  // namespace qas
