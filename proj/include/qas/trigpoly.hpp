#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qas/parampoly.hpp"

namespace qas {

// Polynomial in theta over ParamPoly; index = theta power.
using ThetaPoly = std::vector<ParamPoly>;

ThetaPoly theta_add(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly theta_mul(const ThetaPoly& a, const ThetaPoly& b);

// Finite sum over the Fourier basis {1, cos j·theta, sin j·theta} with
// ThetaPoly weights.  Unique representation: no zero weights stored, the
// j = 0 sine slot is always empty.  Closed under product, antiderivative,
// and d/dtheta, which is what the variational recursion needs.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly constant(const ParamPoly& c);
  static TrigPoly harmonic_cos(unsigned j, const ThetaPoly& w);
  static TrigPoly harmonic_sin(unsigned j, const ThetaPoly& w);
  // coeff * cos^m(theta) * sin^n(theta), expanded into the Fourier basis.
  static TrigPoly cos_pow_sin_pow(unsigned m, unsigned n, const ParamPoly& coeff);

  bool is_zero() const { return h_.empty(); }
  bool operator==(const TrigPoly& o) const { return h_ == o.h_; }
  bool operator!=(const TrigPoly& o) const { return !(*this == o); }

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  TrigPoly operator-() const;

  TrigPoly scaled(const ParamPoly& c) const;
  friend TrigPoly tmul(const TrigPoly& a, const TrigPoly& b);
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return tmul(a, b); }

  // F with dF/dtheta = *this and F(0) = 0, via integration by parts.
  TrigPoly antiderivative_zero() const;
  TrigPoly derivative() const;

  // theta = pi: cos j -> (-1)^j, sin j -> 0, theta^p -> pi^p.
  ParamPoly eval_at_pi() const;
  ParamPoly eval_at_zero() const;

  // Pure-trig view (theta-degree 0 everywhere): j -> (cos, sin) weights.
  // Throws when a theta power is present.
  std::map<unsigned, std::pair<ParamPoly, ParamPoly>> fourier_table() const;

  const std::map<unsigned, std::pair<ThetaPoly, ThetaPoly>>& harmonics() const {
    return h_;
  }

  std::string str() const;  // debug only

 private:
  std::map<unsigned, std::pair<ThetaPoly, ThetaPoly>> h_;

  void add_harmonic(unsigned j, bool sine, const ThetaPoly& w);
  void prune();
};

}  // namespace qas
