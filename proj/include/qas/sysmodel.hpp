#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qas/trigpoly.hpp"

namespace qas {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One half of the switching system: homogeneous coefficient tables for the
// x-component (F) and y-component (G), keyed by exponent pair (alpha, beta).
// Degree = alpha + beta >= 2.  Zero coefficients are not stored.
struct HalfSystem {
  std::map<std::pair<unsigned, unsigned>, ParamPoly> F, G;

  void set_F(unsigned alpha, unsigned beta, const ParamPoly& c);
  void set_G(unsigned alpha, unsigned beta, const ParamPoly& c);
  bool empty() const { return F.empty() && G.empty(); }
  unsigned max_degree() const;
  bool operator==(const HalfSystem& o) const { return F == o.F && G == o.G; }
};

struct SwitchingSystem {
  ParamPoly lambda;  // radial exponent, symbolic or a nonzero rational
  ParamPoly delta;
  HalfSystem upper, lower;
};

// Fourier-basis angular data of one half.  phi[i], psi[i] carry subscript
// i + 3; entries beyond the stored size are zero.
struct AngularForm {
  ParamPoly lambda, delta;
  std::vector<TrigPoly> phi, psi;

  TrigPoly phi_at(unsigned k) const;  // k >= 3
  TrigPoly psi_at(unsigned k) const;
};

struct SymmetryReport {
  bool y_axis = false;
  bool x_axis = false;
};

AngularForm polar_decompose(const HalfSystem& h, const ParamPoly& lambda,
                            const ParamPoly& delta);

// Reflection y -> -y composed with time reversal; maps the lower half onto
// an upper-half system with the same positive half-return map.
HalfSystem reflect_time_reverse(const HalfSystem& lower);

// Coefficients R_1..R_N of dr/dtheta = sum R_k(theta) r^{k+1} obtained by
// exact division of lambda*(sum phi r^k) by 1 + sum psi r^k.
std::vector<TrigPoly> radial_series(const AngularForm& a, unsigned N);

SymmetryReport symmetry_check(const SwitchingSystem& s);

// Structured-text ingestion.  Top-level keys: lambda (required), delta,
// upper, lower.  Halves map degree -> {"F": {"ab": coeff}, "G": {...}} with
// two-digit exponent keys; coefficients use the polynomial grammar.
// Unknown keys and a vanishing lambda are rejected.
SwitchingSystem parse_system(const std::string& text);
SwitchingSystem load_system(const std::string& path);

}  // namespace qas
