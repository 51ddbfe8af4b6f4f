#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qas/sysmodel.hpp"

namespace qas {

// Trajectory left the validity region or blew up.
struct NumericGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class HalfSide { upper, lower };

// All parameters bound to doubles; angular data of both halves (upper and
// reflected lower) reduced to plain Fourier tables for fast evaluation.
class NumericInstance {
 public:
  NumericInstance(const SwitchingSystem& s, const std::map<Var, double>& params);

  double lambda() const { return lambda_; }

  // Phi(theta, r) = sum_k phi_{k+2}(theta) r^k, likewise Psi; k >= 1.
  double phi_sum(HalfSide side, double theta, double r) const;
  double psi_sum(HalfSide side, double theta, double r) const;

 private:
  struct Harm {
    unsigned j;
    double c, s;
  };
  struct HalfTables {
    std::vector<std::vector<Harm>> phi, psi;  // index = k - 3
  };
  double lambda_ = 1.0;
  HalfTables up_, lo_;

  static double synth(const std::vector<Harm>& t, double theta);
  static double series(const std::vector<std::vector<Harm>>& f, double theta,
                       double r);
  const HalfTables& side(HalfSide s) const {
    return s == HalfSide::upper ? up_ : lo_;
  }
};

struct IntegrationResult {
  double value = 0;           // r(pi)
  double transit_time = 0;    // time to cross the half plane
  double error_estimate = 0;  // accumulated local truncation error
  unsigned steps = 0;
};

// Adaptive fifth-order integration of dr/dtheta over [0, pi].  The lower
// side integrates the reflected system, so both sides run forward in theta.
IntegrationResult half_return(const NumericInstance& inst, double h,
                              HalfSide side, double tol = 1e-12);

// Total return time: upper transit plus lower transit, both from r(0) = h.
double period_numeric(const NumericInstance& inst, double h, double tol = 1e-12);

double displacement(const NumericInstance& inst, double h, double tol = 1e-12);

struct ScanResult {
  std::vector<double> grid, delta, error;
  double noise_floor = 0;
  std::vector<std::pair<double, double>> sign_changes;  // brackets
  unsigned cycle_estimate = 0;
};

ScanResult displacement_scan(const NumericInstance& inst, double h_min,
                             double h_max, unsigned n_grid, double tol = 1e-12);

// Root of the displacement inside a bracket, bisected to x-accuracy eps.
double bisect_displacement(const NumericInstance& inst, double lo, double hi,
                           double eps = 1e-8, double tol = 1e-12);

struct CrosscheckResult {
  double fitted_order = 0;
  double max_rel_residual = 0;
  bool exact_to_tolerance = false;  // all residuals below the noise floor
};

// Compares numeric displacement against the truncated series with the given
// double coefficients (index i corresponds to h^{i+2}).
CrosscheckResult series_crosscheck(const NumericInstance& inst,
                                   const std::vector<double>& v_coeffs,
                                   const std::vector<double>& h_list,
                                   double tol = 1e-12);

}  // namespace qas
