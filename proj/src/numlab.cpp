#include "qas/numlab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDenFloor = 0.1;   // below this 1 + Psi is no longer trusted
constexpr double kBlowup = 1e6;
constexpr unsigned kMaxSteps = 2'000'000;

}  // namespace

NumericInstance::NumericInstance(const SwitchingSystem& s,
                                 const std::map<Var, double>& params) {
  if (s.delta.value(params, kPi) != 0.0)
    throw ModelError("numeric instance requires delta = 0");
  lambda_ = s.lambda.value(params, kPi);
  if (lambda_ == 0.0) throw ModelError("lambda evaluates to zero");

  auto build = [&](const HalfSystem& h, HalfTables& out) {
    AngularForm a = polar_decompose(h, s.lambda, s.delta);
    auto convert = [&](const std::vector<TrigPoly>& src,
                       std::vector<std::vector<Harm>>& dst) {
      dst.resize(src.size());
      for (size_t i = 0; i < src.size(); ++i) {
        for (const auto& [j, cs] : src[i].fourier_table()) {
          double c = cs.first.value(params, kPi);
          double sv = cs.second.value(params, kPi);
          if (c != 0.0 || sv != 0.0) dst[i].push_back({j, c, sv});
        }
      }
    };
    convert(a.phi, out.phi);
    convert(a.psi, out.psi);
  };
  build(s.upper, up_);
  build(reflect_time_reverse(s.lower), lo_);
}

double NumericInstance::synth(const std::vector<Harm>& t, double theta) {
  double out = 0;
  for (const auto& h : t) {
    if (h.j == 0) {
      out += h.c;
      continue;
    }
    out += h.c * std::cos(h.j * theta) + h.s * std::sin(h.j * theta);
  }
  return out;
}

double NumericInstance::series(const std::vector<std::vector<Harm>>& f,
                               double theta, double r) {
  // Horner in r; slot i carries r^{i+1}.
  double out = 0;
  for (size_t i = f.size(); i-- > 0;) out = r * (out + synth(f[i], theta));
  return out;
}

double NumericInstance::phi_sum(HalfSide s, double theta, double r) const {
  return series(side(s).phi, theta, r);
}

double NumericInstance::psi_sum(HalfSide s, double theta, double r) const {
  return series(side(s).psi, theta, r);
}

namespace {

struct Deriv {
  double dr, dt;
};

Deriv rhs(const NumericInstance& inst, HalfSide side, double theta, double r) {
  if (!std::isfinite(r) || std::abs(r) > kBlowup)
    throw NumericGuard("trajectory blow-up");
  double den = 1.0 + inst.psi_sum(side, theta, r);
  if (den < kDenFloor)
    throw NumericGuard("left validity region: 1 + Psi dropped below 0.1");
  return {inst.lambda() * r * inst.phi_sum(side, theta, r) / den, 1.0 / den};
}

// Dormand-Prince 5(4) pair, FSAL.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                 A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

}  // namespace

IntegrationResult half_return(const NumericInstance& inst, double h,
                              HalfSide side, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(h > 0)) throw std::invalid_argument("initial radius must be positive");

  double theta = 0, r = h, t = 0;
  double step = std::min(0.1, kPi / 16);
  double err_prev = 1e-4;
  IntegrationResult out;
  Deriv k1 = rhs(inst, side, theta, r);

  while (theta < kPi) {
    if (out.steps++ > kMaxSteps) throw NumericGuard("step budget exhausted");
    bool last = false;
    if (step >= kPi - theta) {
      step = kPi - theta;
      last = true;
    }

    auto at = [&](double c, double wr) { return rhs(inst, side, theta + c * step, wr); };
    Deriv k2 = at(C2, r + step * A21 * k1.dr);
    Deriv k3 = at(C3, r + step * (A31 * k1.dr + A32 * k2.dr));
    Deriv k4 = at(C4, r + step * (A41 * k1.dr + A42 * k2.dr + A43 * k3.dr));
    Deriv k5 = at(C5, r + step * (A51 * k1.dr + A52 * k2.dr + A53 * k3.dr +
                                  A54 * k4.dr));
    Deriv k6 = at(1.0, r + step * (A61 * k1.dr + A62 * k2.dr + A63 * k3.dr +
                                   A64 * k4.dr + A65 * k5.dr));
    double r5 = r + step * (B1 * k1.dr + B3 * k3.dr + B4 * k4.dr + B5 * k5.dr +
                            B6 * k6.dr);
    double t5 = t + step * (B1 * k1.dt + B3 * k3.dt + B4 * k4.dt + B5 * k5.dt +
                            B6 * k6.dt);
    Deriv k7 = at(1.0, r5);

    double er = step * (E1 * k1.dr + E3 * k3.dr + E4 * k4.dr + E5 * k5.dr +
                        E6 * k6.dr + E7 * k7.dr);
    double et = step * (E1 * k1.dt + E3 * k3.dt + E4 * k4.dt + E5 * k5.dt +
                        E6 * k6.dt + E7 * k7.dt);
    double sc_r = tol + tol * std::max(std::abs(r), std::abs(r5));
    double sc_t = tol + tol * std::max(std::abs(t), std::abs(t5));
    double en = std::sqrt(0.5 * ((er / sc_r) * (er / sc_r) +
                                 (et / sc_t) * (et / sc_t)));

    if (en <= 1.0) {
      theta = last ? kPi : theta + step;
      r = r5;
      t = t5;
      k1 = k7;
      out.error_estimate += std::abs(er);
      double fac = 0.9 * std::pow(std::max(en, 1e-10), -0.7 / 5.0) *
                   std::pow(err_prev, 0.4 / 5.0);
      err_prev = std::max(en, 1e-4);
      step *= std::clamp(fac, 0.2, 5.0);
    } else {
      step *= std::max(0.2, 0.9 * std::pow(en, -0.2));
    }
    if (step < 1e-13) throw NumericGuard("step size underflow");
  }

  out.value = r;
  out.transit_time = t;
  return out;
}

double period_numeric(const NumericInstance& inst, double h, double tol) {
  // The reflected lower half runs forward in theta, so its transit time is
  // the true time spent below the axis.
  return half_return(inst, h, HalfSide::upper, tol).transit_time +
         half_return(inst, h, HalfSide::lower, tol).transit_time;
}

double displacement(const NumericInstance& inst, double h, double tol) {
  return half_return(inst, h, HalfSide::upper, tol).value -
         half_return(inst, h, HalfSide::lower, tol).value;
}

ScanResult displacement_scan(const NumericInstance& inst, double h_min,
                             double h_max, unsigned n_grid, double tol) {
  if (!(0 < h_min && h_min < h_max) || n_grid < 2)
    throw std::invalid_argument("bad scan range");
  ScanResult out;
  out.grid.reserve(n_grid);
  for (unsigned i = 0; i < n_grid; ++i)
    out.grid.push_back(h_min + (h_max - h_min) * i / (n_grid - 1));

  for (double h : out.grid) {
    auto up = half_return(inst, h, HalfSide::upper, tol);
    auto lo = half_return(inst, h, HalfSide::lower, tol);
    out.delta.push_back(up.value - lo.value);
    out.error.push_back(up.error_estimate + lo.error_estimate);
    out.noise_floor = std::max(out.noise_floor, 10 * tol * std::max(1.0, h));
  }

  // Sign changes between consecutive samples that clear the noise floor.
  int prev_sign = 0;
  double prev_h = 0;
  for (size_t i = 0; i < out.grid.size(); ++i) {
    double floor_i = 10 * tol * std::max(1.0, out.grid[i]);
    if (std::abs(out.delta[i]) <= floor_i) continue;
    int sign = out.delta[i] > 0 ? 1 : -1;
    if (prev_sign != 0 && sign != prev_sign)
      out.sign_changes.emplace_back(prev_h, out.grid[i]);
    prev_sign = sign;
    prev_h = out.grid[i];
  }
  out.cycle_estimate = static_cast<unsigned>(out.sign_changes.size());
  return out;
}

double bisect_displacement(const NumericInstance& inst, double lo, double hi,
                           double eps, double tol) {
  double flo = displacement(inst, lo, tol);
  double fhi = displacement(inst, hi, tol);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::invalid_argument("displacement does not change sign on bracket");
  while (hi - lo > eps) {
    double mid = 0.5 * (lo + hi);
    double fm = displacement(inst, mid, tol);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CrosscheckResult series_crosscheck(const NumericInstance& inst,
                                   const std::vector<double>& v_coeffs,
                                   const std::vector<double>& h_list,
                                   double tol) {
  if (h_list.size() < 2) throw std::invalid_argument("need at least two radii");
  CrosscheckResult out;
  out.exact_to_tolerance = true;
  std::vector<double> lx, ly;
  for (double h : h_list) {
    double num = displacement(inst, h, tol);
    double ser = 0;
    for (size_t i = v_coeffs.size(); i-- > 0;) ser = h * ser + v_coeffs[i];
    ser *= h * h;
    double res = num - ser;
    double floor_h = 10 * tol * std::max(1.0, std::abs(num));
    out.max_rel_residual =
        std::max(out.max_rel_residual,
                 std::abs(res) / std::max(std::abs(num), floor_h));
    if (std::abs(res) > floor_h) {
      out.exact_to_tolerance = false;
      lx.push_back(std::log(h));
      ly.push_back(std::log(std::abs(res)));
    }
  }
  if (lx.size() >= 2) {
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    out.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return out;
}

}  // namespace qas
