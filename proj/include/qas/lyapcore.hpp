#pragma once

#include <vector>

#include "qas/sysmodel.hpp"

namespace qas {

// Half-return series r(pi, h) = sum u_m(pi) h^m for one half, solved from
// dr/dtheta = sum R_k(theta) r^{k+1} with r(0) = h.  Also keeps the power
// table Omega_{j,m} = [h^m] r(theta,h)^j needed downstream.
class ReturnSeries {
 public:
  static ReturnSeries solve(const std::vector<TrigPoly>& R, unsigned N);

  unsigned order() const { return N_; }
  const TrigPoly& u(unsigned m) const;              // 1 <= m <= N
  const TrigPoly& omega(unsigned j, unsigned m) const;  // 1 <= j <= m <= N
  ParamPoly at_pi(unsigned m) const { return u(m).eval_at_pi(); }

 private:
  unsigned N_ = 0;
  // pow_[j-1][m-1] = Omega_{j,m}; row 0 is u itself
  std::vector<std::vector<TrigPoly>> pow_;
};

struct FocusValues {
  unsigned order = 0;                // N
  std::vector<ParamPoly> entries;    // entries[i] = V_{i+2}

  const ParamPoly& V(unsigned m) const;      // 2 <= m <= N
  const ParamPoly& L(unsigned j) const { return V(j + 1); }
  bool all_zero() const;
  int first_nonzero() const;  // smallest m with V_m != 0, or -1
};

struct PeriodConstants {
  unsigned order = 0;                // N
  std::vector<ParamPoly> entries;    // entries[i] = T_{i+1}

  const ParamPoly& T(unsigned k) const;  // 1 <= k <= N
  bool all_zero() const;
};

// One assignment var := numerator / denominator.  The denominator must be
// declared nonzero by the caller; results are reported with denominators
// cleared, so zero sets are preserved.
struct Substitution {
  Var var;
  ParamPoly numerator;
  ParamPoly denominator = ParamPoly(1);
};

ReturnSeries half_series(const AngularForm& a, unsigned N);

// V_m = u_m(pi) - v_m(pi), upper minus reflected lower, m = 2..N.
// The zeroth-order constant 2*pi*delta is reported by callers separately;
// here delta = 0 is required.
FocusValues focus_values(const SwitchingSystem& s, unsigned N);

// T(h) - 2*pi = sum_{k>=1} T_k h^k, both half transit times included.
PeriodConstants period_constants(const SwitchingSystem& s, unsigned N);

// Chained application until no substituted variable remains; denominators
// cleared along the way.  Throws on a zero denominator or a cyclic chain.
ParamPoly apply_conditions(const ParamPoly& p, const std::vector<Substitution>& subs);
FocusValues apply_conditions(FocusValues v, const std::vector<Substitution>& subs);
PeriodConstants apply_conditions(PeriodConstants v, const std::vector<Substitution>& subs);
// Early form: rewrites the coefficient tables and lambda; polynomial
// substitutions only (denominator 1).
SwitchingSystem apply_conditions(SwitchingSystem s, const std::vector<Substitution>& subs);

}  // namespace qas
