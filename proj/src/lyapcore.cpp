#include "qas/lyapcore.hpp"

#include <stdexcept>

namespace qas {

const TrigPoly& ReturnSeries::u(unsigned m) const {
  if (m < 1 || m > N_) throw std::out_of_range("return series index");
  return pow_[0][m - 1];
}

const TrigPoly& ReturnSeries::omega(unsigned j, unsigned m) const {
  if (j < 1 || j > m || m > N_) throw std::out_of_range("omega index");
  return pow_[j - 1][m - 1];
}

// u_1 = 1; u_m' = sum_{j=1}^{m-1} R_j Omega_{j+1,m}, u_m(0) = 0.  The
// power table is extended column by column: Omega_{j,m} for j >= 2 only
// involves u_1..u_{m-1}, so each column is complete before u_m is solved.
ReturnSeries ReturnSeries::solve(const std::vector<TrigPoly>& R, unsigned N) {
  if (N < 1) throw ModelError("return series order below 1");
  ReturnSeries rs;
  rs.N_ = N;
  rs.pow_.assign(N, std::vector<TrigPoly>(N));
  auto& P = rs.pow_;
  const TrigPoly one = TrigPoly::constant(ParamPoly(1));
  P[0][0] = one;  // u_1
  auto Rj = [&R](unsigned j) -> TrigPoly {
    return j <= R.size() ? R[j - 1] : TrigPoly{};
  };
  for (unsigned m = 2; m <= N; ++m) {
    for (unsigned j = 2; j <= m; ++j) {
      TrigPoly acc;
      for (unsigned i = 1; i + j - 1 <= m; ++i)
        acc += tmul(P[0][i - 1], P[j - 2][m - i - 1]);
      P[j - 1][m - 1] = acc;
    }
    TrigPoly rhs;
    for (unsigned j = 1; j < m; ++j) rhs += tmul(Rj(j), P[j][m - 1]);
    P[0][m - 1] = rhs.antiderivative_zero();
  }
  return rs;
}

const ParamPoly& FocusValues::V(unsigned m) const {
  if (m < 2 || m > order) throw std::out_of_range("focus value index");
  return entries[m - 2];
}

bool FocusValues::all_zero() const {
  for (const auto& p : entries)
    if (!p.is_zero()) return false;
  return true;
}

int FocusValues::first_nonzero() const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].is_zero()) return int(i) + 2;
  return -1;
}

const ParamPoly& PeriodConstants::T(unsigned k) const {
  if (k < 1 || k > order) throw std::out_of_range("period constant index");
  return entries[k - 1];
}

bool PeriodConstants::all_zero() const {
  for (const auto& p : entries)
    if (!p.is_zero()) return false;
  return true;
}

ReturnSeries half_series(const AngularForm& a, unsigned N) {
  return ReturnSeries::solve(radial_series(a, N), N);
}

namespace {

void check_series_preconditions(const SwitchingSystem& s, unsigned N) {
  if (!s.delta.is_zero())
    throw ModelError("series computation requires delta = 0");
  if (s.lambda.is_zero()) throw ModelError("lambda must be nonzero");
  if (N < 2) throw ModelError("order must be at least 2");
}

// Transit-time coefficients of one half: dt/dtheta = 1/(1 + W) with
// W = sum psi_{k+2} r^k composed with the return series.
std::vector<ParamPoly> half_period(const AngularForm& a, const ReturnSeries& rs,
                                   unsigned N) {
  std::vector<TrigPoly> W(N);  // W[i-1] = [h^i]
  for (unsigned i = 1; i <= N; ++i) {
    TrigPoly acc;
    for (unsigned j = 1; j <= i; ++j)
      acc += tmul(a.psi_at(j + 2), rs.omega(j, i));
    W[i - 1] = acc;
  }
  std::vector<TrigPoly> D(N + 1);  // D[0] = 1
  D[0] = TrigPoly::constant(ParamPoly(1));
  for (unsigned m = 1; m <= N; ++m) {
    TrigPoly acc;
    for (unsigned i = 1; i <= m; ++i) acc += tmul(W[i - 1], D[m - i]);
    D[m] = -acc;
  }
  std::vector<ParamPoly> T(N);
  for (unsigned m = 1; m <= N; ++m)
    T[m - 1] = D[m].antiderivative_zero().eval_at_pi();
  return T;
}

}  // namespace

FocusValues focus_values(const SwitchingSystem& s, unsigned N) {
  check_series_preconditions(s, N);
  AngularForm up = polar_decompose(s.upper, s.lambda, s.delta);
  AngularForm lo =
      polar_decompose(reflect_time_reverse(s.lower), s.lambda, s.delta);
  ReturnSeries ru = half_series(up, N);
  ReturnSeries rl = half_series(lo, N);
  FocusValues fv;
  fv.order = N;
  fv.entries.reserve(N - 1);
  for (unsigned m = 2; m <= N; ++m)
    fv.entries.push_back(ru.at_pi(m) - rl.at_pi(m));
  return fv;
}

PeriodConstants period_constants(const SwitchingSystem& s, unsigned N) {
  check_series_preconditions(s, N);
  AngularForm up = polar_decompose(s.upper, s.lambda, s.delta);
  AngularForm lo =
      polar_decompose(reflect_time_reverse(s.lower), s.lambda, s.delta);
  ReturnSeries ru = half_series(up, N);
  ReturnSeries rl = half_series(lo, N);
  std::vector<ParamPoly> tu = half_period(up, ru, N);
  std::vector<ParamPoly> tl = half_period(lo, rl, N);
  PeriodConstants pc;
  pc.order = N;
  pc.entries.reserve(N);
  for (unsigned m = 0; m < N; ++m) pc.entries.push_back(tu[m] + tl[m]);
  return pc;
}

ParamPoly apply_conditions(const ParamPoly& p,
                           const std::vector<Substitution>& subs) {
  for (const auto& s : subs)
    if (s.denominator.is_zero())
      throw ModelError("zero denominator in substitution");
  ParamPoly cur = p;
  for (int pass = 0; pass < 16; ++pass) {
    bool touched = false;
    for (const auto& s : subs) {
      if (cur.degree_in(s.var) == 0) continue;
      touched = true;
      cur = cur.substitute_cleared(s.var, s.numerator, s.denominator).first;
    }
    if (!touched) return cur;
  }
  throw ModelError("cyclic substitution chain");
}

FocusValues apply_conditions(FocusValues v, const std::vector<Substitution>& subs) {
  for (auto& e : v.entries) e = apply_conditions(e, subs);
  return v;
}

PeriodConstants apply_conditions(PeriodConstants v,
                                 const std::vector<Substitution>& subs) {
  for (auto& e : v.entries) e = apply_conditions(e, subs);
  return v;
}

SwitchingSystem apply_conditions(SwitchingSystem s,
                                 const std::vector<Substitution>& subs) {
  for (const auto& sub : subs)
    if (!(sub.denominator - ParamPoly(1)).is_zero())
      throw ModelError("early substitution requires polynomial assignments");
  auto rewrite = [&subs](HalfSystem& h) {
    HalfSystem out;
    for (const auto& [e, c] : h.F)
      out.set_F(e.first, e.second, apply_conditions(c, subs));
    for (const auto& [e, c] : h.G)
      out.set_G(e.first, e.second, apply_conditions(c, subs));
    h = out;
  };
  rewrite(s.upper);
  rewrite(s.lower);
  s.lambda = apply_conditions(s.lambda, subs);
  s.delta = apply_conditions(s.delta, subs);
  if (s.lambda.is_zero()) throw ModelError("substitution made lambda vanish");
  return s;
}

}  // namespace qas
