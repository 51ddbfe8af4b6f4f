#include "qas/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace qas {

ParamPoly resultant(const ParamPoly& p, const ParamPoly& q, Var v) {
  unsigned m = p.degree_in(v), n = q.degree_in(v);
  if (m == 0 && n == 0)
    throw std::invalid_argument("resultant: variable absent from both polynomials");
  if (m == 0) return p.pow(n);
  if (n == 0) return q.pow(m);

  size_t dim = m + n;
  std::vector<std::vector<ParamPoly>> M(dim, std::vector<ParamPoly>(dim));
  for (unsigned r = 0; r < n; ++r)
    for (unsigned j = 0; j <= m; ++j) M[r][r + j] = p.coeff_of(v, m - j);
  for (unsigned r = 0; r < m; ++r)
    for (unsigned j = 0; j <= n; ++j) M[n + r][r + j] = q.coeff_of(v, n - j);

  // Bareiss: every division below is exact.
  ParamPoly prev = 1;
  int sign = 1;
  for (size_t piv = 0; piv + 1 < dim; ++piv) {
    if (M[piv][piv].is_zero()) {
      size_t swap_row = piv + 1;
      while (swap_row < dim && M[swap_row][piv].is_zero()) ++swap_row;
      if (swap_row == dim) return ParamPoly();  // singular: resultant 0
      std::swap(M[piv], M[swap_row]);
      sign = -sign;
    }
    for (size_t i = piv + 1; i < dim; ++i) {
      for (size_t j = piv + 1; j < dim; ++j) {
        ParamPoly t = M[i][j] * M[piv][piv] - M[i][piv] * M[piv][j];
        auto d = t.exact_divide(prev);
        if (!d) throw std::logic_error("resultant: Bareiss division failed");
        M[i][j] = std::move(*d);
      }
      M[i][piv] = ParamPoly();
    }
    prev = M[piv][piv];
  }
  ParamPoly det = M[dim - 1][dim - 1];
  return sign < 0 ? -det : det;
}

RatPoly to_ratpoly(const ParamPoly& p, Var v) {
  if (p.is_zero()) return {};
  RatPoly out(p.degree_in(v) + 1, Rational(0));
  for (const auto& [m, s] : p.terms()) {
    unsigned e = m.e[static_cast<size_t>(v)];
    for (size_t i = 0; i < kNumVars; ++i)
      if (i != static_cast<size_t>(v) && m.e[i] != 0)
        throw std::invalid_argument("root isolation input contains a second variable");
    if (!s.is_rational())
      throw std::invalid_argument("root isolation input contains pi");
    out[e] = s.rational_part();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

RatPoly ratpoly_derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

Rational ratpoly_eval(const RatPoly& p, const Rational& x) {
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

namespace {

void normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Negated remainder of a by b, for the Sturm chain.
RatPoly neg_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    normalize(a);
  }
  for (auto& c : a) c = -c;
  return a;
}

RatPoly gcd_poly(RatPoly a, RatPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    RatPoly r = neg_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RatPoly divide_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational f = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    normalize(rem);
  }
  return quot;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    seq.push_back(p);
    RatPoly d = ratpoly_derivative(p);
    normalize(d);
    if (!d.empty()) seq.push_back(d);
    while (seq.back().size() > 1) {
      RatPoly r = neg_rem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      seq.push_back(std::move(r));
    }
  }

  int variations_at(const Rational& x) const {
    int var = 0, last = 0;
    for (const auto& q : seq) {
      int s = sign_of(ratpoly_eval(q, x));
      if (s != 0) {
        if (last != 0 && s != last) ++var;
        last = s;
      }
    }
    return var;
  }

  int variations_at_inf(int dir) const {  // dir = +1 or -1
    int var = 0, last = 0;
    for (const auto& q : seq) {
      if (q.empty()) continue;
      int s = sign_of(q.back());
      if (dir < 0 && (q.size() - 1) % 2 == 1) s = -s;
      if (s != 0) {
        if (last != 0 && s != last) ++var;
        last = s;
      }
    }
    return var;
  }

  int count_in(const Rational& a, const Rational& b) const {
    // roots in (a, b]
    return variations_at(a) - variations_at(b);
  }
};

}  // namespace

RatPoly ratpoly_squarefree(const RatPoly& p) {
  RatPoly q = p;
  normalize(q);
  if (q.size() <= 1) return q;
  RatPoly g = gcd_poly(q, ratpoly_derivative(q));
  if (g.size() <= 1) return q;
  return divide_exact(q, g);
}

std::vector<RealRoot> isolate_real_roots(const RatPoly& p, const Rational& precision) {
  RatPoly q = ratpoly_squarefree(p);
  if (q.size() <= 1)
    throw std::invalid_argument("root isolation needs a non-constant polynomial");
  if (precision <= 0) throw std::invalid_argument("precision must be positive");

  // Cauchy bound
  Rational bound = 0;
  for (size_t i = 0; i + 1 < q.size(); ++i) {
    Rational m = abs(q[i] / q.back());
    if (m > bound) bound = m;
  }
  bound += 1;

  SturmChain chain(q);
  std::vector<RealRoot> roots;
  struct Span {
    Rational lo, hi;
    int count;
  };
  std::vector<Span> work{{-bound, bound, chain.count_in(-bound, bound)}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      // refine by bisection on sign change of the squarefree polynomial
      Rational lo = s.lo, hi = s.hi;
      while (hi - lo > precision / 2) {
        Rational mid = (lo + hi) / 2;
        if (chain.count_in(lo, mid) == 1)
          hi = mid;
        else
          lo = mid;
      }
      roots.push_back({lo, hi, (lo + hi) / 2});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    int left = chain.count_in(s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.count - left});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

int count_positive_roots(const RatPoly& p) {
  RatPoly q = ratpoly_squarefree(p);
  if (q.size() <= 1) return 0;
  SturmChain chain(q);
  return chain.variations_at(0) - chain.variations_at_inf(+1);
}

int count_real_roots(const RatPoly& p) {
  RatPoly q = ratpoly_squarefree(p);
  if (q.size() <= 1) return 0;
  SturmChain chain(q);
  return chain.variations_at_inf(-1) - chain.variations_at_inf(+1);
}

}  // namespace qas
