#include "qas/parampoly.hpp"

#include <climits>
#include <stdexcept>

#include "qas/kernels.hpp"

namespace qas {

const std::array<const char*, kNumVars> kVarNames = {
    "delta", "lambda", "a20", "a11", "a02", "b20", "b11", "b02", "k", "kt"};

std::optional<Var> var_by_name(const std::string& name) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

ParamPoly::ParamPoly(long n) {
  if (n != 0) t_[Monomial{}] = Scalar(n);
}

ParamPoly::ParamPoly(const Scalar& s) {
  if (!s.is_zero()) t_[Monomial{}] = s;
}

ParamPoly ParamPoly::variable(Var v, unsigned power) {
  ParamPoly p;
  Monomial m;
  m.e[static_cast<size_t>(v)] = static_cast<uint16_t>(power);
  p.t_[m] = Scalar(1);
  return p;
}

ParamPoly ParamPoly::term(const Monomial& m, const Scalar& s) {
  ParamPoly p;
  if (!s.is_zero()) p.t_[m] = s;
  return p;
}

bool ParamPoly::is_scalar() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{});
}

const Scalar& ParamPoly::scalar_part() const {
  static const Scalar zero;
  auto it = t_.find(Monomial{});
  return it == t_.end() ? zero : it->second;
}

void ParamPoly::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, s] : o.t_) add_term(m, s);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, s] : o.t_) add_term(m, -s);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [m, s] : t_) r.t_[m] = -s;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  return kernels::multiply(a, b);
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly ParamPoly::scaled(const Scalar& s) const {
  ParamPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_[m] = c * s;
  return r;
}

ParamPoly operator*(const Scalar& s, const ParamPoly& p) { return p.scaled(s); }

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly r = 1;
  ParamPoly b = *this;
  for (unsigned i = e; i; i >>= 1) {
    if (i & 1) r = r * b;
    if (i > 1) b = b * b;
  }
  return r;
}

unsigned ParamPoly::total_degree() const {
  return t_.empty() ? 0 : t_.begin()->first.degree();
}

unsigned ParamPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, s] : t_) d = std::max<unsigned>(d, m.e[static_cast<size_t>(v)]);
  return d;
}

ParamPoly ParamPoly::coeff_of(Var v, unsigned power) const {
  ParamPoly r;
  for (const auto& [m, s] : t_) {
    if (m.e[static_cast<size_t>(v)] != power) continue;
    Monomial n = m;
    n.e[static_cast<size_t>(v)] = 0;
    r.add_term(n, s);
  }
  return r;
}

ParamPoly ParamPoly::derivative(Var v) const {
  ParamPoly r;
  for (const auto& [m, s] : t_) {
    unsigned e = m.e[static_cast<size_t>(v)];
    if (e == 0) continue;
    Monomial n = m;
    n.e[static_cast<size_t>(v)] = static_cast<uint16_t>(e - 1);
    r.add_term(n, s * Scalar(static_cast<long>(e)));
  }
  return r;
}

ParamPoly ParamPoly::substitute(Var v, const ParamPoly& value) const {
  unsigned dv = degree_in(v);
  if (dv == 0) return *this;
  // Horner in v over the extracted coefficients.
  ParamPoly r = coeff_of(v, dv);
  for (unsigned p = dv; p-- > 0;) r = r * value + coeff_of(v, p);
  return r;
}

std::pair<ParamPoly, unsigned> ParamPoly::substitute_cleared(
    Var v, const ParamPoly& num, const ParamPoly& den) const {
  unsigned dv = degree_in(v);
  if (dv == 0) return {*this, 0};
  ParamPoly r = coeff_of(v, dv);
  for (unsigned p = dv; p-- > 0;) r = r * num + coeff_of(v, p) * den.pow(dv - p);
  return {r, dv};
}

Scalar ParamPoly::eval(const std::map<Var, Rational>& point) const {
  Scalar out;
  for (const auto& [m, s] : t_) {
    Rational f = 1;
    for (size_t i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument(std::string("unbound variable ") + kVarNames[i]);
      f *= rational_pow(it->second, m.e[i]);
    }
    out += s * Scalar(f);
  }
  return out;
}

double ParamPoly::value(const std::map<Var, double>& point, double pi_value) const {
  double out = 0;
  for (const auto& [m, s] : t_) {
    double f = s.value(pi_value);
    for (size_t i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end())
        throw std::invalid_argument(std::string("unbound variable ") + kVarNames[i]);
      for (unsigned p = 0; p < m.e[i]; ++p) f *= it->second;
    }
    out += f;
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::exact_divide(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  ParamPoly rem = *this;
  ParamPoly quot;
  const auto& [dm, dc] = *divisor.t_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.t_.begin();
    if (!dm.divides(rm)) return std::nullopt;
    auto qc = rc.exact_div(dc);
    if (!qc) return std::nullopt;
    Monomial qm;
    for (size_t i = 0; i < kNumVars; ++i)
      qm.e[i] = static_cast<uint16_t>(rm.e[i] - dm.e[i]);
    ParamPoly t = ParamPoly::term(qm, *qc);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

ParamPoly ParamPoly::primitive_part() const {
  if (is_zero()) return *this;
  // gcd of all |numerators| / lcm of all denominators, over every pi slot
  mpz_class num_gcd = 0, den_lcm = 1;
  unsigned min_pi = UINT_MAX;
  for (const auto& [m, s] : t_) {
    for (const auto& [p, q] : s.terms()) {
      min_pi = std::min(min_pi, p);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  const Scalar& lead = t_.begin()->second;
  if (lead.terms().begin()->second < 0) content = -content;
  ParamPoly r;
  for (const auto& [m, s] : t_) {
    Scalar ns;
    for (const auto& [p, q] : s.terms()) ns += Scalar::pi(p - min_pi, q / content);
    r.t_[m] = ns;
  }
  return r;
}

std::string ParamPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, s] : t_) {
    // expand the Scalar into one grammar term per pi power
    for (const auto& [p, q] : s.terms()) {
      Rational mag = q < 0 ? Rational(-q) : q;
      if (out.empty()) {
        if (q < 0) out += "-";
      } else {
        out += q < 0 ? "-" : "+";
      }
      std::string factors;
      if (p > 0) factors = p == 1 ? "pi" : "pi^" + std::to_string(p);
      for (size_t i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += kVarNames[i];
        if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
      }
      std::string cs;
      if (mag.get_den() == 1) {
        cs = mag.get_num().get_str();
      } else {
        cs = "(" + mag.get_num().get_str() + "/" + mag.get_den().get_str() + ")";
      }
      if (factors.empty()) {
        out += cs;
      } else if (mag == 1) {
        out += factors;
      } else {
        out += cs + "*" + factors;
      }
    }
  }
  return out;
}

}  // namespace qas
