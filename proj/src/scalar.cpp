#include "qas/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace qas {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  Rational b = base;
  for (unsigned i = e; i; i >>= 1) {
    if (i & 1) r *= b;
    if (i > 1) b *= b;
  }
  return r;
}

Scalar::Scalar(long n) {
  if (n != 0) c_[0] = n;
}

Scalar::Scalar(const Rational& r) {
  if (r != 0) c_[0] = r;
}

Scalar Scalar::pi(unsigned power, const Rational& coeff) {
  Scalar s;
  if (coeff != 0) s.c_[power] = coeff;
  return s;
}

bool Scalar::is_rational() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

const Rational& Scalar::rational_part() const {
  static const Rational zero = 0;
  auto it = c_.find(0);
  return it == c_.end() ? zero : it->second;
}

void Scalar::prune(unsigned p) {
  auto it = c_.find(p);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [p, q] : o.c_) {
    c_[p] += q;
    prune(p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [p, q] : o.c_) {
    c_[p] -= q;
    prune(p);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [p, q] : c_) r.c_[p] = -q;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [pa, qa] : a.c_) {
    for (const auto& [pb, qb] : b.c_) {
      r.c_[pa + pb] += qa * qb;
      r.prune(pa + pb);
    }
  }
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = 1;
  Scalar b = *this;
  for (unsigned i = e; i; i >>= 1) {
    if (i & 1) r = r * b;
    if (i > 1) b = b * b;
  }
  return r;
}

std::optional<Scalar> Scalar::exact_div(const Scalar& d) const {
  if (d.is_zero()) throw std::invalid_argument("Scalar division by zero");
  Scalar rem = *this;
  Scalar quot;
  const unsigned dd = d.pi_degree();
  const Rational& dl = d.c_.begin()->second;
  while (!rem.is_zero()) {
    unsigned rd = rem.pi_degree();
    if (rd < dd) return std::nullopt;
    Scalar t = Scalar::pi(rd - dd, rem.c_.begin()->second / dl);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

double Scalar::value(double pi_value) const {
  double v = 0;
  for (const auto& [p, q] : c_) v += q.get_d() * std::pow(pi_value, p);
  return v;
}

namespace {

std::string coeff_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
}

}  // namespace

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [p, q] : c_) {
    Rational mag = q < 0 ? Rational(-q) : q;
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? "-" : "+";
    }
    if (p == 0) {
      out += coeff_str(mag);
    } else {
      if (mag != 1) out += coeff_str(mag) + "*";
      out += p == 1 ? "pi" : "pi^" + std::to_string(p);
    }
  }
  return out;
}

}  // namespace qas
