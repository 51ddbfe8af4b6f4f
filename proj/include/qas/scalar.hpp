#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qas {

using Rational = mpq_class;

Rational make_rational(long num, long den);
Rational rational_pow(const Rational& base, unsigned e);

// Polynomial in pi with rational coefficients: the coefficient ring of all
// symbolic values.  pi is transcendental here, powers never collapse.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n);                   // NOLINT: implicit by design
  Scalar(const Rational& r);        // NOLINT
  static Scalar pi(unsigned power = 1, const Rational& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const;         // no pi part
  const Rational& rational_part() const;  // coefficient of pi^0

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(unsigned e) const;
  // Exact division in Q[pi]; nullopt when not an exact multiple.
  std::optional<Scalar> exact_div(const Scalar& d) const;

  double value(double pi_value) const;
  std::string str() const;  // canonical, e.g. "(1/2)*pi^2-3"

  // pi-power -> coefficient, highest power first, no zeros stored.
  const std::map<unsigned, Rational, std::greater<>>& terms() const { return c_; }
  unsigned pi_degree() const { return c_.empty() ? 0 : c_.begin()->first; }

 private:
  std::map<unsigned, Rational, std::greater<>> c_;
  void prune(unsigned p);
};

}  // namespace qas
