#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qas/scalar.hpp"

namespace qas {

// Fixed variable order; canonical term order and emission depend on it.
enum class Var : uint8_t {
  delta = 0, lambda, a20, a11, a02, b20, b11, b02, k, kt,
};
inline constexpr size_t kNumVars = 10;
extern const std::array<const char*, kNumVars> kVarNames;
std::optional<Var> var_by_name(const std::string& name);

struct Monomial {
  std::array<uint16_t, kNumVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < kNumVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

// Graded lex, larger terms first: leading term is begin() and emission
// order is iteration order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class ParamPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

  ParamPoly() = default;
  ParamPoly(long n);           // NOLINT: implicit by design
  ParamPoly(const Scalar& s);  // NOLINT
  static ParamPoly variable(Var v, unsigned power = 1);
  static ParamPoly term(const Monomial& m, const Scalar& s);

  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const;
  const Scalar& scalar_part() const;  // coefficient of the unit monomial
  size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o);
  bool operator==(const ParamPoly& o) const { return t_ == o.t_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  ParamPoly scaled(const Scalar& s) const;
  ParamPoly pow(unsigned e) const;

  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  // Coefficient of v^power, a polynomial in the remaining variables.
  ParamPoly coeff_of(Var v, unsigned power) const;
  ParamPoly derivative(Var v) const;

  ParamPoly substitute(Var v, const ParamPoly& value) const;
  // p with v := num/den and the result cleared by den^(deg_v p).
  // Returned power is that clearing exponent.
  std::pair<ParamPoly, unsigned> substitute_cleared(Var v, const ParamPoly& num,
                                                    const ParamPoly& den) const;
  Scalar eval(const std::map<Var, Rational>& point) const;
  double value(const std::map<Var, double>& point, double pi_value) const;

  // Greedy leading-term division; exact quotient or nullopt.
  std::optional<ParamPoly> exact_divide(const ParamPoly& divisor) const;
  // Largest scalar-content-free part: divides out the gcd of all rational
  // coefficients and the minimal common pi power (sign normalized so the
  // leading coefficient's top pi term is positive).
  ParamPoly primitive_part() const;

  std::string str() const;  // canonical emission, whitespace-free

  void add_term(const Monomial& m, const Scalar& s);  // used by kernels/parser

 private:
  TermMap t_;
};

ParamPoly operator*(const Scalar& s, const ParamPoly& p);

}  // namespace qas
