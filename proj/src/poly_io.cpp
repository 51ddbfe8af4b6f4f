#include "qas/poly_io.hpp"

#include <cctype>

namespace qas {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ParamPoly run() {
    ParamPoly out;
    skip_ws();
    bool neg = eat('-');
    out += parse_term(neg);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      out += parse_term(c == '-');
      skip_ws();
    }
    return out;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  unsigned parse_exponent() {
    mpz_class e = parse_integer();
    if (e > 4096) fail("exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected name");
    return s_.substr(start, pos_ - start);
  }

  ParamPoly parse_term(bool negate) {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected term");
    Rational coeff = 1;
    bool saw_coeff = false;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      mpz_class num = parse_integer();
      skip_ws();
      if (!eat('/')) fail("expected '/'");
      mpz_class den = parse_integer();
      if (den == 0) fail("zero denominator");
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      coeff = Rational(num, den);
      coeff.canonicalize();
      saw_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = Rational(parse_integer());
      saw_coeff = true;
    }
    unsigned pi_power = 0;
    Monomial m;
    bool bare_first = !saw_coeff;
    while (true) {
      if (!bare_first && !eat('*')) break;
      bare_first = false;
      skip_ws();
      size_t name_pos = pos_;
      std::string name = parse_name();
      unsigned e = 1;
      if (eat('^')) e = parse_exponent();
      if (name == "pi") {
        pi_power += e;
      } else if (auto v = var_by_name(name)) {
        size_t idx = static_cast<size_t>(*v);
        if (m.e[idx] + e > UINT16_MAX) fail("exponent overflow");
        m.e[idx] = static_cast<uint16_t>(m.e[idx] + e);
      } else {
        throw ParseError("unknown variable '" + name + "'", name_pos);
      }
    }
    if (negate) coeff = -coeff;
    return ParamPoly::term(m, Scalar::pi(pi_power, coeff));
  }
};

void emit_rational(std::string& out, const Rational& r) {
  if (r.get_den() == 1) {
    out += r.get_num().get_str();
  } else {
    out += "(" + r.get_num().get_str() + "/" + r.get_den().get_str() + ")";
  }
}

}  // namespace

ParamPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string emit_poly(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    for (const auto& [pi_power, r] : coeff.terms()) {
      const bool neg = r < 0;
      if (!first || neg) out += neg ? "-" : "+";
      first = false;
      Rational mag = neg ? Rational(-r) : r;
      std::string factors;
      if (pi_power > 0) {
        factors = "pi";
        if (pi_power > 1) factors += "^" + std::to_string(pi_power);
      }
      for (size_t i = 0; i < kNumVars; ++i) {
        if (mono.e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += kVarNames[i];
        if (mono.e[i] > 1) factors += "^" + std::to_string(mono.e[i]);
      }
      if (factors.empty()) {
        emit_rational(out, mag);
      } else {
        if (mag != 1) {
          emit_rational(out, mag);
          out += "*";
        }
        out += factors;
      }
    }
  }
  return out;
}

}  // namespace qas
