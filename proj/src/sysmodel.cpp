#include "qas/sysmodel.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qas/poly_io.hpp"

namespace qas {

void HalfSystem::set_F(unsigned alpha, unsigned beta, const ParamPoly& c) {
  if (alpha + beta < 2) throw ModelError("half system degree below 2");
  if (c.is_zero())
    F.erase({alpha, beta});
  else
    F[{alpha, beta}] = c;
}

void HalfSystem::set_G(unsigned alpha, unsigned beta, const ParamPoly& c) {
  if (alpha + beta < 2) throw ModelError("half system degree below 2");
  if (c.is_zero())
    G.erase({alpha, beta});
  else
    G[{alpha, beta}] = c;
}

unsigned HalfSystem::max_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : F) d = std::max(d, e.first + e.second);
  for (const auto& [e, c] : G) d = std::max(d, e.first + e.second);
  return d;
}

TrigPoly AngularForm::phi_at(unsigned k) const {
  if (k < 3 || k - 3 >= phi.size()) return {};
  return phi[k - 3];
}

TrigPoly AngularForm::psi_at(unsigned k) const {
  if (k < 3 || k - 3 >= psi.size()) return {};
  return psi[k - 3];
}

// phi_{d+1} = cos * X_d + sin * Y_d, psi_{d+1} = cos * Y_d - sin * X_d,
// where X_d, Y_d are the degree-d blocks evaluated on the unit circle.
AngularForm polar_decompose(const HalfSystem& h, const ParamPoly& lambda,
                            const ParamPoly& delta) {
  AngularForm a;
  a.lambda = lambda;
  a.delta = delta;
  const unsigned dmax = h.max_degree();
  if (dmax < 2) return a;
  a.phi.assign(dmax - 1, TrigPoly{});
  a.psi.assign(dmax - 1, TrigPoly{});
  for (const auto& [e, c] : h.F) {
    const unsigned idx = e.first + e.second - 2;  // subscript d+1 -> slot
    a.phi[idx] += TrigPoly::cos_pow_sin_pow(e.first + 1, e.second, c);
    a.psi[idx] -= TrigPoly::cos_pow_sin_pow(e.first, e.second + 1, c);
  }
  for (const auto& [e, c] : h.G) {
    const unsigned idx = e.first + e.second - 2;
    a.phi[idx] += TrigPoly::cos_pow_sin_pow(e.first, e.second + 1, c);
    a.psi[idx] += TrigPoly::cos_pow_sin_pow(e.first + 1, e.second, c);
  }
  return a;
}

HalfSystem reflect_time_reverse(const HalfSystem& lower) {
  HalfSystem out;
  for (const auto& [e, c] : lower.F) {
    const Rational f(e.second % 2 == 0 ? -1 : 1);  // -(-1)^beta
    out.F[e] = c.scaled(Scalar(f));
  }
  for (const auto& [e, c] : lower.G) {
    const Rational f(e.second % 2 == 0 ? 1 : -1);  // (-1)^beta
    out.G[e] = c.scaled(Scalar(f));
  }
  return out;
}

std::vector<TrigPoly> radial_series(const AngularForm& a, unsigned N) {
  if (!a.delta.is_zero())
    throw ModelError("radial series requires delta = 0");
  if (N < 1) throw ModelError("radial series order below 1");
  std::vector<TrigPoly> R(N);
  const TrigPoly lam = TrigPoly::constant(a.lambda);
  for (unsigned m = 1; m <= N; ++m) {
    TrigPoly rm = tmul(lam, a.phi_at(m + 2));
    for (unsigned i = 1; i < m; ++i) rm -= tmul(a.psi_at(i + 2), R[m - i - 1]);
    R[m - 1] = rm;
  }
  return R;
}

namespace {

// y-axis: even-in-x F and odd-in-x G keep the half invariant under
// (x, t) -> (-x, -t).
bool half_y_symmetric(const HalfSystem& h) {
  for (const auto& [e, c] : h.F)
    if (e.first % 2 == 1) return false;
  for (const auto& [e, c] : h.G)
    if (e.first % 2 == 0) return false;
  return true;
}

}  // namespace

SymmetryReport symmetry_check(const SwitchingSystem& s) {
  SymmetryReport r;
  const bool delta_zero = s.delta.is_zero();
  r.y_axis = delta_zero && half_y_symmetric(s.upper) && half_y_symmetric(s.lower);
  r.x_axis = delta_zero && s.upper == reflect_time_reverse(s.lower);
  return r;
}

namespace {

using nlohmann::json;

ParamPoly coeff_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return ParamPoly(v.get<long>());
    if (v.is_string()) return parse_poly(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ModelError(where + ": " + e.what());
  }
  throw ModelError(where + ": coefficient must be an integer or a string");
}

HalfSystem half_from_json(const json& j, const std::string& name) {
  if (!j.is_object()) throw ModelError(name + " must be an object");
  HalfSystem h;
  for (const auto& [dkey, block] : j.items()) {
    unsigned degree = 0;
    try {
      size_t pos = 0;
      int d = std::stoi(dkey, &pos);
      if (pos != dkey.size() || d < 2) throw std::invalid_argument("");
      degree = unsigned(d);
    } catch (...) {
      throw ModelError(name + ": bad degree key \"" + dkey + "\"");
    }
    if (!block.is_object())
      throw ModelError(name + "." + dkey + " must be an object");
    for (const auto& [part, table] : block.items()) {
      if (part != "F" && part != "G")
        throw ModelError(name + "." + dkey + ": unknown key \"" + part + "\"");
      if (!table.is_object())
        throw ModelError(name + "." + dkey + "." + part + " must be an object");
      for (const auto& [ekey, v] : table.items()) {
        const std::string where = name + "." + dkey + "." + part + "." + ekey;
        if (ekey.size() != 2 || !isdigit(ekey[0]) || !isdigit(ekey[1]))
          throw ModelError(where + ": exponent key must be two digits");
        const unsigned alpha = unsigned(ekey[0] - '0');
        const unsigned beta = unsigned(ekey[1] - '0');
        if (alpha + beta != degree)
          throw ModelError(where + ": exponents do not sum to the degree");
        ParamPoly c = coeff_from_json(v, where);
        if (part == "F")
          h.set_F(alpha, beta, c);
        else
          h.set_G(alpha, beta, c);
      }
    }
  }
  return h;
}

}  // namespace

SwitchingSystem parse_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("system file: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("system file: top level must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key != "lambda" && key != "delta" && key != "upper" && key != "lower")
      throw ModelError("system file: unknown key \"" + key + "\"");
  }
  if (!j.contains("lambda")) throw ModelError("system file: missing lambda");
  SwitchingSystem s;
  s.lambda = coeff_from_json(j["lambda"], "lambda");
  if (s.lambda.is_zero()) throw ModelError("lambda must be nonzero");
  if (j.contains("delta")) s.delta = coeff_from_json(j["delta"], "delta");
  if (j.contains("upper")) s.upper = half_from_json(j["upper"], "upper");
  if (j.contains("lower")) s.lower = half_from_json(j["lower"], "lower");
  return s;
}

SwitchingSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open system file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

}  // namespace qas
