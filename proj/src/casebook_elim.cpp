#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qas/casebook.hpp"
#include "qas/poly_io.hpp"

namespace qas {

namespace {

// b02^{2j} -> K^j a20^{2j}.  Valid on the branch because the substituted
// chains leave only even powers of b02 in the reduced constants.
ParamPoly even_square_sub(const ParamPoly& p, Var kvar) {
  ParamPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    const unsigned e = m.e[static_cast<size_t>(Var::b02)];
    if (e % 2 != 0) throw CatalogError("odd power of b02 under even-square substitution");
    m.e[static_cast<size_t>(Var::b02)] = 0;
    m.e[static_cast<size_t>(kvar)] += static_cast<uint16_t>(e / 2);
    m.e[static_cast<size_t>(Var::a20)] += static_cast<uint16_t>(e);
    out.add_term(m, coeff);
  }
  return out;
}

ParamPoly divide_out(const ParamPoly& p, const ParamPoly& factor, unsigned power,
                     const char* what) {
  ParamPoly q = p;
  for (unsigned i = 0; i < power; ++i) {
    auto r = q.exact_divide(factor);
    if (!r) throw CatalogError(std::string("expected factor missing: ") + what);
    q = std::move(*r);
  }
  return q;
}

Rational eval_lambda(const ParamPoly& p, const Rational& x) {
  return ratpoly_eval(to_ratpoly(p, Var::lambda), x);
}

struct ElimLayout {
  const char* case_id;
  Var kvar;
  const char* prefix;            // fixture key prefix, "elim.caseA1a."
  const char* constants;         // "caseA1a."
  Rational k0_num, k0_den;       // branch point at lambda = -16/5
  const char* repeated_factor;   // squared factor of the first obstruction
  Rational extra_root;           // its root, excluded by an undefined branch point
  Rational c3_unscale;           // f3sub = c3_unscale * (cleared factors) * C3
  const char* f3_factors;        // ';'-separated, with '^' powers
};

const ElimLayout* elim_layout(const std::string& case_id) {
  static const std::vector<ElimLayout> layouts = {
      {"caseA1a", Var::k, "elim.caseA1a.", "caseA1a.", 16, 3, "lambda+3", -3,
       Rational(-699840, 49), "lambda-1^2;2*lambda-9^1;lambda+3^3"},
      {"caseA1b", Var::kt, "elim.caseA1b.", "caseA1b.", 432, 145, "lambda+9", -9,
       Rational(-17061120, 49), "lambda-1^2;2*lambda-9^1;5*lambda+9^2;lambda+9^3"},
  };
  for (const auto& l : layouts)
    if (case_id == l.case_id) return &l;
  return nullptr;
}

// "poly^power" items; the '^' before the final digit separates the two.
std::vector<std::pair<ParamPoly, unsigned>> parse_powers(const char* spec) {
  std::vector<std::pair<ParamPoly, unsigned>> out;
  std::string s(spec);
  size_t start = 0;
  while (start < s.size()) {
    size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    size_t caret = item.rfind('^');
    out.emplace_back(parse_poly(item.substr(0, caret)),
                     static_cast<unsigned>(std::stoul(item.substr(caret + 1))));
    start = end + 1;
  }
  return out;
}

}  // namespace

EliminationRecord cyclicity_pipeline(const std::string& case_id) {
  const ElimLayout* lay = elim_layout(case_id);
  if (!lay) throw CatalogError("no elimination pipeline for: " + case_id);
  const ConditionSet& cond = load_condition(case_id);
  const std::string pre(lay->prefix);
  const std::string cpre(lay->constants);

  EliminationRecord rec;
  rec.case_id = case_id;
  auto step = [&rec](std::string what, bool ok, std::string detail = "") {
    rec.steps.push_back({std::move(what), ok, std::move(detail)});
  };

  // Reduced focus values agree with the catalogued obstructions.
  {
    FocusValues fv = branch_focus_values(case_id, 8);
    bool all = true;
    std::string detail;
    for (unsigned i = 0; i < 3; ++i) {
      const std::string key = cpre + "f" + std::to_string(i + 1);
      Comparison c = compare_constants(fv.V(6 + i), fixture(key), cond.nonzero);
      if (c.kind != MatchKind::proportional) {
        all = false;
        detail += key + ": " + c.detail + "; ";
      }
    }
    step("branch constants proportional to catalogued obstructions", all, detail);
  }

  const ParamPoly f1 = fixture(cpre + "f1").num;
  const ParamPoly f2 = fixture(cpre + "f2").num;
  const ParamPoly a20_4 = ParamPoly::variable(Var::a20, 4);

  ParamPoly f1k, f2k, f1t;
  try {
    f1k = even_square_sub(f1, lay->kvar);
    f2k = even_square_sub(f2, lay->kvar);
    f1t = divide_out(f1k, a20_4, 1, "a20^4 in the first obstruction");
    step("even powers of b02 folded into the square-ratio variable", true);
  } catch (const CatalogError& e) {
    step("even powers of b02 folded into the square-ratio variable", false, e.what());
    return rec;
  }

  // The second obstruction splits into the catalogued pair of factors.
  const ParamPoly f2a = fixture(pre + "f2a").num;
  const ParamPoly f2b = fixture(pre + "f2b").num;
  {
    const ParamPoly prod = ParamPoly::variable(Var::a20, 6) * f2a * f2b;
    step("second obstruction factors through the catalogued pair",
         f2k.primitive_part() == prod.primitive_part());
  }

  // The catalogued branch point annihilates the first factor.
  const Fixture& k0 = fixture(pre + "k0");
  {
    auto [sub, cleared] = f2a.substitute_cleared(lay->kvar, k0.num, k0.den);
    (void)cleared;
    step("branch point annihilates the first factor", sub.is_zero());
  }

  // Substituted obstructions match the catalogued forms up to content.
  const ParamPoly f1sub = fixture(pre + "f1sub").num;
  const ParamPoly f3sub = fixture(pre + "f3sub").num;
  {
    auto [s1, c1] = f1k.substitute_cleared(lay->kvar, k0.num, k0.den);
    (void)c1;
    ParamPoly f3k = even_square_sub(fixture(cpre + "f3").num, lay->kvar);
    auto [s3, c3] = f3k.substitute_cleared(lay->kvar, k0.num, k0.den);
    (void)c3;
    const bool ok1 = s1.primitive_part() == f1sub.primitive_part();
    const bool ok3 = s3.primitive_part() == f3sub.primitive_part();
    step("substituted obstructions match the catalogued forms", ok1 && ok3,
         ok1 ? (ok3 ? "" : "third differs") : "first differs");
  }

  // The cubic core is reproduced exactly after clearing the known factors.
  {
    try {
      ParamPoly core = divide_out(f3sub, ParamPoly::variable(Var::a20, 8), 1, "a20^8");
      for (const auto& [f, p] : parse_powers(lay->f3_factors)) core = divide_out(core, f, p, "cubic core factor");
      core = core.scaled(Scalar(1 / lay->c3_unscale));
      step("cubic core reproduced exactly", core == fixture("elim.C3").num);
    } catch (const CatalogError& e) {
      step("cubic core reproduced exactly", false, e.what());
    }
  }

  // Resultant of the reduced pair contains the catalogued factor.
  {
    ParamPoly r = resultant(f1t, f2b, lay->kvar);
    const ParamPoly r12 = fixture(pre + "r12").num;
    auto q = r.primitive_part().exact_divide(r12.primitive_part());
    step("catalogued resultant divides the computed one", q.has_value(),
         q ? "cofactor " + emit_poly(*q) : "");
  }

  // Real roots of the quartic resultant factor (catalogued for one case).
  if (has_fixture(pre + "r12quartic")) {
    const RatPoly quartic = to_ratpoly(fixture(pre + "r12quartic").num, Var::lambda);
    auto roots = isolate_real_roots(quartic, Rational(1, 1000000000));
    for (const auto& ro : roots) rec.real_roots.push_back(ro.value.get_d());
    std::sort(rec.real_roots.begin(), rec.real_roots.end());
    step("quartic factor has exactly two real roots", rec.real_roots.size() == 2);
  }

  // Jacobian determinant of the obstruction pair at the branch point.
  {
    const ParamPoly det = f1k.derivative(lay->kvar) * f2k.derivative(Var::lambda) -
                          f1k.derivative(Var::lambda) * f2k.derivative(lay->kvar);
    auto [atk, ek] = det.substitute_cleared(lay->kvar, ParamPoly(Scalar(lay->k0_num)),
                                            ParamPoly(Scalar(lay->k0_den)));
    ParamPoly v = atk.scaled(Scalar(1 / rational_pow(lay->k0_den, ek)));
    auto [atl, el] = v.substitute_cleared(Var::lambda, ParamPoly(Scalar(Rational(-16))),
                                          ParamPoly(Scalar(Rational(5))));
    rec.det_j = atl.scaled(Scalar(1 / rational_pow(Rational(5), el)));
    step("jacobian determinant matches the catalogued value",
         rec.det_j == fixture(pre + "detJ").num);
  }

  // First obstruction at the branch point factors as catalogued.
  ParamPoly u;
  try {
    u = divide_out(f1sub, a20_4, 1, "a20^4 in the substituted obstruction");
    ParamPoly rest = divide_out(u, parse_poly("lambda-1"), 1, "lambda-1");
    rest = divide_out(rest, parse_poly("2*lambda-9"), 1, "2*lambda-9");
    rest = divide_out(rest, parse_poly("5*lambda+16"), 1, "5*lambda+16");
    rest = divide_out(rest, parse_poly(lay->repeated_factor), 2, lay->repeated_factor);
    step("substituted first obstruction factors as catalogued", rest.is_scalar());
  } catch (const CatalogError& e) {
    step("substituted first obstruction factors as catalogued", false, e.what());
    return rec;
  }

  // Each root is excluded except the surviving branch value.
  {
    const std::vector<Rational> roots = {Rational(1), Rational(9, 2), Rational(-16, 5),
                                         lay->extra_root};
    const ParamPoly f3l = divide_out(f3sub, ParamPoly::variable(Var::a20, 8), 1, "a20^8");
    unsigned survivors = 0;
    std::string detail;
    for (const Rational& rho : roots) {
      const Rational den = eval_lambda(k0.den, rho);
      std::string verdict;
      if (den == 0) {
        verdict = "branch point undefined";
      } else {
        const Rational kv = eval_lambda(k0.num, rho) / den;
        if (kv <= 0) {
          verdict = "branch point not positive";
        } else if (eval_lambda(f3l, rho) == 0) {
          verdict = "next obstruction vanishes";
        } else {
          verdict = "survives";
          ++survivors;
          rec.unique_lambda = rho;
        }
      }
      detail += "lambda=" + rho.get_str() + ": " + verdict + "; ";
    }
    rec.unique_lambda_found = (survivors == 1 && rec.unique_lambda == Rational(-16, 5));
    step("exactly one root keeps a positive branch point with a live next obstruction",
         rec.unique_lambda_found, detail);
  }

  return rec;
}

namespace {

std::pair<int, int> quad_root_profile(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0) {
    if (b == 0) return {0, 0};
    const Rational root = -c / b;
    return {root > 0 ? 1 : 0, 1};
  }
  const Rational disc = b * b - 4 * a * c;
  if (disc < 0) return {0, 0};
  if (disc == 0) {
    const Rational root = -b / (2 * a);
    return {root > 0 ? 1 : 0, 1};
  }
  const Rational product = c / a, sum = -b / a;
  int pos;
  if (product < 0)
    pos = 1;
  else if (product == 0)
    pos = sum > 0 ? 1 : 0;
  else
    pos = sum > 0 ? 2 : 0;
  return {pos, 2};
}

struct WindowClaim {
  Rational lambda;
  int claimed;
};

}  // namespace

WindowReport six_cycle_window(const std::string& case_id) {
  const ElimLayout* lay = elim_layout(case_id);
  if (!lay) throw CatalogError("no positive-root window for: " + case_id);

  WindowReport rep;
  rep.case_id = case_id;

  const ParamPoly f1 = fixture(std::string(lay->constants) + "f1").num;
  const ParamPoly f1t =
      divide_out(even_square_sub(f1, lay->kvar), ParamPoly::variable(Var::a20, 4), 1, "a20^4");
  rep.A2 = -f1t.coeff_of(lay->kvar, 2);
  rep.A1 = -f1t.coeff_of(lay->kvar, 1);
  rep.A0 = -f1t.coeff_of(lay->kvar, 0);

  const bool catalogued = has_fixture("window." + case_id + ".A2");
  if (catalogued) {
    rep.coefficients_match = rep.A2 == fixture("window." + case_id + ".A2").num &&
                             rep.A1 == fixture("window." + case_id + ".A1").num &&
                             rep.A0 == fixture("window." + case_id + ".A0").num;
  } else {
    rep.coefficients_match = true;
  }

  const ParamPoly disc = rep.A1 * rep.A1 - ParamPoly(4) * rep.A2 * rep.A0;
  if (catalogued) {
    const ParamPoly split = ParamPoly(-81) * ParamPoly::variable(Var::lambda, 2) *
                            parse_poly("1-lambda").pow(3) *
                            fixture("window." + case_id + ".quintic").num;
    rep.discriminant_match =
        disc == fixture("window." + case_id + ".disc").num && disc == split;
  } else {
    rep.discriminant_match = true;
  }

  const Rational prec(1, 1000000000);
  auto smallest_positive = [&prec](const ParamPoly& p) {
    double best = 0;
    for (const auto& ro : isolate_real_roots(ratpoly_squarefree(to_ratpoly(p, Var::lambda)), prec)) {
      const double v = ro.value.get_d();
      if (v > 1e-9 && (best == 0 || v < best)) best = v;
    }
    return best;
  };
  auto largest_positive = [&prec](const ParamPoly& p) {
    double best = 0;
    for (const auto& ro : isolate_real_roots(ratpoly_squarefree(to_ratpoly(p, Var::lambda)), prec)) {
      const double v = ro.value.get_d();
      if (v > best) best = v;
    }
    return best;
  };
  rep.boundary_root = smallest_positive(disc);
  rep.upper_boundary = largest_positive(rep.A2);

  static const std::map<std::string, std::vector<WindowClaim>> claims = {
      {"caseA1a",
       {{Rational(1, 10), 2}, {Rational(1, 2), 0}, {Rational(11, 10), 0}, {Rational(13, 10), 1},
        {Rational(2), 1}}},
      {"caseA1b", {{Rational(1, 2), 2}, {Rational(3), 1}, {Rational(6), 0}}},
  };
  for (const auto& wc : claims.at(case_id)) {
    WindowSample s;
    s.lambda = wc.lambda;
    s.claimed = wc.claimed;
    auto [pos, real] = quad_root_profile(eval_lambda(rep.A2, wc.lambda),
                                         eval_lambda(rep.A1, wc.lambda),
                                         eval_lambda(rep.A0, wc.lambda));
    s.positive_roots = pos;
    s.real_roots = real;
    rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace qas
